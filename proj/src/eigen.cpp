#include "logsplit/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include "logsplit/error.hpp"

namespace logsplit {

BranchDatum normalized_arg(const ComplexScalar& z, double tol) {
  if (z.is_exact_zero() || z.value() == std::complex<double>{}) {
    throw Error(ErrorCode::ZeroArgument, "argument of zero is undefined");
  }
  if (const auto polar = z.exact_polar()) return BranchDatum{polar->q.to_double(), polar->q, false};

  const double x = z.value().real();
  const double y = z.value().imag();
  // Lower half-plane values mirror the upper one, so q(conj z) = 1 - q(z)
  // holds bit-for-bit.
  const double upper = std::atan2(std::fabs(y), x) / (2.0 * std::numbers::pi);
  const double raw = y < 0.0 ? 1.0 - upper : upper;
  const double gap = std::min(raw, 1.0 - raw);
  BranchDatum out;
  out.value = gap < tol ? 0.0 : raw;
  out.near_cut = gap < 10.0 * tol;
  return out;
}

std::size_t EigenData::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& p : pairs) total += p.multiplicity;
  return total;
}

std::size_t EigenData::count_off_cut() const {
  std::size_t count = 0;
  for (const auto& p : pairs)
    if (!p.q.is_zero()) count += p.multiplicity;
  return count;
}

bool EigenData::any_near_cut() const {
  return std::any_of(pairs.begin(), pairs.end(), [](const EigenPair& p) { return p.q.near_cut; });
}

std::vector<std::complex<double>> aberth_roots(const std::vector<std::complex<double>>& monic,
                                               const RootFinderOptions& options) {
  using C = std::complex<double>;
  const std::size_t n = monic.size() - 1;
  if (monic.empty()) throw Error(ErrorCode::InternalInconsistency, "empty polynomial");
  if (n == 0) return {};
  if (n == 1) return {-monic[1] / monic[0]};

  constexpr double eps = std::numeric_limits<double>::epsilon();
  double radius = std::pow(std::abs(monic[n] / monic[0]), 1.0 / static_cast<double>(n));
  if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;

  std::vector<C> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.7;
    z[k] = std::polar(radius, angle);
  }
  std::vector<bool> done(n, false);
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);

  // One Aberth update of z[k]; returns false once the residual is at
  // rounding level.
  const auto update = [&](std::size_t k) {
    C p = monic[0];
    C dp = 0.0;
    double bound = std::abs(monic[0]);
    const double az = std::abs(z[k]);
    for (std::size_t j = 1; j <= n; ++j) {
      dp = dp * z[k] + p;
      p = p * z[k] + monic[j];
      bound = bound * az + std::abs(monic[j]);
    }
    if (std::abs(p) <= 8.0 * static_cast<double>(n) * eps * bound) return false;
    C repulsion = 0.0;
    bool collided = dp == C{};
    for (std::size_t j = 0; j < n && !collided; ++j) {
      if (j == k) continue;
      const C diff = z[k] - z[j];
      if (diff == C{}) collided = true;
      else repulsion += 1.0 / diff;
    }
    if (collided) {
      z[k] += (1.0 + az) * 1e-6 * C(jitter(rng), jitter(rng));
      return true;
    }
    const C ratio = p / dp;
    const C step = ratio / (1.0 - ratio * repulsion);
    z[k] -= step;
    return std::abs(step) > eps * std::abs(z[k]);
  };

  // Full Aberth sweep ignoring the residual stop, so that clusters around a
  // multiple root settle symmetrically and their mean is accurate.
  const auto polish = [&] {
    for (std::size_t k = 0; k < n; ++k) {
      C p = monic[0];
      C dp = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        dp = dp * z[k] + p;
        p = p * z[k] + monic[j];
      }
      if (p == C{} || dp == C{}) continue;
      C repulsion = 0.0;
      bool collided = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        const C diff = z[k] - z[j];
        if (diff == C{}) collided = true;
        else repulsion += 1.0 / diff;
      }
      if (collided) continue;
      const C ratio = p / dp;
      const C step = ratio / (1.0 - ratio * repulsion);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) z[k] -= step;
    }
  };

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      if (update(k)) all_done = false;
      else done[k] = true;
    }
    if (all_done) {
      for (int sweep = 0; sweep < 8; ++sweep) polish();
      return z;
    }
    if (iter == options.restart_after) {
      for (std::size_t k = 0; k < n; ++k)
        if (!done[k]) z[k] *= 1.0 + 1e-3 * C(jitter(rng), jitter(rng));
    }
  }
  throw Error(ErrorCode::RootFindingDivergence,
              "Aberth iteration did not converge within " + std::to_string(options.max_iterations) + " iterations");
}

namespace {

using ExactPoly = std::vector<GaussianRational>;  // leading coefficient first

GaussianRational mul(const GaussianRational& a, const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational sub(const GaussianRational& a, const GaussianRational& b) { return {a.re - b.re, a.im - b.im}; }

// Quotient of p by a monic divisor, or nullopt if the remainder is nonzero.
std::optional<ExactPoly> divide_exact(const ExactPoly& p, const ExactPoly& divisor) {
  const std::size_t dp = p.size() - 1;
  const std::size_t dd = divisor.size() - 1;
  if (dd > dp) return std::nullopt;
  ExactPoly rem = p;
  ExactPoly quot(dp - dd + 1);
  for (std::size_t i = 0; i <= dp - dd; ++i) {
    const GaussianRational lead = rem[i];
    quot[i] = lead;
    if (lead.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] = sub(rem[i + j], mul(lead, divisor[j]));
  }
  for (std::size_t i = dp - dd + 1; i <= dp; ++i)
    if (!rem[i].is_zero()) return std::nullopt;
  return quot;
}

GaussianRational evaluate(const ExactPoly& p, const GaussianRational& x) {
  GaussianRational acc = p[0];
  for (std::size_t i = 1; i < p.size(); ++i) {
    acc = mul(acc, x);
    acc.re += p[i].re;
    acc.im += p[i].im;
  }
  return acc;
}

std::vector<std::int64_t> poly_div_int(const std::vector<std::int64_t>& p, const std::vector<std::int64_t>& d) {
  std::vector<std::int64_t> rem = p;
  std::vector<std::int64_t> quot(p.size() - d.size() + 1);
  for (std::size_t i = 0; i < quot.size(); ++i) {
    quot[i] = rem[i];
    for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= quot[i] * d[j];
  }
  return quot;
}

// Cyclotomic polynomials of every order s whose degree phi(s) fits in an
// 8x8 characteristic polynomial (s <= 30), integer coefficients leading first.
const std::vector<std::vector<std::int64_t>>& cyclotomic_table() {
  static const auto table = [] {
    constexpr int kMaxOrder = 30;
    std::vector<std::vector<std::int64_t>> phi(kMaxOrder + 1);
    for (int s = 1; s <= kMaxOrder; ++s) {
      std::vector<std::int64_t> poly(static_cast<std::size_t>(s) + 1, 0);
      poly.front() = 1;
      poly.back() = -1;
      for (int d = 1; d < s; ++d)
        if (s % d == 0) poly = poly_div_int(poly, phi[static_cast<std::size_t>(d)]);
      phi[static_cast<std::size_t>(s)] = poly;
    }
    return phi;
  }();
  return table;
}

std::vector<std::complex<double>> to_values(const ExactPoly& p) {
  std::vector<std::complex<double>> out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c.re.to_double(), c.im.to_double());
  return out;
}

std::optional<GaussianRational> certify_root(const ExactPoly& p, std::complex<double> approx) {
  constexpr std::int64_t kMaxDen = 1'000'000;
  const double slack = 1e-6 * (1.0 + std::abs(approx));
  GaussianRational candidate;
  if (!Rational::approximate(approx.real(), slack, kMaxDen, candidate.re)) return std::nullopt;
  if (!Rational::approximate(approx.imag(), slack, kMaxDen, candidate.im)) return std::nullopt;
  try {
    if (evaluate(p, candidate).is_zero()) return candidate;
  } catch (const RationalOverflow&) {
  }
  return std::nullopt;
}

// Splits off every exactly certifiable root; `rest` receives the remaining
// floating approximations.
std::vector<ComplexScalar> exact_roots(ExactPoly p, std::vector<std::complex<double>>& rest,
                                       const RootFinderOptions& options) {
  std::vector<ComplexScalar> found;
  const auto& table = cyclotomic_table();
  for (std::size_t s = 1; s < table.size(); ++s) {
    ExactPoly divisor;
    for (auto c : table[s]) divisor.push_back({Rational(c), Rational(0)});
    while (p.size() >= divisor.size()) {
      auto quot = divide_exact(p, divisor);
      if (!quot) break;
      p = std::move(*quot);
      for (std::size_t k = 1; k <= s; ++k) {
        if (std::gcd(k, s) != 1) continue;
        found.push_back(ComplexScalar::polar(1.0, Rational(static_cast<std::int64_t>(k % s), static_cast<std::int64_t>(s))));
      }
    }
  }
  while (p.size() > 1) {
    const auto approx = aberth_roots(to_values(p), options);
    bool deflated = false;
    for (const auto& z : approx) {
      const auto root = certify_root(p, z);
      if (!root) continue;
      auto quot = divide_exact(p, ExactPoly{{Rational(1), Rational(0)}, {-root->re, -root->im}});
      if (!quot) continue;
      p = std::move(*quot);
      found.push_back(ComplexScalar::exact(root->re, root->im));
      deflated = true;
      break;
    }
    if (!deflated) {
      rest = approx;
      break;
    }
  }
  return found;
}

}  // namespace

std::vector<ComplexScalar> eigenvalue_list(const Matrix& a, const RootFinderOptions& options) {
  const std::size_t n = a.dim();
  if (a.is_upper_triangular() || a.is_lower_triangular()) {
    std::vector<ComplexScalar> diag;
    for (std::size_t i = 0; i < n; ++i) diag.push_back(a(i, i));
    return diag;
  }
  const auto coeffs = char_poly(a);
  const bool exact = std::all_of(coeffs.begin(), coeffs.end(),
                                 [](const ComplexScalar& c) { return c.exact_cartesian().has_value(); });
  if (exact) {
    ExactPoly p;
    for (const auto& c : coeffs) p.push_back(*c.exact_cartesian());
    try {
      std::vector<std::complex<double>> rest;
      auto roots = exact_roots(std::move(p), rest, options);
      for (const auto& z : rest) roots.emplace_back(z);
      return roots;
    } catch (const RationalOverflow&) {
      // Fall through to the floating path.
    }
  }
  std::vector<std::complex<double>> values;
  for (const auto& c : coeffs) values.push_back(c.value());
  std::vector<ComplexScalar> roots;
  for (const auto& z : aberth_roots(values, options)) roots.emplace_back(z);
  return roots;
}

EigenData eigenvalues(const Matrix& a, double tol, const RootFinderOptions& options) {
  const auto roots = eigenvalue_list(a, options);
  const std::size_t n = roots.size();
  double max_abs = 0.0;
  for (const auto& r : roots) max_abs = std::max(max_abs, r.abs());
  const double radius = tol * (1.0 + max_abs);

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto exact = exact_compare(roots[i], roots[j]);
      const bool same = exact ? *exact : std::abs(roots[i].value() - roots[j].value()) < radius;
      if (same) parent[find(i)] = find(j);
    }
  }

  EigenData out;
  std::vector<std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (std::find(seen.begin(), seen.end(), root) != seen.end()) continue;
    seen.push_back(root);
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < n; ++j)
      if (find(j) == root) members.push_back(j);

    std::optional<ComplexScalar> rep;
    std::complex<double> mean{};
    for (auto m : members) {
      if (!rep && roots[m].is_exact()) rep = roots[m];
      mean += roots[m].value();
    }
    if (!rep) rep = ComplexScalar{mean / static_cast<double>(members.size())};

    if (rep->is_exact_zero() || (!rep->is_exact() && rep->abs() < tol)) {
      throw Error(ErrorCode::ZeroEigenvalue, "eigenvalue " + rep->str() + " is zero within tolerance");
    }
    EigenPair pair;
    pair.value = *rep;
    pair.multiplicity = members.size();
    pair.q = normalized_arg(*rep, tol);
    const auto polar = rep->exact_polar();
    pair.ln_r = polar ? std::log(polar->r) : std::log(rep->abs());
    out.pairs.push_back(std::move(pair));
  }
  std::sort(out.pairs.begin(), out.pairs.end(), [](const EigenPair& x, const EigenPair& y) {
    if (x.q.value != y.q.value) return x.q.value < y.q.value;
    return x.ln_r < y.ln_r;
  });
  return out;
}

}  // namespace logsplit
