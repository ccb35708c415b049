#include "logsplit/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "logsplit/error.hpp"

namespace logsplit {

SplittingType::SplittingType(std::vector<int> roots) : roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end(), std::greater<>());
}

int SplittingType::sum() const noexcept { return std::accumulate(roots_.begin(), roots_.end(), 0); }

std::string SplittingType::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(roots_[i]);
  }
  return out + "]";
}

namespace {

constexpr std::array<std::pair<ClassificationKind, std::string_view>, 7> kKindNames{{
    {ClassificationKind::Character, "Character"},
    {ClassificationKind::TwoPunctureGeneral, "TwoPunctureGeneral"},
    {ClassificationKind::ThreeCharacter, "ThreeCharacter"},
    {ClassificationKind::ThreeDim2Decomposable, "ThreeDim2Decomposable"},
    {ClassificationKind::ThreeDim2ReducibleSplit, "ThreeDim2ReducibleSplit"},
    {ClassificationKind::ThreeDim2ReducibleAmbiguous, "ThreeDim2ReducibleAmbiguous"},
    {ClassificationKind::ThreeDim2Irreducible, "ThreeDim2Irreducible"},
}};

void check_branch(double q, const char* which) {
  if (!(q >= 0.0 && q < 1.0)) {
    throw Error(ErrorCode::OutOfBranch, std::string(which) + " = " + std::to_string(q) + " outside [0,1)");
  }
}

void check_candidates(const ClassificationReport& report) {
  for (const auto& c : report.candidates) {
    if (c.sum() != report.c1) {
      throw Error(ErrorCode::InternalInconsistency, "candidate " + c.str() + " does not sum to c1 = " +
                                                        std::to_string(report.c1));
    }
  }
}

ClassificationReport start_report(const PuncturedRepresentation& prep, const Tolerances& tols) {
  ClassificationReport report;
  report.chern = ohtsuki_c1(prep, tols.integrality);
  report.c1 = report.chern.c1;
  report.warnings = prep.branch_warnings();
  return report;
}

}  // namespace

std::string_view to_string(ClassificationKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "Unknown";
}

ClassificationKind kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  throw Error(ErrorCode::ParseError, "unknown classification kind '" + std::string(name) + "'");
}

int character_root(const Rational& q0, const Rational& q1) {
  for (const auto* q : {&q0, &q1}) {
    if (*q < Rational(0) || *q >= Rational(1)) {
      throw Error(ErrorCode::OutOfBranch, "q = " + q->str() + " outside [0,1)");
    }
  }
  if (q0.is_zero() && q1.is_zero()) return 0;
  return q0 + q1 <= Rational(1) ? -1 : -2;
}

int character_root(double q0, double q1, double tol) {
  check_branch(q0, "q0");
  check_branch(q1, "q1");
  if (q0 == 0.0 && q1 == 0.0) return 0;
  return q0 + q1 <= 1.0 + tol ? -1 : -2;
}

int character_root(const BranchDatum& q0, const BranchDatum& q1, double tol) {
  if (q0.exact && q1.exact) return character_root(*q0.exact, *q1.exact);
  return character_root(q0.value, q1.value, tol);
}

ClassificationReport split_two_punctures(const PuncturedRepresentation& prep, const Tolerances& tols) {
  if (prep.rep.punctures() != 2) {
    throw Error(ErrorCode::InvalidRepresentation, "split_two_punctures needs exactly 2 punctures");
  }
  ClassificationReport report = start_report(prep, tols);
  const std::size_t n = prep.rep.dim();
  report.kind = n == 1 ? ClassificationKind::Character : ClassificationKind::TwoPunctureGeneral;

  const std::size_t off_cut = prep.local_eigen.front().count_off_cut();
  if (static_cast<int>(off_cut) != -report.c1) {
    throw Error(ErrorCode::InternalInconsistency, std::to_string(off_cut) +
                                                      " eigenvalues off the positive axis but c1 = " +
                                                      std::to_string(report.c1));
  }
  std::vector<int> roots(n, 0);
  std::fill(roots.begin(), roots.begin() + static_cast<std::ptrdiff_t>(off_cut), -1);
  report.candidates.emplace_back(std::move(roots));
  check_candidates(report);
  return report;
}

namespace {

using Vec2 = std::array<ComplexScalar, 2>;

double norm(const Vec2& v) { return std::hypot(std::abs(v[0].value()), std::abs(v[1].value())); }

Vec2 apply(const Matrix& m, const Vec2& v) {
  return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

bool is_scalar(const Matrix& m, double tol) {
  const double scale = 1.0 + m.max_abs();
  if (!m(0, 1).negligible(tol, scale) || !m(1, 0).negligible(tol, scale)) return false;
  if (const auto same = exact_compare(m(0, 0), m(1, 1))) return *same;
  return (m(0, 0) - m(1, 1)).negligible(tol, scale);
}

// One eigendirection per eigenvalue cluster of a non-scalar 2x2 matrix,
// paired with the index of its cluster.
std::vector<std::pair<Vec2, std::size_t>> eigendirections(const Matrix& m, const EigenData& data, double tol) {
  std::vector<std::pair<Vec2, std::size_t>> out;
  const double scale = 1.0 + m.max_abs();
  for (std::size_t k = 0; k < data.pairs.size(); ++k) {
    const ComplexScalar& lambda = data.pairs[k].value;
    const Vec2 r0{m(0, 0) - lambda, m(0, 1)};
    const Vec2 r1{m(1, 0), m(1, 1) - lambda};
    const bool r0_zero = r0[0].negligible(tol, scale) && r0[1].negligible(tol, scale);
    const bool r1_zero = r1[0].negligible(tol, scale) && r1[1].negligible(tol, scale);
    if (r0_zero && r1_zero) continue;
    const Vec2& row = r1_zero || (!r0_zero && norm(r0) >= norm(r1)) ? r0 : r1;
    out.push_back({Vec2{-row[1], row[0]}, k});
  }
  return out;
}

std::size_t nearest_cluster(const EigenData& data, std::complex<double> value) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < data.pairs.size(); ++k) {
    if (std::abs(data.pairs[k].value.value() - value) < std::abs(data.pairs[best].value.value() - value)) best = k;
  }
  return best;
}

// The eigenvalue left over once `taken` acts on a line: the other cluster,
// or the same one for a double eigenvalue.
const ComplexScalar& remaining(const EigenData& data, std::size_t taken) {
  if (data.pairs.size() == 1) return data.pairs.front().value;
  return data.pairs[1 - taken].value;
}

// Eigenvalue by which m acts on the invariant direction v.
std::size_t action_on(const Matrix& m, const EigenData& data, const Vec2& v) {
  const Vec2 w = apply(m, v);
  const std::size_t k = std::abs(v[0].value()) >= std::abs(v[1].value()) ? 0 : 1;
  return nearest_cluster(data, w[k].value() / v[k].value());
}

}  // namespace

InvariantLineReport invariant_lines(const Matrix& m0, const Matrix& m1, double tol) {
  if (m0.dim() != 2 || m1.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "invariant_lines needs 2x2 matrices");
  const EigenData e0 = eigenvalues(m0, tol);
  const EigenData e1 = eigenvalues(m1, tol);
  InvariantLineReport report;

  const bool scalar0 = is_scalar(m0, tol);
  const bool scalar1 = is_scalar(m1, tol);
  if (scalar0 && scalar1) {
    const ComplexScalar& c0 = e0.pairs.front().value;
    const ComplexScalar& c1 = e1.pairs.front().value;
    for (const Vec2& v : {Vec2{ComplexScalar::one(), ComplexScalar{}}, Vec2{ComplexScalar{}, ComplexScalar::one()}}) {
      report.lines.push_back({v, {c0, c1}, {c0, c1}});
    }
    report.decomposable = true;
    return report;
  }

  if (scalar0) {
    const ComplexScalar& c0 = e0.pairs.front().value;
    for (const auto& [v, k] : eigendirections(m1, e1, tol)) {
      report.lines.push_back({v, {c0, e1.pairs[k].value}, {c0, remaining(e1, k)}});
    }
  } else {
    for (const auto& [v, k] : eigendirections(m0, e0, tol)) {
      const Vec2 w = apply(m1, v);
      const ComplexScalar wedge = w[0] * v[1] - w[1] * v[0];
      if (!wedge.negligible(tol, norm(w) * norm(v))) continue;
      const std::size_t j = action_on(m1, e1, v);
      report.lines.push_back({v, {e0.pairs[k].value, e1.pairs[j].value}, {remaining(e0, k), remaining(e1, j)}});
    }
  }
  report.decomposable = report.lines.size() >= 2;
  return report;
}

ClassificationReport classify_dim2(const PuncturedRepresentation& prep, const Tolerances& tols) {
  if (prep.rep.punctures() != 3 || prep.rep.dim() != 2) {
    throw Error(ErrorCode::InvalidRepresentation, "classify_dim2 needs a 2-dimensional representation on 3 punctures");
  }
  ClassificationReport report = start_report(prep, tols);
  const auto& gens = prep.rep.generators();
  InvariantLineReport lines = invariant_lines(gens[0], gens[1], tols.tol);

  const auto root_of = [&](const std::pair<ComplexScalar, ComplexScalar>& pair) {
    return character_root(normalized_arg(pair.first, tols.tol), normalized_arg(pair.second, tols.tol), tols.tol);
  };

  const int zeta = report.c1;
  if (lines.lines.empty()) {
    report.kind = ClassificationKind::ThreeDim2Irreducible;
    if (zeta % 2 == 0) {
      report.candidates.emplace_back(std::vector<int>{zeta / 2, zeta / 2});
    } else {
      report.candidates.emplace_back(std::vector<int>{(zeta + 1) / 2, (zeta - 1) / 2});
    }
  } else if (lines.decomposable) {
    report.kind = ClassificationKind::ThreeDim2Decomposable;
    report.candidates.emplace_back(std::vector<int>{root_of(lines.lines[0].sub), root_of(lines.lines[1].sub)});
  } else {
    const int sub = root_of(lines.lines.front().sub);
    const int quotient = root_of(lines.lines.front().quotient);
    if (sub == -2 && quotient == 0) {
      report.kind = ClassificationKind::ThreeDim2ReducibleAmbiguous;
      if (zeta != -2) {
        throw Error(ErrorCode::InternalInconsistency,
                    "flag with roots (-2, 0) must have c1 = -2, got " + std::to_string(zeta));
      }
      report.candidates.emplace_back(std::vector<int>{-1, -1});
      report.candidates.emplace_back(std::vector<int>{0, -2});
      report.warnings.push_back(
          "AmbiguousExtension: invariant line carries root -2 and the quotient root 0; "
          "the bundle is O(-1)+O(-1) or O(0)+O(-2) depending on the extension class");
    } else {
      report.kind = ClassificationKind::ThreeDim2ReducibleSplit;
      report.candidates.emplace_back(std::vector<int>{sub, quotient});
    }
  }
  report.invariant_lines = std::move(lines);
  check_candidates(report);
  return report;
}

ClassificationReport classify(const Representation& rep, const Tolerances& tols) {
  if (rep.punctures() == 3 && rep.dim() >= 3) {
    throw Error(ErrorCode::UnsupportedCase, "three punctures with dimension " + std::to_string(rep.dim()) +
                                                " is outside the implemented classification");
  }
  const PuncturedRepresentation prep = build(rep, tols.tol);
  if (rep.punctures() == 2) return split_two_punctures(prep, tols);
  if (rep.dim() == 2) return classify_dim2(prep, tols);

  ClassificationReport report = start_report(prep, tols);
  report.kind = ClassificationKind::ThreeCharacter;
  const int root = character_root(prep.local_eigen[0].pairs.front().q, prep.local_eigen[1].pairs.front().q, tols.tol);
  if (root != report.c1) {
    throw Error(ErrorCode::InternalInconsistency,
                "character root " + std::to_string(root) + " disagrees with c1 = " + std::to_string(report.c1));
  }
  report.candidates.emplace_back(std::vector<int>{root});
  check_candidates(report);
  return report;
}

}  // namespace logsplit
