// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every valid input exercised by criteria 1-7 is kept and
// re-checked for the closure invariants in criterion 8.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "logsplit/commands.hpp"
#include "logsplit/error.hpp"
#include "logsplit/splitting.hpp"
#include "test_support.hpp"

namespace {

using namespace logsplit;
using S = ComplexScalar;
using testing::Cx;

constexpr double kIntegralityBudget = 1e-6;

std::vector<Representation> g_valid_inputs;

ClassificationReport classify_kept(const Representation& rep) {
  ClassificationReport r = classify(rep);
  g_valid_inputs.push_back(rep);
  return r;
}

std::string describe(const std::vector<SplittingType>& candidates) {
  std::string out;
  for (const auto& c : candidates) out += (out.empty() ? "" : " | ") + c.str();
  return out;
}

// Failure detail, or empty on success.
using Check = std::function<std::string()>;

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;  // 0: no runtime bound
  Check run;
};

std::string golden() {
  const ClassificationReport r = classify_kept(modular_golden_representation());
  if (r.kind != ClassificationKind::ThreeDim2Irreducible) return "kind " + std::string(to_string(r.kind));
  if (r.c1 != -2 || r.chern.exact_q_sum != Rational(2)) return "c1 = " + std::to_string(r.c1) + " (not exact -2)";
  if (r.candidates != std::vector<SplittingType>{SplittingType({-1, -1})}) return "got " + describe(r.candidates);
  return {};
}

std::string character_table() {
  int checked = 0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const int got = character_root(Rational(a, 4), Rational(b, 4));
      const int want = testing::oracle_character_root(a, b, 4);
      if (got != want) {
        return "(" + std::to_string(a) + "/4, " + std::to_string(b) + "/4): " + std::to_string(got) +
               " != " + std::to_string(want);
      }
      ++checked;
    }
  }
  return checked == 16 ? std::string() : "checked " + std::to_string(checked);
}

std::string two_puncture_suite() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = dim(rng);
    const Matrix m = testing::random_invertible(rng, n, 1e-6);
    const Representation rep(2, {m});
    const ClassificationReport r = classify_kept(rep);
    const std::string at = "trial " + std::to_string(trial) + " (n = " + std::to_string(n) + "): ";
    if (r.candidates.size() != 1) return at + "expected one candidate";
    for (int root : r.candidates[0].roots())
      if (root != 0 && root != -1) return at + "root " + std::to_string(root);
    std::size_t off_axis = 0;
    for (const auto& p : eigenvalues(m).pairs)
      if (testing::oracle_q(p.value.value()) != 0.0) off_axis += p.multiplicity;
    if (static_cast<std::size_t>(-r.c1) != off_axis) {
      return at + "-c1 = " + std::to_string(-r.c1) + " but " + std::to_string(off_axis) + " eigenvalues off the axis";
    }
    if (r.chern.integrality_defect > kIntegralityBudget) {
      return at + "integrality defect " + std::to_string(r.chern.integrality_defect);
    }
    const Matrix s = testing::random_conjugator(rng, n, 1e3);
    const Representation conj = conjugate(rep, s);
    const ClassificationReport rc = classify_kept(conj);
    if (rc.candidates != r.candidates || rc.c1 != r.c1) {
      return at + "conjugation changed " + describe(r.candidates) + " to " + describe(rc.candidates);
    }
  }
  return {};
}

std::string auxiliary_character() {
  const Representation chi(3, {Matrix{{S::exact(-1)}}, Matrix{{S::exact(-1)}}});
  const ClassificationReport r = classify_kept(chi);
  if (r.c1 != -1 || r.candidates != std::vector<SplittingType>{SplittingType({-1})}) {
    return "got c1 = " + std::to_string(r.c1) + ", " + describe(r.candidates);
  }
  return {};
}

// A 2x2 pair shares an eigenvector iff its commutator is singular.
double commutator_det(const Matrix& a, const Matrix& b) {
  return std::abs(testing::leibniz_det(a * b - b * a));
}

std::string irreducible_suite() {
  std::mt19937_64 rng(7);
  int accepted = 0;
  while (accepted < 200) {
    const Matrix a = testing::random_invertible(rng, 2, 1e-3);
    const Matrix b = testing::random_invertible(rng, 2, 1e-3);
    if (commutator_det(a, b) < 1e-4) continue;
    ++accepted;
    const ClassificationReport r = classify_kept(Representation(3, {a, b}));
    const std::string at = "pair " + std::to_string(accepted) + ": ";
    if (r.kind != ClassificationKind::ThreeDim2Irreducible) return at + "kind " + std::string(to_string(r.kind));
    if (r.candidates.size() != 1) return at + "expected one candidate";
    const auto& roots = r.candidates[0].roots();
    const int gap = roots[0] - roots[1];
    if (gap > 1) return at + "gap " + std::to_string(gap);
    if (roots[0] + roots[1] != r.c1) return at + "roots do not sum to c1";
    if ((r.c1 % 2 == 0) != (gap == 0)) return at + "parity mismatch for c1 = " + std::to_string(r.c1);
  }
  return {};
}

std::string decomposable_oracle() {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> denominator(2, 12);
  std::uniform_real_distribution<double> modulus(0.25, 4.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int s = denominator(rng);
    std::uniform_int_distribution<int> numerator(0, s - 1);
    int p[4];
    for (int& x : p) x = numerator(rng);
    const Matrix m0 = Matrix::diagonal({S::polar(modulus(rng), Rational(p[0], s)), S::polar(modulus(rng), Rational(p[1], s))});
    const Matrix m1 = Matrix::diagonal({S::polar(modulus(rng), Rational(p[2], s)), S::polar(modulus(rng), Rational(p[3], s))});
    const Representation rep(3, {m0, m1});
    const ClassificationReport r = classify_dim2(build(rep));
    g_valid_inputs.push_back(rep);
    const SplittingType want({testing::oracle_character_root(p[0], p[2], s), testing::oracle_character_root(p[1], p[3], s)});
    if (r.kind != ClassificationKind::ThreeDim2Decomposable || r.candidates != std::vector<SplittingType>{want}) {
      std::ostringstream msg;
      msg << "trial " << trial << " (s = " << s << ", p = " << p[0] << "," << p[1] << "," << p[2] << "," << p[3]
          << "): " << to_string(r.kind) << " " << describe(r.candidates) << ", want " << want.str();
      return msg.str();
    }
  }
  return {};
}

std::string ambiguity() {
  const S p = S::polar(1.0, Rational(3, 5));
  const Representation rep(3, {Matrix{{p, S{}}, {S{}, S::one()}}, Matrix{{p, S::one()}, {S{}, S::one()}}});
  const ClassificationReport r = classify_kept(rep);
  const std::vector<SplittingType> want{SplittingType({-1, -1}), SplittingType({0, -2})};
  if (r.kind != ClassificationKind::ThreeDim2ReducibleAmbiguous) return "kind " + std::string(to_string(r.kind));
  if (r.c1 != -2) return "c1 = " + std::to_string(r.c1);
  if (r.candidates != want) return "got " + describe(r.candidates);
  return {};
}

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

std::string closure_invariants() {
  if (g_valid_inputs.empty()) return "no inputs recorded";
  for (std::size_t k = 0; k < g_valid_inputs.size(); ++k) {
    const PuncturedRepresentation prep = build(g_valid_inputs[k]);
    const ChernResult chern = ohtsuki_c1(prep, kIntegralityBudget);
    if (!(prep.ln_r_closure_defect < kClosureTolerance * prep.ln_r_scale)) {
      return "input " + std::to_string(k) + ": ln|lambda| closure defect " + std::to_string(prep.ln_r_closure_defect);
    }
    if (!(chern.integrality_defect < kIntegralityBudget)) {
      return "input " + std::to_string(k) + ": integrality defect " + std::to_string(chern.integrality_defect);
    }
  }

  // Violations surface as errors, never as results.
  const Matrix s = Matrix::from_values(2, {1.0, 0.5, 0.25, 1.0});
  const Matrix merged = s * Matrix::from_values(2, {0.5, 0.0, 0.0, 4.0}) * mat_inverse(s, 1e-12);
  const ErrorCode closure = error_of([&] { build(Representation(2, {merged}), 0.9); });
  if (closure != ErrorCode::ClosureDefect) return "modulus violation not reported as ClosureDefect";

  // Any floating residue must be rejected once the budget drops below it.
  int residues = 0;
  for (const auto& rep : g_valid_inputs) {
    const double defect = ohtsuki_c1(build(rep)).integrality_defect;
    if (defect == 0.0) continue;
    ++residues;
    if (error_of([&] { classify(rep, Tolerances{kDefaultTolerance, defect / 2}); }) != ErrorCode::NonIntegralChernClass) {
      return "q-sum off by " + std::to_string(defect) + " accepted under a smaller budget";
    }
  }
  if (residues == 0) return "no floating residue to probe";

  PuncturedRepresentation bent = build(Representation(2, {Matrix{{S::exact(0, 1)}}}));
  bent.local_eigen[1].pairs[0].q = BranchDatum{0.5, std::nullopt, false};
  if (error_of([&] { ohtsuki_c1(bent); }) != ErrorCode::NonIntegralChernClass) return "perturbed q-sum accepted";

  std::cout << "  (" << g_valid_inputs.size() << " valid inputs re-checked)\n";
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden modular representation: c1 = -2, Irreducible [-1, -1]", 1.0, golden},
      {2, "character root table on the quarter lattice (16 exact checks)", 0.0, character_table},
      {3, "two-puncture suite: 100 random matrices, roots, c1 count, conjugation", 10.0, two_puncture_suite},
      {4, "character (-1, -1) on three punctures gives O(-1)", 0.0, auxiliary_character},
      {5, "irreducible suite: 200 random pairs, gap <= 1 and parity", 10.0, irreducible_suite},
      {6, "decomposable pairs of exact characters match the oracle (50)", 0.0, decomposable_oracle},
      {7, "unique flag (-2, 0) with argument 3/5 is ambiguous", 0.0, ambiguity},
      {8, "closure invariants hold on every valid input; violations are errors", 0.0, closure_invariants},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = c.run();
    } catch (const std::exception& e) {
      failure = std::string("unexpected error: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && c.budget_seconds > 0.0 && seconds >= c.budget_seconds) {
      failure = "took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (failure.empty() ? "PASS" : "FAIL") << " [" << c.number << "] " << c.name << " (" << seconds << " s)";
    if (!failure.empty()) line << ": " << failure;
    std::cout << line.str() << "\n";
    if (!failure.empty()) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
