#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "logsplit/chern.hpp"
#include "logsplit/monodromy.hpp"

namespace logsplit {

struct Tolerances {
  /// Eigenvalue clustering, branch snapping, singularity and parallelism.
  double tol = kDefaultTolerance;
  /// Allowed distance of the residue q-sum from an integer.
  double integrality = kDefaultIntegralityTolerance;
};

/// Twisting parameters of O(r_1) + ... + O(r_n), kept in descending order.
class SplittingType {
 public:
  SplittingType() = default;
  explicit SplittingType(std::vector<int> roots);

  const std::vector<int>& roots() const noexcept { return roots_; }
  std::size_t dim() const noexcept { return roots_.size(); }
  int sum() const noexcept;
  std::string str() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<int> roots_;
};

enum class ClassificationKind {
  Character,
  TwoPunctureGeneral,
  ThreeCharacter,
  ThreeDim2Decomposable,
  ThreeDim2ReducibleSplit,
  ThreeDim2ReducibleAmbiguous,
  ThreeDim2Irreducible,
};

std::string_view to_string(ClassificationKind kind);
/// Throws ParseError for unknown names.
ClassificationKind kind_from_string(std::string_view name);

/// A line preserved by both matrices of a 2x2 pair, with the action of the
/// pair on the line (sub) and on the quotient.
struct InvariantLine {
  std::array<ComplexScalar, 2> direction;
  std::pair<ComplexScalar, ComplexScalar> sub;
  std::pair<ComplexScalar, ComplexScalar> quotient;
};

struct InvariantLineReport {
  std::vector<InvariantLine> lines;
  /// At least two independent invariant lines.
  bool decomposable = false;
};

struct ClassificationReport {
  ClassificationKind kind = ClassificationKind::Character;
  int c1 = 0;
  std::vector<SplittingType> candidates;
  std::vector<std::string> warnings;
  ChernResult chern;
  std::optional<InvariantLineReport> invariant_lines;

  bool ambiguous() const noexcept { return kind == ClassificationKind::ThreeDim2ReducibleAmbiguous; }
};

/// Root of the extension of a character of the thrice-punctured line with
/// branch data q0, q1: 0 at the origin, -1 while q0 + q1 <= 1, -2 beyond.
/// Throws OutOfBranch for arguments outside [0, 1).
int character_root(const Rational& q0, const Rational& q1);
/// Floating variant; q0 + q1 within tol above 1 still counts as <= 1.
int character_root(double q0, double q1, double tol = kDefaultTolerance);
/// Uses the exact rationals when both data carry them.
int character_root(const BranchDatum& q0, const BranchDatum& q1, double tol = kDefaultTolerance);

/// Two punctures, any dimension: one root -1 per eigenvalue off the positive
/// real axis, 0 for the rest. Cross-checked against -c1.
ClassificationReport split_two_punctures(const PuncturedRepresentation& prep, const Tolerances& tols = {});

/// Common eigenvectors of a pair of invertible 2x2 matrices.
InvariantLineReport invariant_lines(const Matrix& m0, const Matrix& m1, double tol = kDefaultTolerance);

/// Three punctures, dimension 2: irreducible parity rule, decomposable sum of
/// characters, or the flag of a unique invariant line. The flag with sub root
/// -2 and quotient root 0 is reported with both possible splittings.
ClassificationReport classify_dim2(const PuncturedRepresentation& prep, const Tolerances& tols = {});

/// Builds the punctured representation and dispatches on punctures and
/// dimension. Three punctures with dimension >= 3 throw UnsupportedCase.
ClassificationReport classify(const Representation& rep, const Tolerances& tols = {});

}  // namespace logsplit
