#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "logsplit/eigen.hpp"
#include "logsplit/matrix.hpp"

namespace logsplit {

/// Images of the loop generators of the fundamental group of the projective
/// line minus 2 or 3 points. Generator k is the local monodromy at puncture
/// k; the puncture at infinity is implied.
class Representation {
 public:
  /// Checks the puncture count, generator count and shared dimension.
  /// Throws InvalidRepresentation or DimensionMismatch.
  Representation(int punctures, std::vector<Matrix> generators);

  int punctures() const noexcept { return punctures_; }
  std::size_t dim() const noexcept { return generators_.front().dim(); }
  const std::vector<Matrix>& generators() const noexcept { return generators_; }

  /// Throws SingularMatrix if some generator has |det| <= tol (or an exact
  /// zero determinant).
  void check_invertible(double tol) const;

 private:
  int punctures_;
  std::vector<Matrix> generators_;
};

/// A representation together with the monodromy at infinity and the
/// eigenvalue data at every puncture, ordered 0, [1,] infinity.
struct PuncturedRepresentation {
  Representation rep;
  Matrix infinity_monodromy;
  std::vector<EigenData> local_eigen;
  /// max |M_0 ... M_inf - I|.
  double product_defect = 0.0;
  /// |sum over punctures of sum multiplicity * ln|lambda||.
  double ln_r_closure_defect = 0.0;
  /// 1 + sum of multiplicity * |ln|lambda|| over all punctures.
  double ln_r_scale = 1.0;

  /// Every local monodromy in puncture order, infinity last.
  std::vector<Matrix> local_monodromies() const;
  /// Human-readable warnings for floating q values near the branch cut.
  std::vector<std::string> branch_warnings() const;
};

/// Relative thresholds applied by build() to the two closure checks.
inline constexpr double kClosureTolerance = 1e-8;

/// Inverse of the ordered product of the generators.
Matrix monodromy_at_infinity(const std::vector<Matrix>& generators, double tol = kDefaultTolerance);

/// Completes the representation with its infinity monodromy and eigenvalue
/// data, then verifies that the local monodromies multiply to the identity
/// (ProductNotIdentity) and that the moduli close up (ClosureDefect).
PuncturedRepresentation build(const Representation& rep, double tol = kDefaultTolerance);

/// Replaces every generator M by s M s^-1.
Representation conjugate(const Representation& rep, const Matrix& s, double tol = kDefaultTolerance);

/// Name of puncture `index` in a representation with `punctures` points.
std::string puncture_name(int punctures, std::size_t index);

}  // namespace logsplit
