#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "logsplit/complex_scalar.hpp"
#include "logsplit/matrix.hpp"

namespace logsplit {

/// Clustering / snapping / parallelism tolerance used when none is given.
inline constexpr double kDefaultTolerance = 1e-9;

/// Normalized argument q in [0, 1) of a nonzero complex number.
/// `exact` is set when q is known as a rational without rounding.
struct BranchDatum {
  double value = 0.0;
  std::optional<Rational> exact;
  /// Floating-derived q that fell within 10*tol of the cut at 0.
  bool near_cut = false;

  bool is_zero() const noexcept { return exact ? exact->is_zero() : value == 0.0; }
};

/// q = arg(z) / 2pi mapped into [0, 1). Exact polar input returns its stored
/// q verbatim. Floating results within tol of 0 or 1 snap to exactly 0.
/// Throws ZeroArgument for z = 0.
BranchDatum normalized_arg(const ComplexScalar& z, double tol = kDefaultTolerance);

struct EigenPair {
  ComplexScalar value;
  std::size_t multiplicity = 1;
  BranchDatum q;
  double ln_r = 0.0;
};

/// Eigenvalue clusters of one matrix; multiplicities sum to its dimension.
struct EigenData {
  std::vector<EigenPair> pairs;

  std::size_t total_multiplicity() const;
  /// Number of eigenvalues, counted with multiplicity, whose q is nonzero.
  std::size_t count_off_cut() const;
  bool any_near_cut() const;
};

struct RootFinderOptions {
  int max_iterations = 200;
  /// Iteration at which unconverged estimates are randomly perturbed.
  int restart_after = 100;
};

/// All roots of a monic polynomial (leading coefficient first), counted with
/// multiplicity, by simultaneous Aberth iteration. Throws RootFindingDivergence.
std::vector<std::complex<double>> aberth_roots(const std::vector<std::complex<double>>& monic,
                                               const RootFinderOptions& options = {});

/// Roots of det(xI - a). Factors that can be certified exactly (cyclotomic
/// factors and Gaussian-rational roots of an exact characteristic
/// polynomial, or the diagonal of a triangular matrix) come back exact; the
/// rest are floating approximations.
std::vector<ComplexScalar> eigenvalue_list(const Matrix& a, const RootFinderOptions& options = {});

/// Eigenvalues grouped into clusters whose pairwise distance is below
/// tol * (1 + max |root|); exact values only merge with identical exact values.
/// Throws ZeroEigenvalue or RootFindingDivergence.
EigenData eigenvalues(const Matrix& a, double tol = kDefaultTolerance, const RootFinderOptions& options = {});

}  // namespace logsplit
