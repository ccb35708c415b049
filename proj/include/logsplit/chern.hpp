#pragma once

#include <optional>

#include "logsplit/eigen.hpp"
#include "logsplit/monodromy.hpp"

namespace logsplit {

inline constexpr double kDefaultIntegralityTolerance = 1e-6;

/// Sum of q over all eigenvalues counted with multiplicity, i.e. the trace of
/// the principal logarithm divided by 2*pi*i with the modulus part dropped.
struct QTrace {
  double value = 0.0;
  /// Set when every contributing q is exact.
  std::optional<Rational> exact;
};

QTrace residue_q_trace(const EigenData& data);

struct ChernResult {
  int c1 = 0;
  double raw_q_sum = 0.0;
  std::optional<Rational> exact_q_sum;
  double integrality_defect = 0.0;
  double ln_r_closure_defect = 0.0;
};

/// First Chern class of the extended logarithmic connection: minus the sum of
/// the residue traces over every puncture. Throws NonIntegralChernClass when
/// the q-sum is farther than integrality_tol from an integer.
ChernResult ohtsuki_c1(const PuncturedRepresentation& prep,
                       double integrality_tol = kDefaultIntegralityTolerance);

}  // namespace logsplit
