#pragma once

#include <iosfwd>
#include <optional>

#include "logsplit/error.hpp"
#include "logsplit/monodromy.hpp"
#include "logsplit/splitting.hpp"

namespace logsplit {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kUnsupported = 2;
inline constexpr int kNonIntegral = 3;
inline constexpr int kSelftestFailed = 4;
}  // namespace exit_code

int exit_code_for(ErrorCode code);

/// Tolerance flags from the command line; unset values fall back to the
/// input document, then to the library defaults.
struct CommandOptions {
  std::optional<double> tol;
  std::optional<double> integrality_tol;
};

/// Reads an input document, classifies it and writes the output document.
int cmd_classify(std::istream& in, std::ostream& out, std::ostream& err, const CommandOptions& options = {});

/// Reads an input document and writes c1 with its diagnostics.
int cmd_c1(std::istream& in, std::ostream& out, std::ostream& err, const CommandOptions& options = {});

inline constexpr int kMaxSweepSteps = 10000;

/// CSV "q0,q1,root" over the lattice (i/steps, j/steps), row-major, after a
/// header line.
int cmd_sweep(int steps, std::ostream& out, std::ostream& err);

struct SelftestOptions {
  Tolerances tolerances;
  /// Test hook: perturbs one embedded golden entry so every check must fail.
  bool corrupt_golden = false;
};

/// Irreducible representation factoring through SL2(Z), with exact rational
/// entries: generators diag(1, -1) and [[-1/2, 1], [3/4, 1/2]].
Representation modular_golden_representation(bool corrupt = false);

int cmd_selftest(std::ostream& out, const SelftestOptions& options = {});

}  // namespace logsplit
