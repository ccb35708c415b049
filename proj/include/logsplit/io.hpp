#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logsplit/monodromy.hpp"
#include "logsplit/splitting.hpp"

namespace logsplit {

/// Parsed classification input.
///
/// JSON layout:
///
///     {
///       "punctures": 3,
///       "dim": 2,
///       "generators": [ [[entry, ...], ...], ... ],
///       "tolerances": {"tol": 1e-9, "integrality_tol": 1e-6}
///     }
///
/// Each entry is either {"re": x, "im": y} or {"r": x, "q": "p/s"}. Numbers
/// given as JSON integers or as "p/s" strings are exact; other JSON numbers
/// are floating point. "im" defaults to 0; "tolerances" is optional.
struct InputDocument {
  int punctures = 2;
  std::size_t dim = 1;
  std::vector<Matrix> generators;
  std::optional<double> tol;
  std::optional<double> integrality_tol;

  Representation representation() const;
};

/// Throws ParseError (with line/column or field path) or OutOfBranch.
InputDocument parse_input(std::string_view text);

struct OutputDocument {
  std::string kind;
  int c1 = 0;
  std::vector<std::vector<int>> candidates;
  bool ambiguous = false;
  std::vector<std::string> warnings;
  double raw_q_sum = 0.0;
  double integrality_defect = 0.0;
  double ln_r_closure_defect = 0.0;

  static OutputDocument from_report(const ClassificationReport& report);
  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

/// Pretty-printed JSON with a fixed key order and a trailing newline.
std::string serialize(const OutputDocument& doc);
OutputDocument parse_output(std::string_view text);

}  // namespace logsplit
