#include "logsplit/chern.hpp"

#include <cmath>
#include <sstream>

#include "logsplit/error.hpp"

namespace logsplit {

QTrace residue_q_trace(const EigenData& data) {
  QTrace out;
  std::optional<Rational> exact = Rational(0);
  for (const auto& pair : data.pairs) {
    const auto mult = static_cast<std::int64_t>(pair.multiplicity);
    out.value += static_cast<double>(mult) * pair.q.value;
    if (exact && pair.q.exact) {
      try {
        *exact += Rational(mult) * *pair.q.exact;
      } catch (const RationalOverflow&) {
        exact.reset();
      }
    } else {
      exact.reset();
    }
  }
  if (exact) out.value = exact->to_double();
  out.exact = exact;
  return out;
}

ChernResult ohtsuki_c1(const PuncturedRepresentation& prep, double integrality_tol) {
  ChernResult out;
  out.ln_r_closure_defect = prep.ln_r_closure_defect;
  std::optional<Rational> exact = Rational(0);
  for (const auto& data : prep.local_eigen) {
    const QTrace trace = residue_q_trace(data);
    out.raw_q_sum += trace.value;
    if (exact && trace.exact) {
      try {
        *exact += *trace.exact;
      } catch (const RationalOverflow&) {
        exact.reset();
      }
    } else {
      exact.reset();
    }
  }
  out.exact_q_sum = exact;
  if (exact) {
    out.raw_q_sum = exact->to_double();
    if (!exact->is_integer()) {
      throw Error(ErrorCode::NonIntegralChernClass,
                  "exact residue q-sum " + exact->str() + " is not an integer");
    }
    out.integrality_defect = 0.0;
    out.c1 = -static_cast<int>(exact->num());
    return out;
  }
  const double nearest = std::round(out.raw_q_sum);
  out.integrality_defect = std::fabs(out.raw_q_sum - nearest);
  if (out.integrality_defect > integrality_tol) {
    std::ostringstream os;
    os.precision(17);
    os << "residue q-sum " << out.raw_q_sum << " is " << out.integrality_defect
       << " away from an integer (tolerance " << integrality_tol << ")";
    throw Error(ErrorCode::NonIntegralChernClass, os.str());
  }
  out.c1 = -static_cast<int>(nearest);
  return out;
}

}  // namespace logsplit
