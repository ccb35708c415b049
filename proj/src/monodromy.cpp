#include "logsplit/monodromy.hpp"

#include <cmath>
#include <sstream>

#include "logsplit/error.hpp"

namespace logsplit {

Representation::Representation(int punctures, std::vector<Matrix> generators)
    : punctures_(punctures), generators_(std::move(generators)) {
  if (punctures_ != 2 && punctures_ != 3) {
    throw Error(ErrorCode::InvalidRepresentation,
                "punctures must be 2 or 3, got " + std::to_string(punctures_));
  }
  if (generators_.size() != static_cast<std::size_t>(punctures_ - 1)) {
    throw Error(ErrorCode::InvalidRepresentation, std::to_string(punctures_) + " punctures need " +
                                                      std::to_string(punctures_ - 1) + " generators, got " +
                                                      std::to_string(generators_.size()));
  }
  for (const auto& g : generators_) {
    if (g.dim() != generators_.front().dim()) {
      throw Error(ErrorCode::DimensionMismatch, "generators must share one dimension");
    }
  }
}

void Representation::check_invertible(double tol) const {
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    const ComplexScalar det = determinant(generators_[k]);
    if (det.is_exact_zero() || (!det.is_exact() && det.abs() <= tol)) {
      throw Error(ErrorCode::SingularMatrix, "generator " + std::to_string(k) + " is not invertible");
    }
  }
}

std::vector<Matrix> PuncturedRepresentation::local_monodromies() const {
  std::vector<Matrix> out = rep.generators();
  out.push_back(infinity_monodromy);
  return out;
}

std::string puncture_name(int punctures, std::size_t index) {
  if (index + 1 == static_cast<std::size_t>(punctures)) return "inf";
  return std::to_string(index);
}

std::vector<std::string> PuncturedRepresentation::branch_warnings() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < local_eigen.size(); ++k) {
    for (const auto& pair : local_eigen[k].pairs) {
      if (!pair.q.near_cut) continue;
      std::ostringstream os;
      os.precision(17);
      os << "BranchBoundary: eigenvalue " << pair.value.str() << " at puncture "
         << puncture_name(rep.punctures(), k) << " has floating q = " << pair.q.value
         << " within 10*tol of the branch cut";
      out.push_back(os.str());
    }
  }
  return out;
}

Matrix monodromy_at_infinity(const std::vector<Matrix>& generators, double tol) {
  if (generators.empty()) throw Error(ErrorCode::InvalidRepresentation, "no generators");
  Matrix product = generators.front();
  for (std::size_t k = 1; k < generators.size(); ++k) product = product * generators[k];
  return mat_inverse(product, tol);
}

PuncturedRepresentation build(const Representation& rep, double tol) {
  rep.check_invertible(tol);
  PuncturedRepresentation out{rep, monodromy_at_infinity(rep.generators(), tol), {}};

  const auto locals = out.local_monodromies();
  Matrix product = locals.front();
  double scale = locals.front().max_abs();
  for (std::size_t k = 1; k < locals.size(); ++k) {
    product = product * locals[k];
    scale = std::max(scale, locals[k].max_abs());
  }
  out.product_defect = max_abs_diff(product, Matrix::identity(rep.dim()));
  if (out.product_defect > kClosureTolerance * (1.0 + scale)) {
    throw Error(ErrorCode::ProductNotIdentity, "local monodromies multiply to I only within " +
                                                   std::to_string(out.product_defect));
  }

  double ln_sum = 0.0;
  double ln_scale = 1.0;
  for (const auto& m : locals) {
    out.local_eigen.push_back(eigenvalues(m, tol));
    const EigenData& data = out.local_eigen.back();
    if (data.total_multiplicity() != rep.dim()) {
      throw Error(ErrorCode::InternalInconsistency, "eigenvalue multiplicities do not sum to the dimension");
    }
    for (const auto& pair : data.pairs) {
      ln_sum += static_cast<double>(pair.multiplicity) * pair.ln_r;
      ln_scale += static_cast<double>(pair.multiplicity) * std::fabs(pair.ln_r);
    }
  }
  out.ln_r_closure_defect = std::fabs(ln_sum);
  out.ln_r_scale = ln_scale;
  if (out.ln_r_closure_defect > kClosureTolerance * ln_scale) {
    throw Error(ErrorCode::ClosureDefect, "sum of ln|lambda| over all punctures is " + std::to_string(ln_sum));
  }
  return out;
}

Representation conjugate(const Representation& rep, const Matrix& s, double tol) {
  const Matrix s_inv = mat_inverse(s, tol);
  std::vector<Matrix> gens;
  for (const auto& g : rep.generators()) gens.push_back(s * g * s_inv);
  return Representation(rep.punctures(), std::move(gens));
}

}  // namespace logsplit
