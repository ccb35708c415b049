#pragma once

#include <complex>
#include <optional>
#include <string>

#include "logsplit/rational.hpp"

namespace logsplit {

/// Exact Gaussian rational re + i*im.
struct GaussianRational {
  Rational re;
  Rational im;

  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// r * exp(2*pi*i*q) with r > 0 and q a rational in [0, 1).
struct ExactPolar {
  double r = 1.0;
  Rational q;

  friend bool operator==(const ExactPolar&, const ExactPolar&) = default;
};

/// A complex number that remembers exact representations when it has them.
///
/// Every value carries its floating-point approximation. Values built from
/// exact input additionally carry an exact cartesian form (Gaussian rational),
/// an exact polar form (positive real modulus, rational argument), or both.
/// Arithmetic keeps an exact form whenever both operands share it; the exact
/// zero is absorbing for products and neutral for sums, so triangular
/// structure survives products and inverses without rounding.
class ComplexScalar {
 public:
  /// The exact zero.
  ComplexScalar() : cart_(GaussianRational{}) {}
  /// Floating-point value with no exact form.
  ComplexScalar(std::complex<double> v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  ComplexScalar(double re, double im) : value_(re, im) {}

  static ComplexScalar exact(Rational re, Rational im = {});
  /// Throws OutOfBranch unless r > 0 and 0 <= q < 1.
  static ComplexScalar polar(double r, Rational q);
  static ComplexScalar one() { return exact(1); }

  std::complex<double> value() const noexcept { return value_; }
  double abs() const noexcept { return std::abs(value_); }

  const std::optional<GaussianRational>& exact_cartesian() const noexcept { return cart_; }
  /// Stored polar form, or one derived from an exact cartesian value lying on
  /// a coordinate axis or a diagonal.
  std::optional<ExactPolar> exact_polar() const;
  bool is_exact() const noexcept { return cart_.has_value() || polar_.has_value(); }
  bool is_exact_zero() const noexcept { return cart_ && cart_->is_zero(); }

  /// True when both carry a common exact form and those forms agree.
  friend bool exactly_equal(const ComplexScalar& a, const ComplexScalar& b);
  /// Exact comparison when a common exact form exists, nullopt otherwise.
  friend std::optional<bool> exact_compare(const ComplexScalar& a, const ComplexScalar& b);

  /// Nonzero for certain: exact and nonzero, or built from exact operands
  /// whose result is provably nonzero (a sum of an exact value and a
  /// different exact negated value, or a product of such values).
  bool known_nonzero() const noexcept { return is_exact() ? !is_exact_zero() : nonzero_; }

  /// Zero test: exact when the value is exact or known nonzero,
  /// |v| < tol * scale otherwise.
  bool negligible(double tol, double scale = 1.0) const;

  ComplexScalar inverse() const;
  ComplexScalar conj() const;
  ComplexScalar operator-() const;

  friend ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b);
  friend ComplexScalar operator-(const ComplexScalar& a, const ComplexScalar& b);
  friend ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b);
  friend ComplexScalar operator/(const ComplexScalar& a, const ComplexScalar& b);

  ComplexScalar& operator+=(const ComplexScalar& o) { return *this = *this + o; }
  ComplexScalar& operator-=(const ComplexScalar& o) { return *this = *this - o; }
  ComplexScalar& operator*=(const ComplexScalar& o) { return *this = *this * o; }

  std::string str() const;

 private:
  std::complex<double> value_{};
  std::optional<GaussianRational> cart_;
  std::optional<ExactPolar> polar_;
  bool nonzero_ = false;
};

}  // namespace logsplit
