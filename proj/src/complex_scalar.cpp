#include "logsplit/complex_scalar.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "logsplit/error.hpp"

namespace logsplit {

namespace {

std::complex<double> unit_at(const Rational& q) {
  // Quarter turns are exact so that axis values carry no rounding noise.
  if (q.is_zero()) return {1.0, 0.0};
  if (q == Rational(1, 4)) return {0.0, 1.0};
  if (q == Rational(1, 2)) return {-1.0, 0.0};
  if (q == Rational(3, 4)) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * q.to_double();
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> to_complex(const GaussianRational& g) {
  return {g.re.to_double(), g.im.to_double()};
}

std::complex<double> to_complex(const ExactPolar& p) { return p.r * unit_at(p.q); }

Rational wrap(const Rational& q) { return q.frac(); }

}  // namespace

ComplexScalar ComplexScalar::exact(Rational re, Rational im) {
  ComplexScalar out;
  out.cart_ = GaussianRational{re, im};
  out.value_ = to_complex(*out.cart_);
  return out;
}

ComplexScalar ComplexScalar::polar(double r, Rational q) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::OutOfBranch, "polar modulus must be positive and finite");
  }
  if (q < Rational(0) || q >= Rational(1)) {
    throw Error(ErrorCode::OutOfBranch, "polar argument " + q.str() + " outside [0,1)");
  }
  ComplexScalar out{std::complex<double>{}};
  out.polar_ = ExactPolar{r, q};
  out.value_ = to_complex(*out.polar_);
  // On an axis with a modulus that is exactly a short fraction, the
  // cartesian form is exact too.
  Rational modulus;
  if (q.den() <= 4 && q.den() != 3 && Rational::approximate(r, 0.0, 1'000'000, modulus)) {
    if (q.is_zero()) out.cart_ = GaussianRational{modulus, {}};
    if (q == Rational(1, 4)) out.cart_ = GaussianRational{{}, modulus};
    if (q == Rational(1, 2)) out.cart_ = GaussianRational{-modulus, {}};
    if (q == Rational(3, 4)) out.cart_ = GaussianRational{{}, -modulus};
  }
  return out;
}

std::optional<ExactPolar> ComplexScalar::exact_polar() const {
  if (polar_) return polar_;
  if (!cart_ || cart_->is_zero()) return std::nullopt;
  const Rational& a = cart_->re;
  const Rational& b = cart_->im;
  const double ad = std::fabs(a.to_double());
  const double bd = std::fabs(b.to_double());
  if (b.is_zero()) return ExactPolar{ad, a > Rational(0) ? Rational(0) : Rational(1, 2)};
  if (a.is_zero()) return ExactPolar{bd, b > Rational(0) ? Rational(1, 4) : Rational(3, 4)};
  const double diag = ad * std::numbers::sqrt2;
  if (a == b) return ExactPolar{diag, a > Rational(0) ? Rational(1, 8) : Rational(5, 8)};
  if (a == -b) return ExactPolar{diag, a > Rational(0) ? Rational(7, 8) : Rational(3, 8)};
  return std::nullopt;
}

std::optional<bool> exact_compare(const ComplexScalar& a, const ComplexScalar& b) {
  if (a.cart_ && b.cart_) return *a.cart_ == *b.cart_;
  if (a.is_exact_zero() || b.is_exact_zero()) {
    if (a.is_exact() && b.is_exact()) return a.is_exact_zero() && b.is_exact_zero();
    return std::nullopt;
  }
  const auto pa = a.exact_polar();
  const auto pb = b.exact_polar();
  if (pa && pb) return *pa == *pb;
  return std::nullopt;
}

bool exactly_equal(const ComplexScalar& a, const ComplexScalar& b) { return exact_compare(a, b).value_or(false); }

bool ComplexScalar::negligible(double tol, double scale) const {
  if (is_exact()) return is_exact_zero();
  if (nonzero_) return false;
  return std::abs(value_) < tol * scale;
}

ComplexScalar ComplexScalar::inverse() const {
  if (is_exact_zero()) throw Error(ErrorCode::ZeroArgument, "inverse of exact zero");
  ComplexScalar out{1.0 / value_};
  out.nonzero_ = true;
  if (cart_) {
    try {
      const Rational norm = cart_->re * cart_->re + cart_->im * cart_->im;
      out.cart_ = GaussianRational{cart_->re / norm, -cart_->im / norm};
      out.value_ = to_complex(*out.cart_);
    } catch (const RationalOverflow&) {
    }
  }
  if (polar_) {
    out.polar_ = ExactPolar{1.0 / polar_->r, wrap(-polar_->q)};
    if (!out.cart_) out.value_ = to_complex(*out.polar_);
  }
  return out;
}

ComplexScalar ComplexScalar::conj() const {
  ComplexScalar out{std::conj(value_)};
  out.nonzero_ = nonzero_;
  if (cart_) out.cart_ = GaussianRational{cart_->re, -cart_->im};
  if (polar_) out.polar_ = ExactPolar{polar_->r, wrap(-polar_->q)};
  return out;
}

ComplexScalar ComplexScalar::operator-() const {
  ComplexScalar out{-value_};
  out.nonzero_ = nonzero_;
  if (cart_) out.cart_ = GaussianRational{-cart_->re, -cart_->im};
  if (polar_) out.polar_ = ExactPolar{polar_->r, wrap(polar_->q + Rational(1, 2))};
  return out;
}

ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b) {
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  ComplexScalar out{a.value_ + b.value_};
  if (a.cart_ && b.cart_) {
    try {
      out.cart_ = GaussianRational{a.cart_->re + b.cart_->re, a.cart_->im + b.cart_->im};
      out.value_ = to_complex(*out.cart_);
      return out;
    } catch (const RationalOverflow&) {
      out.cart_.reset();
    }
  }
  const auto pa = a.exact_polar();
  const auto pb = b.exact_polar();
  if (pa && pb) {
    if (pa->q == pb->q) {
      out.polar_ = ExactPolar{pa->r + pb->r, pa->q};
    } else if (wrap(pa->q - pb->q) == Rational(1, 2)) {
      if (pa->r == pb->r) return ComplexScalar{};
      out.polar_ = pa->r > pb->r ? ExactPolar{pa->r - pb->r, pa->q} : ExactPolar{pb->r - pa->r, pb->q};
    }
    if (out.polar_) out.value_ = to_complex(*out.polar_);
  }
  if (!out.is_exact() && a.is_exact() && b.is_exact()) {
    out.nonzero_ = exact_compare(a, -b) == std::optional<bool>(false);
  }
  return out;
}

ComplexScalar operator-(const ComplexScalar& a, const ComplexScalar& b) { return a + (-b); }

ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) return ComplexScalar{};
  ComplexScalar out{a.value_ * b.value_};
  if (a.cart_ && b.cart_) {
    try {
      const GaussianRational& x = *a.cart_;
      const GaussianRational& y = *b.cart_;
      out.cart_ = GaussianRational{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
      out.value_ = to_complex(*out.cart_);
    } catch (const RationalOverflow&) {
      out.cart_.reset();
    }
  }
  const auto pa = a.exact_polar();
  const auto pb = b.exact_polar();
  if (pa && pb && (a.polar_ || b.polar_ || !out.cart_)) {
    out.polar_ = ExactPolar{pa->r * pb->r, wrap(pa->q + pb->q)};
    if (!out.cart_) out.value_ = to_complex(*out.polar_);
  }
  out.nonzero_ = a.known_nonzero() && b.known_nonzero();
  return out;
}

ComplexScalar operator/(const ComplexScalar& a, const ComplexScalar& b) { return a * b.inverse(); }

std::string ComplexScalar::str() const {
  std::ostringstream os;
  os.precision(17);
  if (cart_) {
    os << cart_->re.str();
    if (!cart_->im.is_zero()) os << (cart_->im < Rational(0) ? "-" : "+") << (cart_->im < Rational(0) ? -cart_->im : cart_->im).str() << "i";
  } else if (polar_) {
    os << polar_->r << "*e^(2pi*i*" << polar_->q.str() << ")";
  } else {
    os << "(" << value_.real() << "," << value_.imag() << ")";
  }
  return os.str();
}

}  // namespace logsplit
