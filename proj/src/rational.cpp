#include "logsplit/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "logsplit/error.hpp"

namespace logsplit {

namespace {

using Wide = __int128;

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() + 1 &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational make_reduced_rational(Wide n, Wide d) {
  if (d == 0) throw Error(ErrorCode::ZeroArgument, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (!fits(n) || !fits(d)) throw RationalOverflow();
  return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), Rational::Reduced{});
}

namespace {

Rational make_reduced(Wide n, Wide d) { return make_reduced_rational(n, d); }

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  *this = make_reduced(n, d);
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  const auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const std::string_view whole = trim(text);
  const auto slash = whole.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(whole, whole));
  const std::int64_t n = parse_int(trim(whole.substr(0, slash)), whole);
  const std::int64_t d = parse_int(trim(whole.substr(slash + 1)), whole);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(whole) + "'");
  return Rational(n, d);
}

bool Rational::approximate(double x, double tolerance, std::int64_t max_den, Rational& out) {
  if (!std::isfinite(x) || std::fabs(x) > 1e15) return false;
  // Convergents h/k of the continued fraction of x.
  double rest = x;
  Wide h_prev = 1, h = static_cast<Wide>(std::floor(rest));
  Wide k_prev = 0, k = 1;
  rest -= std::floor(rest);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::fabs(static_cast<double>(h) / static_cast<double>(k) - x) <= tolerance) {
      try {
        out = make_reduced(h, k);
      } catch (const RationalOverflow&) {
        return false;
      }
      return true;
    }
    if (rest < 1e-300) return false;
    rest = 1.0 / rest;
    const double a = std::floor(rest);
    rest -= a;
    if (a > 1e15) return false;
    const Wide ai = static_cast<Wide>(a);
    const Wide h_next = ai * h + h_prev;
    const Wide k_next = ai * k + k_prev;
    if (k_next > max_den) return false;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return false;
}

Rational operator+(const Rational& a, const Rational& b) {
  return make_reduced(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make_reduced(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make_reduced(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(ErrorCode::ZeroArgument, "rational division by zero");
  return make_reduced(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

Rational Rational::operator-() const { return make_reduced(-Wide(num_), den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  const Wide lhs = Wide(a.num_) * b.den_;
  const Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace logsplit
