#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace logsplit {

/// Thrown when an exact rational operation leaves the 64-bit range.
/// Callers holding an exact value fall back to floating point on this.
class RationalOverflow : public std::overflow_error {
 public:
  RationalOverflow() : std::overflow_error("rational overflow") {}
};

/// Reduced fraction num/den with den > 0, backed by 64-bit integers.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Largest integer not exceeding the value.
  std::int64_t floor() const noexcept;
  /// Value minus its floor; always in [0, 1).
  Rational frac() const;

  /// "p/s", or "p" when the denominator is 1.
  std::string str() const;

  /// Accepts "p", "p/s", with optional sign; rejects zero denominators.
  static Rational parse(std::string_view text);

  /// Simplest fraction within `tolerance` of x with denominator <= max_den,
  /// by continued-fraction expansion. Returns false if none is found.
  static bool approximate(double x, double tolerance, std::int64_t max_den, Rational& out);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

 private:
  struct Reduced {};
  constexpr Rational(std::int64_t n, std::int64_t d, Reduced) : num_(n), den_(d) {}
  friend Rational make_reduced_rational(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace logsplit
