// Exact arithmetic used throughout: arbitrary-precision integers, rationals,
// and numbers of the form p + q*sqrt(5) for comparisons against the golden
// ratio conjugate phi = (sqrt(5) - 1) / 2.

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace prodfree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a computation would exceed a configured size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// q^n as an arbitrary-precision integer.
BigInt big_pow(std::uint64_t q, std::size_t n);

/// q^n as a 64-bit integer; throws BudgetExceeded on overflow.
std::uint64_t checked_pow(std::uint64_t q, std::size_t n);

/// "num/den", always with an explicit denominator ("1/1", "0/1").
std::string to_fraction_string(const Rational& r);

/// Decimal approximation for human-readable output only.
std::string to_decimal_string(const Rational& r, int digits = 6);

/// Accepts "p/q", an integer, or a terminating decimal such as "0.1".
Rational parse_rational(std::string_view text);

/// p + q*sqrt(5) with rational p, q. All operations are exact.
class Surd5 {
 public:
  Surd5() = default;
  Surd5(Rational rational, Rational radical)
      : rational_(std::move(rational)), radical_(std::move(radical)) {}
  explicit Surd5(Rational rational) : rational_(std::move(rational)) {}

  const Rational& rational_part() const { return rational_; }
  const Rational& radical_part() const { return radical_; }

  /// -1, 0 or +1.
  int sign() const;

  friend Surd5 operator+(const Surd5& a, const Surd5& b);
  friend Surd5 operator-(const Surd5& a, const Surd5& b);
  friend Surd5 operator*(const Surd5& a, const Surd5& b);
  friend Surd5 operator/(const Surd5& a, const Rational& b);
  friend bool operator==(const Surd5& a, const Surd5& b) {
    return a.rational_ == b.rational_ && a.radical_ == b.radical_;
  }
  friend std::strong_ordering operator<=>(const Surd5& a, const Surd5& b);

  std::string str() const;
  double approx() const;

 private:
  Rational rational_{0};
  Rational radical_{0};
};

/// phi = (sqrt(5) - 1) / 2, the positive root of x^2 + x = 1.
Surd5 phi();

/// (1 + phi) / 2 = (1 + sqrt(5)) / 4.
Surd5 simple_density_bound();

/// d > phi, decided by (2d + 1)^2 > 5 for d >= 0 (and false for d < 0).
bool exceeds_phi(const Rational& d);

}  // namespace prodfree
