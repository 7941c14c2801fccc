#include "prodfree/numeric.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace prodfree {

namespace mp = boost::multiprecision;

BigInt big_pow(std::uint64_t q, std::size_t n) {
  BigInt result = 1;
  BigInt base = q;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

std::uint64_t checked_pow(std::uint64_t q, std::size_t n) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (q != 0 && result > std::numeric_limits<std::uint64_t>::max() / q) {
      throw BudgetExceeded("q^n does not fit in 64 bits (q=" +
                           std::to_string(q) + ", n=" + std::to_string(n) + ")");
    }
    result *= q;
  }
  return result;
}

std::string to_fraction_string(const Rational& r) {
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

std::string to_decimal_string(const Rational& r, int digits) {
  BigInt scale = big_pow(10, static_cast<std::size_t>(digits));
  BigInt num = mp::numerator(r);
  BigInt den = mp::denominator(r);
  bool negative = num < 0;
  if (negative) num = -num;
  // round half up
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string frac_str = frac.str();
  frac_str.insert(0, static_cast<std::size_t>(digits) - frac_str.size(), '0');
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (digits > 0) out += "." + frac_str;
  return out;
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    std::string_view frac = text.substr(dot + 1);
    digits += frac;
    if (digits.empty() || digits == "-" || digits == "+") {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    return Rational(parse_integer(digits, text), big_pow(10, frac.size()));
  }
  return Rational(parse_integer(text, text));
}

int Surd5::sign() const {
  int a = rational_.sign();
  int b = radical_.sign();
  if (a >= 0 && b >= 0) return (a > 0 || b > 0) ? 1 : 0;
  if (a <= 0 && b <= 0) return -1;
  // Opposite signs: compare rational^2 with 5 * radical^2.
  Rational lhs = rational_ * rational_;
  Rational rhs = radical_ * radical_ * 5;
  if (a > 0) return lhs > rhs ? 1 : -1;  // never equal: sqrt(5) is irrational
  return rhs > lhs ? 1 : -1;
}

Surd5 operator+(const Surd5& a, const Surd5& b) {
  return {a.rational_ + b.rational_, a.radical_ + b.radical_};
}

Surd5 operator-(const Surd5& a, const Surd5& b) {
  return {a.rational_ - b.rational_, a.radical_ - b.radical_};
}

Surd5 operator*(const Surd5& a, const Surd5& b) {
  return {a.rational_ * b.rational_ + a.radical_ * b.radical_ * 5,
          a.rational_ * b.radical_ + a.radical_ * b.rational_};
}

Surd5 operator/(const Surd5& a, const Rational& b) {
  if (b == 0) throw std::domain_error("division by zero");
  return {a.rational_ / b, a.radical_ / b};
}

std::strong_ordering operator<=>(const Surd5& a, const Surd5& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Surd5::str() const {
  return to_fraction_string(rational_) + " + " + to_fraction_string(radical_) + "*sqrt(5)";
}

double Surd5::approx() const {
  return rational_.convert_to<double>() + radical_.convert_to<double>() * 2.2360679774997896964;
}

Surd5 phi() { return {Rational(-1, 2), Rational(1, 2)}; }

Surd5 simple_density_bound() { return {Rational(1, 4), Rational(1, 4)}; }

bool exceeds_phi(const Rational& d) {
  if (d < 0) return false;
  Rational t = 2 * d + 1;
  return t * t > 5;
}

}  // namespace prodfree
