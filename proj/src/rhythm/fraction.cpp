/// @file
/// @brief Exact rational arithmetic.

#include "rhythm/fraction.h"

#include <numeric>
#include <stdexcept>

namespace cantus {

Fraction::Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Fraction Fraction::operator+(const Fraction& other) const {
  return Fraction(num * other.den + other.num * den, den * other.den);
}

Fraction Fraction::operator-(const Fraction& other) const {
  return Fraction(num * other.den - other.num * den, den * other.den);
}

Fraction Fraction::operator*(const Fraction& other) const {
  return Fraction(num * other.num, den * other.den);
}

Fraction Fraction::operator/(const Fraction& other) const {
  if (other.num == 0) throw std::invalid_argument("fraction division by zero");
  return Fraction(num * other.den, den * other.num);
}

std::strong_ordering Fraction::operator<=>(const Fraction& other) const {
  // Denominators are positive, so cross-multiplication preserves order.
  return num * other.den <=> other.num * den;
}

std::string Fraction::toString() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Fraction mediant(const Fraction& left, const Fraction& right) {
  return Fraction(left.num + right.num, left.den + right.den);
}

}  // namespace cantus
