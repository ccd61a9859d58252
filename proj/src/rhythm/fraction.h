#pragma once

/// @file
/// @brief Exact rational arithmetic for onsets and durations.

#include <compare>
#include <cstdint>
#include <string>

namespace cantus {

/// An exact rational number. Always stored normalized: the denominator is
/// positive and gcd(|num|, den) == 1. All rhythm arithmetic (Farey terms,
/// onsets, durations, metrical levels) is exact; floats appear only at the
/// rendering boundary.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;

  /// @brief Construct and normalize. Throws std::invalid_argument if d == 0.
  Fraction(std::int64_t n, std::int64_t d);

  Fraction operator+(const Fraction& other) const;
  Fraction operator-(const Fraction& other) const;
  Fraction operator*(const Fraction& other) const;

  /// @brief Division. Throws std::invalid_argument if ``other`` is zero.
  Fraction operator/(const Fraction& other) const;

  bool operator==(const Fraction& other) const = default;
  std::strong_ordering operator<=>(const Fraction& other) const;

  /// @brief "num/den", e.g. "0/1", "5/8". The denominator is always printed.
  std::string toString() const;
};

/// @brief The mediant (a+c)/(b+d) of two fractions, normalized.
Fraction mediant(const Fraction& left, const Fraction& right);

}  // namespace cantus
