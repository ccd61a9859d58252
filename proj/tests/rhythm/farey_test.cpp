/**
 * @file farey_test.cpp
 * @brief Tests for Farey sequence generation.
 */

#include "rhythm/farey.h"

#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

namespace cantus {
namespace {

/// Totatives of 1..n by plain sieve, for the size law |F_n| = 1 + sum phi(k).
std::vector<int> totientTable(int n) {
  std::vector<int> phi(static_cast<std::size_t>(n) + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (int p = 2; p <= n; ++p) {
    if (phi[p] == p) {  // p is prime
      for (int k = p; k <= n; k += p) phi[k] -= phi[k] / p;
    }
  }
  return phi;
}

TEST(FareyTest, FirstOrderIsJustTheUnitEndpoints) {
  EXPECT_EQ(farey(1), (std::vector<Fraction>{Fraction(0, 1), Fraction(1, 1)}));
}

TEST(FareyTest, EighthOrderMatchesTheReferenceListing) {
  const std::vector<Fraction> expected = {
      {0, 1}, {1, 8}, {1, 7}, {1, 6}, {1, 5}, {1, 4}, {2, 7}, {1, 3},
      {3, 8}, {2, 5}, {3, 7}, {1, 2}, {4, 7}, {3, 5}, {5, 8}, {2, 3},
      {5, 7}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {1, 1},
  };
  ASSERT_EQ(expected.size(), 23u);
  EXPECT_EQ(farey(8), expected);
}

TEST(FareyTest, SequencePropertiesHoldThroughOrder64) {
  std::vector<int> phi = totientTable(64);
  long long expected_size = 1;
  for (int n = 1; n <= 64; ++n) {
    expected_size += phi[n];
    std::vector<Fraction> sequence = farey(n);

    EXPECT_EQ(static_cast<long long>(sequence.size()), expected_size)
        << "order " << n;
    EXPECT_EQ(sequence.front(), Fraction(0, 1));
    EXPECT_EQ(sequence.back(), Fraction(1, 1));

    for (std::size_t i = 0; i < sequence.size(); ++i) {
      const Fraction& term = sequence[i];
      EXPECT_GE(term.den, 1);
      EXPECT_LE(term.den, n) << "order " << n << " term " << term.toString();
      EXPECT_EQ(std::gcd(term.num, term.den), 1)
          << "order " << n << " term " << term.toString();
      if (i > 0) {
        const Fraction& previous = sequence[i - 1];
        EXPECT_LT(previous, term) << "order " << n;
        // Neighbor identity: b*c - a*d = 1 for consecutive a/b, c/d.
        EXPECT_EQ(previous.den * term.num - previous.num * term.den, 1)
            << "order " << n << " between " << previous.toString() << " and "
            << term.toString();
      }
    }
  }
}

TEST(FareyTest, ThrowsBelowOrderOne) {
  EXPECT_THROW(farey(0), std::invalid_argument);
  EXPECT_THROW(farey(-3), std::invalid_argument);
}

}  // namespace
}  // namespace cantus
