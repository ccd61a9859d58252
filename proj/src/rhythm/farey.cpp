/// @file
/// @brief Farey sequence generation.

#include "rhythm/farey.h"

#include <stdexcept>

namespace cantus {

std::vector<Fraction> farey(int n) {
  if (n < 1) throw std::invalid_argument("farey order must be at least 1");

  std::vector<Fraction> terms;
  // Next-term recurrence: given adjacent a/b < c/d in F_n, the successor of
  // c/d is (k*c - a)/(k*d - b) with k = floor((n + b) / d).
  std::int64_t a = 0, b = 1, c = 1, d = n;
  terms.push_back(Fraction(a, b));
  while (c <= n) {
    std::int64_t k = (n + b) / d;
    std::int64_t next_c = k * c - a;
    std::int64_t next_d = k * d - b;
    a = c;
    b = d;
    c = next_c;
    d = next_d;
    terms.push_back(Fraction(a, b));
    if (a == 1 && b == 1) break;
  }
  return terms;
}

}  // namespace cantus
