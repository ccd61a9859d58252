#pragma once

/// @file
/// @brief Farey sequences.

#include <vector>

#include "rhythm/fraction.h"

namespace cantus {

/// @brief The Farey sequence F_n: all reduced fractions in [0,1] with
/// denominator at most n, ascending.
///
/// Uses the classic next-term recurrence starting from 0/1, 1/n.
/// Throws std::invalid_argument if n < 1.
std::vector<Fraction> farey(int n);

}  // namespace cantus
