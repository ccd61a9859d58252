#pragma once

/// @file
/// @brief Seeded backtracking search over the piece grid.

#include <cstdint>
#include <optional>
#include <vector>

#include "rules/rule_config.h"
#include "score/piece.h"

namespace cantus {

inline constexpr std::uint64_t kDefaultSeed = 6298;
inline constexpr long long kDefaultNodeBudget = 10'000'000;

enum class SolveStatus { Solved, Unsatisfiable, BudgetExhausted };

/// Rhythm-derived constraint on the pitch search: the duration strength of
/// each time step (1 = structurally longest). Every occurrence of a part's
/// lowest and highest note must land on a strength-1 step.
struct RhythmProfile {
  std::vector<int> duration_strengths;  ///< [time-1]
};

struct SolverOptions {
  RuleConfig rules;
  std::uint64_t seed = kDefaultSeed;
  long long node_budget = kDefaultNodeBudget;  ///< 0 = unlimited.
  std::optional<RhythmProfile> rhythm;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unsatisfiable;
  std::optional<Piece> piece;
  long long nodes = 0;  ///< Assignment attempts spent.
};

/// Result of an enumeration run. ``status`` is Solved when at least one piece
/// was found; on BudgetExhausted, ``pieces`` holds whatever was found first.
struct EnumerateResult {
  SolveStatus status = SolveStatus::Unsatisfiable;
  std::vector<Piece> pieces;
  long long nodes = 0;
};

/// @brief Compose a piece from scratch.
///
/// Cells are assigned column by column, top part first; candidate values are
/// ordered by a per-cell seeded shuffle, so identical inputs always yield the
/// identical piece.
SolveResult compose(const StyleSpec& style, Mode mode, int length,
                    const SolverOptions& options = {});

/// @brief Fill every unset cell of a partial piece. Pinned cells win; if the
/// pins themselves break a rule, the result is Unsatisfiable.
SolveResult complete(const PartialPiece& partial,
                     const SolverOptions& options = {});

/// @brief The first ``limit`` solutions in seeded order (all, if fewer).
EnumerateResult enumerateCompletions(const PartialPiece& partial,
                                     long long limit,
                                     const SolverOptions& options = {});

/// @brief Enumerate solutions of a from-scratch problem.
EnumerateResult enumeratePieces(const StyleSpec& style, Mode mode, int length,
                                long long limit,
                                const SolverOptions& options = {});

}  // namespace cantus
