/// @file
/// @brief Attaching a partition tree to a piece: shared onsets, durations,
/// duration classes and beat strengths for every part.
#pragma once

#include <optional>
#include <vector>

#include "rhythm/fraction.h"
#include "rhythm/partition_tree.h"
#include "score/piece.h"

namespace cantus {

/// A piece with one rhythm imposed on all parts: time step T sounds at
/// ``onsets[T-1]`` for ``durations[T-1]`` of the whole span.
struct TimedPiece {
  Piece piece;
  PartitionTree tree;
  std::vector<Fraction> onsets;
  std::vector<Fraction> durations;
  std::vector<int> duration_classes;  ///< DS per step, 1 = slowest
  std::vector<BeatStrength> strengths;
};

/// Result of attaching a tree: the timed piece when accepted, otherwise the
/// diagnostics that rejected it.
struct AttachResult {
  std::optional<TimedPiece> timed;
  std::vector<ErrorRecord> errors;

  bool accepted() const { return errors.empty(); }
};

/// @brief Steps that break the extreme-note duration rule.
///
/// Every occurrence of a part's lowest note and of its highest note must sit
/// on a slowest (DS = 1) step; offending steps are reported per part and
/// time, sorted.
std::vector<ErrorRecord> extremeNoteErrors(
    const Piece& piece, const std::vector<int>& duration_classes);

/// @brief Attach ``tree`` to ``piece``.
///
/// Throws std::invalid_argument when the tree's leaf count differs from the
/// piece length. Returns the extreme-note diagnostics instead of a timed
/// piece when the rhythm puts an extreme note on a short step.
AttachResult attachRhythm(const Piece& piece, const PartitionTree& tree);

}  // namespace cantus
