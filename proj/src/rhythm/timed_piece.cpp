/// @file
/// @brief Rhythm attachment and the extreme-note duration rule.

#include "rhythm/timed_piece.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rules/reasons.h"

namespace cantus {

std::vector<ErrorRecord> extremeNoteErrors(
    const Piece& piece, const std::vector<int>& duration_classes) {
  std::vector<ErrorRecord> errors;
  for (int part = 1; part <= piece.style.part_count; ++part) {
    int lowest = kNoteMax + 1;
    int highest = kNoteMin - 1;
    for (int time = 1; time <= piece.length; ++time) {
      const Event& event = piece.at(part, time);
      if (event.isRest()) continue;
      lowest = std::min(lowest, event.note);
      highest = std::max(highest, event.note);
    }
    if (lowest > highest) continue;  // all rests
    for (int time = 1; time <= piece.length; ++time) {
      const Event& event = piece.at(part, time);
      if (event.isRest()) continue;
      if ((event.note == lowest || event.note == highest) &&
          duration_classes[static_cast<std::size_t>(time - 1)] != 1) {
        errors.push_back({part, time, reasons::kExtremeNoteTooShort});
      }
    }
  }
  std::sort(errors.begin(), errors.end());
  errors.erase(std::unique(errors.begin(), errors.end()), errors.end());
  return errors;
}

AttachResult attachRhythm(const Piece& piece, const PartitionTree& tree) {
  const int leaves = leafCount(tree);
  if (leaves != piece.length) {
    throw std::invalid_argument("tree has " + std::to_string(leaves) +
                                " leaves but the piece has " +
                                std::to_string(piece.length) + " steps");
  }

  BeatInfo info = beatInfo(tree);
  AttachResult result;
  result.errors = extremeNoteErrors(piece, info.duration_classes);
  if (!result.errors.empty()) return result;

  TimedPiece timed;
  timed.piece = piece;
  timed.tree = tree;
  timed.onsets = leafOnsets(tree);
  timed.durations = leafDurations(tree);
  timed.duration_classes = std::move(info.duration_classes);
  timed.strengths = std::move(info.strengths);
  result.timed = std::move(timed);
  return result;
}

}  // namespace cantus
