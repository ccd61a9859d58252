/// @file
/// @brief Rule checkers.

#include "rules/checker.h"

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace cantus {

namespace {

/// Motion table for one part. Motion T (1-based, 1..length-1) runs from time
/// T to T+1; its delta is defined only for note-to-note motions.
struct PartMotions {
  std::vector<Motion> motions;  // [T-1]

  const Motion& at(int time) const { return motions[time - 1]; }

  std::optional<int> deltaAt(int time) const {
    const Motion& m = motions[time - 1];
    if (m.kind == MotionKind::ToRest || m.kind == MotionKind::FromRest) {
      return std::nullopt;
    }
    return m.delta;
  }

  /// @brief The delta pair starting at motion ``time`` (needs time+1 too).
  std::optional<std::pair<int, int>> pairAt(int time, int length) const {
    if (time < 1 || time + 1 > length - 1) return std::nullopt;
    auto first = deltaAt(time);
    auto second = deltaAt(time + 1);
    if (!first || !second) return std::nullopt;
    return std::make_pair(*first, *second);
  }
};

PartMotions partMotions(const Piece& piece, int part) {
  PartMotions result;
  result.motions.reserve(piece.length - 1);
  for (int time = 1; time < piece.length; ++time) {
    result.motions.push_back(
        eventMotion(piece.at(part, time), piece.at(part, time + 1), piece.mode));
  }
  return result;
}

void sortUnique(std::vector<ErrorRecord>& errors) {
  std::sort(errors.begin(), errors.end());
  errors.erase(std::unique(errors.begin(), errors.end()), errors.end());
}

/// @brief Impulse direction at time ``u``, or 0 when there is no impulse.
///
/// A leap-sized motion into u, or three same-direction step-sized motions
/// ending at u, create an impulse in that direction. Sizes are judged on the
/// raw delta so the rule is independent of scale membership (illegal motions
/// already carry their own error).
int impulseDirection(const PartMotions& motions, int u) {
  if (u >= 2) {
    auto entering = motions.deltaAt(u - 1);
    if (entering && isLeapSize(std::abs(*entering))) {
      return motionDirection(*entering);
    }
  }
  if (u >= 4) {
    auto first = motions.deltaAt(u - 3);
    auto second = motions.deltaAt(u - 2);
    auto third = motions.deltaAt(u - 1);
    if (first && second && third && isStepSize(std::abs(*first)) &&
        isStepSize(std::abs(*second)) && isStepSize(std::abs(*third))) {
      int dir = motionDirection(*first);
      if (dir != 0 && motionDirection(*second) == dir &&
          motionDirection(*third) == dir) {
        return dir;
      }
    }
  }
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Motions
// ---------------------------------------------------------------------------

Motion eventMotion(const Event& from, const Event& to, Mode mode) {
  if (from.isRest()) return {MotionKind::FromRest, 0};
  if (to.isRest()) return {MotionKind::ToRest, 0};
  return classifyMotion(from.note, to.note, mode);
}

// ---------------------------------------------------------------------------
// Progression
// ---------------------------------------------------------------------------

std::vector<ErrorRecord> checkProgression(const Piece& piece) {
  std::vector<ErrorRecord> errors;
  for (int part = 1; part <= piece.style.part_count; ++part) {
    for (int time = 1; time < piece.length; ++time) {
      Motion m = eventMotion(piece.at(part, time), piece.at(part, time + 1),
                             piece.mode);
      if (m.kind == MotionKind::Illegal) {
        errors.push_back({part, time, reasons::kIncorrectProgression});
      }
    }
  }
  sortUnique(errors);
  return errors;
}

// ---------------------------------------------------------------------------
// Melody
// ---------------------------------------------------------------------------

std::vector<ErrorRecord> checkMelody(const Piece& piece,
                                     const RuleConfig& config) {
  std::vector<ErrorRecord> errors;
  const int length = piece.length;
  const int window = config.repeat_window;

  for (int part : piece.style.melodic_parts) {
    if (part < 1 || part > piece.style.part_count) continue;
    PartMotions motions = partMotions(piece, part);

    // Repeats and octave-leap origins.
    for (int time = 1; time < length; ++time) {
      const Motion& m = motions.at(time);
      if (m.kind == MotionKind::Repeat) {
        errors.push_back({part, time, reasons::kRepeatInMelody});
      }
      auto delta = motions.deltaAt(time);
      if (delta && std::abs(*delta) == 12 &&
          chromaticClass(piece.at(part, time).note) != 1) {
        errors.push_back({part, time, reasons::kOctaveLeapOrigin});
      }
    }

    // Repeated notes: the same note leaving with the same motion twice,
    // close together. Reported at the first occurrence.
    for (int t1 = 1; t1 < length; ++t1) {
      auto d1 = motions.deltaAt(t1);
      if (!d1 || *d1 == 0) continue;
      for (int t2 = t1 + 2; t2 < length && t2 < t1 + 2 + window; ++t2) {
        auto d2 = motions.deltaAt(t2);
        if (!d2 || *d2 != *d1) continue;
        if (piece.at(part, t1).note == piece.at(part, t2).note) {
          errors.push_back({part, t1, reasons::kRepeatedNotes});
        }
      }
    }

    // Repeated patterns: the same delta pair twice, close together.
    // Reported at the first occurrence.
    for (int t1 = 1; t1 < length; ++t1) {
      auto p1 = motions.pairAt(t1, length);
      if (!p1) continue;
      for (int t2 = t1 + 2; t2 < length && t2 < t1 + 2 + window; ++t2) {
        auto p2 = motions.pairAt(t2, length);
        if (p2 && *p2 == *p1) {
          errors.push_back({part, t1, reasons::kRepeatedPattern});
        }
      }
    }

    // Split melody: a zigzag delta pair immediately re-run two steps later.
    for (int t1 = 1; t1 + 4 <= length; ++t1) {
      auto p1 = motions.pairAt(t1, length);
      auto p2 = motions.pairAt(t1 + 2, length);
      if (!p1 || !p2 || *p1 != *p2) continue;
      if (motionDirection(p1->first) != 0 &&
          motionDirection(p1->first) == -motionDirection(p1->second)) {
        errors.push_back({part, t1, reasons::kSplitMelody});
      }
    }

    // Contour: the part's lowest and highest notes must be consonant.
    // (Always judged with the two-part consonance set.)
    int lowest = kNoteMax + 1;
    int highest = kNoteMin - 1;
    for (int time = 1; time <= length; ++time) {
      const Event& event = piece.at(part, time);
      if (event.isRest()) continue;
      lowest = std::min(lowest, event.note);
      highest = std::max(highest, event.note);
    }
    if (lowest < highest) {
      int interval =
          chromaticInterval(chromaticClass(highest), chromaticClass(lowest));
      if (!isConsonantInterval(interval)) {
        errors.push_back({part, length, reasons::kDissonantContour});
      }
    }

    // Impulse resolution: a leap, or three same-direction steps, must be
    // answered by opposite-direction motion. The final step is exempt.
    for (int u = 2; u < length; ++u) {
      int dir = impulseDirection(motions, u);
      if (dir == 0) continue;
      auto resolution = motions.deltaAt(u);
      bool resolved = resolution && motionDirection(*resolution) == -dir;
      if (!resolved) {
        errors.push_back({part, u, reasons::kUnresolvedImpulse});
      }
    }
  }

  sortUnique(errors);
  return errors;
}

// ---------------------------------------------------------------------------
// Harmony
// ---------------------------------------------------------------------------

std::vector<ErrorRecord> checkHarmony(const Piece& piece) {
  std::vector<ErrorRecord> errors;
  for (int part = 1; part < piece.style.part_count; ++part) {
    for (int time = 1; time <= piece.length; ++time) {
      const Event& upper = piece.at(part, time);
      const Event& lower = piece.at(part + 1, time);
      if (upper.isRest() || lower.isRest()) continue;

      int interval = chromaticInterval(chromaticClass(upper.note),
                                       chromaticClass(lower.note));
      if (!isConsonantInterval(interval) &&
          piece.style.extra_valid_intervals.count(interval) == 0) {
        errors.push_back({part, time, reasons::kDissonantInterval});
      }
      if (upper.note > lower.note + 16) {
        errors.push_back({part, time, reasons::kOverMaxDistance});
      }
      if (upper.note < lower.note) {
        errors.push_back({part, time, reasons::kPartsCross});
      }
    }
  }
  sortUnique(errors);
  return errors;
}

// ---------------------------------------------------------------------------
// Style
// ---------------------------------------------------------------------------

std::vector<ErrorRecord> checkStyle(const Piece& piece) {
  std::vector<ErrorRecord> errors;
  const StyleSpec& style = piece.style;

  for (int part = 1; part <= style.part_count; ++part) {
    // Rests.
    if (!style.rests_allowed) {
      for (int time = 1; time <= piece.length; ++time) {
        if (piece.at(part, time).isRest()) {
          errors.push_back({part, time, reasons::kRestForbidden});
        }
      }
    }

    // Start policy.
    const Event& first = piece.at(part, 1);
    if (first.isRest()) {
      errors.push_back({part, 1, reasons::kIncorrectStartingNote});
    } else {
      auto exact = style.start.exact_notes.find(part);
      if (exact != style.start.exact_notes.end()) {
        if (first.note != exact->second) {
          errors.push_back({part, 1, reasons::kIncorrectStartingNote});
        }
      } else if (style.start.degree_classes.count(chromaticClass(first.note)) ==
                 0) {
        errors.push_back({part, 1, reasons::kIncorrectStartingNote});
      }
    }

    // Final policy.
    const Event& last = piece.at(part, piece.length);
    if (last.isRest()) {
      errors.push_back({part, piece.length, reasons::kIncorrectFinalNote});
    } else {
      const std::set<int>& allowed = style.isMelodic(part)
                                         ? style.melodic_final_classes
                                         : style.accompaniment_final_classes;
      if (allowed.count(chromaticClass(last.note)) == 0) {
        errors.push_back({part, piece.length, reasons::kIncorrectFinalNote});
      }
    }

    // Range: notes outside the part's range cannot be progressed to.
    NoteRange range = partRange(style, part);
    for (int time = 1; time <= piece.length; ++time) {
      const Event& event = piece.at(part, time);
      if (!event.isRest() && !range.contains(event.note)) {
        errors.push_back({part, time, reasons::kIncorrectProgression});
      }
    }
  }

  sortUnique(errors);
  return errors;
}

// ---------------------------------------------------------------------------
// Diagnose
// ---------------------------------------------------------------------------

std::vector<ErrorRecord> diagnose(const Piece& piece,
                                  const RuleConfig& config) {
  std::vector<ErrorRecord> errors = checkProgression(piece);
  std::vector<ErrorRecord> melody = checkMelody(piece, config);
  std::vector<ErrorRecord> harmony = checkHarmony(piece);
  std::vector<ErrorRecord> style = checkStyle(piece);
  errors.insert(errors.end(), melody.begin(), melody.end());
  errors.insert(errors.end(), harmony.begin(), harmony.end());
  errors.insert(errors.end(), style.begin(), style.end());

  errors.erase(std::remove_if(errors.begin(), errors.end(),
                              [&](const ErrorRecord& error) {
                                return !config.isEnabled(error.reason);
                              }),
               errors.end());
  sortUnique(errors);
  return errors;
}

}  // namespace cantus
