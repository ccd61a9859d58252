/// @file
/// @brief Seeded backtracking search over the piece grid.
///
/// Cells are ordered column-major: (part 1, time 1), (part 2, time 1), ...,
/// then time 2, and so on. Each cell's candidate values are a seeded shuffle
/// of its domain. Every assignment is checked against the rule prefix it
/// completes, so each rule fires at the earliest cell that decides it; a full
/// assignment is additionally re-checked with diagnose() before it is
/// accepted, which keeps the search honest about checker semantics.

#include "solver/search.h"

#include <algorithm>
#include <cstdlib>

#include "rules/checker.h"
#include "solver/shuffle.h"

namespace cantus {

namespace {

/// Per-rule enable flags, resolved once per search to keep the hot path off
/// std::set lookups.
struct RuleFlags {
  bool progression;
  bool repeat_ban;
  bool octave_origin;
  bool repeated_notes;
  bool repeated_pattern;
  bool split_melody;
  bool contour;
  bool impulse;
  bool interval;
  bool distance;
  bool cross;
  bool start_note;
  bool final_note;
  bool rest_ban;
  bool extreme;

  explicit RuleFlags(const RuleConfig& config)
      : progression(config.isEnabled(reasons::kIncorrectProgression)),
        repeat_ban(config.isEnabled(reasons::kRepeatInMelody)),
        octave_origin(config.isEnabled(reasons::kOctaveLeapOrigin)),
        repeated_notes(config.isEnabled(reasons::kRepeatedNotes)),
        repeated_pattern(config.isEnabled(reasons::kRepeatedPattern)),
        split_melody(config.isEnabled(reasons::kSplitMelody)),
        contour(config.isEnabled(reasons::kDissonantContour)),
        impulse(config.isEnabled(reasons::kUnresolvedImpulse)),
        interval(config.isEnabled(reasons::kDissonantInterval)),
        distance(config.isEnabled(reasons::kOverMaxDistance)),
        cross(config.isEnabled(reasons::kPartsCross)),
        start_note(config.isEnabled(reasons::kIncorrectStartingNote)),
        final_note(config.isEnabled(reasons::kIncorrectFinalNote)),
        rest_ban(config.isEnabled(reasons::kRestForbidden)),
        extreme(config.isEnabled(reasons::kExtremeNoteTooShort)) {}
};

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

class Search {
 public:
  Search(const PartialPiece& partial, const SolverOptions& options)
      : style_(partial.style),
        mode_(partial.mode),
        length_(partial.length),
        options_(options),
        flags_(options.rules),
        partial_(partial),
        grid_(makePiece(partial.style, partial.mode, partial.length)),
        cell_count_(partial.style.part_count * partial.length) {}

  EnumerateResult run(long long limit);

 private:
  struct Frame {
    std::vector<Event> candidates;
    std::size_t next = 0;
  };

  int partOf(int cell) const { return cell % style_.part_count + 1; }
  int timeOf(int cell) const { return cell / style_.part_count + 1; }

  std::vector<Event> candidatesFor(int cell) const;
  std::vector<int> domainNotes(int part, int time) const;
  bool checkCell(int part, int time) const;
  bool checkMelodicWindows(int part, int time) const;
  bool checkFinalColumn(int part) const;

  const StyleSpec& style_;
  Mode mode_;
  int length_;
  SolverOptions options_;
  RuleFlags flags_;
  const PartialPiece& partial_;
  Piece grid_;
  int cell_count_;
  long long nodes_ = 0;
};

std::vector<int> Search::domainNotes(int part, int time) const {
  std::vector<int> notes;

  auto exact = style_.start.exact_notes.find(part);
  if (time == 1 && flags_.start_note && exact != style_.start.exact_notes.end()) {
    notes.push_back(exact->second);
    return notes;
  }

  NoteRange bounds{kNoteMin, kNoteMax};
  if (flags_.progression) bounds = partRange(style_, part);
  bool filter_classes = time == 1 && flags_.start_note;
  notes.reserve(static_cast<std::size_t>(bounds.hi - bounds.lo + 1));
  for (int note = bounds.lo; note <= bounds.hi; ++note) {
    if (filter_classes &&
        style_.start.degree_classes.count(chromaticClass(note)) == 0) {
      continue;
    }
    notes.push_back(note);
  }
  return notes;
}

std::vector<Event> Search::candidatesFor(int cell) const {
  int part = partOf(cell);
  int time = timeOf(cell);
  const auto& pin = partial_.at(part, time);
  if (pin.has_value()) return {*pin};

  std::vector<int> notes = seededShuffle(domainNotes(part, time),
                                         options_.seed,
                                         static_cast<std::uint64_t>(cell));
  std::vector<Event> events;
  events.reserve(notes.size() + 1);
  for (int note : notes) events.push_back(Event{note});
  if (style_.rests_allowed) events.push_back(Event::rest());
  return events;
}

bool Search::checkCell(int part, int time) const {
  const Event& event = grid_.at(part, time);
  const bool melodic = style_.isMelodic(part);

  if (event.isRest()) {
    if (!style_.rests_allowed && flags_.rest_ban) return false;
    if (time == 1 && flags_.start_note) return false;
    if (time == length_ && flags_.final_note) return false;
  } else {
    if (time == 1 && flags_.start_note) {
      auto exact = style_.start.exact_notes.find(part);
      if (exact != style_.start.exact_notes.end()) {
        if (event.note != exact->second) return false;
      } else if (style_.start.degree_classes.count(
                     chromaticClass(event.note)) == 0) {
        return false;
      }
    }
    if (flags_.progression && !partRange(style_, part).contains(event.note)) {
      return false;
    }
  }

  // The motion this assignment completes.
  if (time > 1) {
    Motion motion = eventMotion(grid_.at(part, time - 1), event, mode_);
    if (flags_.progression && motion.kind == MotionKind::Illegal) return false;
    if (melodic) {
      if (flags_.repeat_ban && motion.kind == MotionKind::Repeat) return false;
      if (flags_.octave_origin && !event.isRest() &&
          !grid_.at(part, time - 1).isRest() &&
          std::abs(event.note - grid_.at(part, time - 1).note) == 12 &&
          chromaticClass(grid_.at(part, time - 1).note) != 1) {
        return false;
      }
      if (!checkMelodicWindows(part, time)) return false;
    }
  }

  // Harmony against the upper neighbor, assigned earlier in this column.
  if (part > 1 && !event.isRest()) {
    const Event& upper = grid_.at(part - 1, time);
    if (!upper.isRest()) {
      int interval = chromaticInterval(chromaticClass(upper.note),
                                       chromaticClass(event.note));
      if (flags_.interval && !isConsonantInterval(interval) &&
          style_.extra_valid_intervals.count(interval) == 0) {
        return false;
      }
      if (flags_.distance && upper.note > event.note + 16) return false;
      if (flags_.cross && upper.note < event.note) return false;
    }
  }

  if (time == length_ && !checkFinalColumn(part)) return false;
  return true;
}

bool Search::checkMelodicWindows(int part, int time) const {
  auto deltaAt = [&](int t) -> std::optional<int> {
    const Event& a = grid_.at(part, t);
    const Event& b = grid_.at(part, t + 1);
    if (a.isRest() || b.isRest()) return std::nullopt;
    return b.note - a.note;
  };

  const int window = options_.rules.repeat_window;
  const int m = time - 1;  // the motion completed by this assignment
  auto dm = deltaAt(m);

  // Repeated notes: this motion is the later occurrence T2 = m.
  if (flags_.repeated_notes && dm && *dm != 0) {
    for (int t1 = std::max(1, m - window - 1); t1 <= m - 2; ++t1) {
      auto d1 = deltaAt(t1);
      if (d1 && *d1 == *dm &&
          grid_.at(part, t1).note == grid_.at(part, m).note) {
        return false;
      }
    }
  }

  // Repeated pattern: this motion completes the pair starting at m-1.
  if (flags_.repeated_pattern && m >= 2) {
    auto d_prev = deltaAt(m - 1);
    if (d_prev && dm) {
      int t2 = m - 1;
      for (int t1 = std::max(1, t2 - window - 1); t1 <= t2 - 2; ++t1) {
        auto a = deltaAt(t1);
        auto b = deltaAt(t1 + 1);
        if (a && b && *a == *d_prev && *b == *dm) return false;
      }
    }
  }

  // Split melody: this motion completes the pair starting at m-1, which may
  // replay the zigzag pair at m-3.
  if (flags_.split_melody && m >= 4) {
    auto a1 = deltaAt(m - 3);
    auto b1 = deltaAt(m - 2);
    auto a2 = deltaAt(m - 1);
    if (a1 && b1 && a2 && dm && *a1 == *a2 && *b1 == *dm &&
        motionDirection(*a1) != 0 &&
        motionDirection(*a1) == -motionDirection(*b1)) {
      return false;
    }
  }

  // Impulse at u = m: the new motion is its resolution.
  if (flags_.impulse && m >= 2) {
    int dir = 0;
    auto entering = deltaAt(m - 1);
    if (entering && isLeapSize(std::abs(*entering))) {
      dir = motionDirection(*entering);
    } else if (m >= 4) {
      auto s1 = deltaAt(m - 3);
      auto s2 = deltaAt(m - 2);
      auto s3 = deltaAt(m - 1);
      if (s1 && s2 && s3 && isStepSize(std::abs(*s1)) &&
          isStepSize(std::abs(*s2)) && isStepSize(std::abs(*s3))) {
        int d1 = motionDirection(*s1);
        if (d1 != 0 && motionDirection(*s2) == d1 &&
            motionDirection(*s3) == d1) {
          dir = d1;
        }
      }
    }
    if (dir != 0) {
      bool resolved = dm && motionDirection(*dm) == -dir;
      if (!resolved) return false;
    }
  }

  return true;
}

bool Search::checkFinalColumn(int part) const {
  const Event& last = grid_.at(part, length_);

  if (flags_.final_note && !last.isRest()) {
    const std::set<int>& allowed = style_.isMelodic(part)
                                       ? style_.melodic_final_classes
                                       : style_.accompaniment_final_classes;
    if (allowed.count(chromaticClass(last.note)) == 0) return false;
  }

  int lowest = kNoteMax + 1;
  int highest = kNoteMin - 1;
  for (int time = 1; time <= length_; ++time) {
    const Event& event = grid_.at(part, time);
    if (event.isRest()) continue;
    lowest = std::min(lowest, event.note);
    highest = std::max(highest, event.note);
  }

  if (flags_.contour && style_.isMelodic(part) && lowest < highest) {
    int interval =
        chromaticInterval(chromaticClass(highest), chromaticClass(lowest));
    if (!isConsonantInterval(interval)) return false;
  }

  if (options_.rhythm && flags_.extreme && lowest <= highest) {
    const std::vector<int>& strengths = options_.rhythm->duration_strengths;
    for (int time = 1; time <= length_; ++time) {
      const Event& event = grid_.at(part, time);
      if (event.isRest()) continue;
      if ((event.note == lowest || event.note == highest) &&
          strengths[time - 1] != 1) {
        return false;
      }
    }
  }

  return true;
}

EnumerateResult Search::run(long long limit) {
  EnumerateResult result;

  std::vector<Frame> frames(cell_count_);
  int pos = 0;
  frames[0].candidates = candidatesFor(0);

  while (true) {
    if (pos == cell_count_) {
      // Full assignment; accept only what diagnose accepts.
      if (diagnose(grid_, options_.rules).empty()) {
        result.pieces.push_back(grid_);
        if (limit > 0 &&
            static_cast<long long>(result.pieces.size()) >= limit) {
          result.status = SolveStatus::Solved;
          result.nodes = nodes_;
          return result;
        }
      }
      --pos;
      continue;
    }

    Frame& frame = frames[pos];
    bool assigned = false;
    while (frame.next < frame.candidates.size()) {
      if (options_.node_budget > 0 && nodes_ >= options_.node_budget) {
        result.status = SolveStatus::BudgetExhausted;
        result.nodes = nodes_;
        return result;
      }
      ++nodes_;
      grid_.at(partOf(pos), timeOf(pos)) = frame.candidates[frame.next++];
      if (checkCell(partOf(pos), timeOf(pos))) {
        assigned = true;
        break;
      }
    }

    if (assigned) {
      ++pos;
      if (pos < cell_count_) {
        frames[pos].candidates = candidatesFor(pos);
        frames[pos].next = 0;
      }
      continue;
    }

    // Cell exhausted. A part-1 cell's domain and checks involve part 1 only,
    // so when one fails completely, re-tuning the other parts in the previous
    // column cannot help: jump straight to the previous part-1 cell.
    int target;
    if (pos % style_.part_count == 0 && pos >= style_.part_count) {
      target = pos - style_.part_count;
    } else {
      target = pos - 1;
    }
    if (target < 0) {
      result.status = result.pieces.empty() ? SolveStatus::Unsatisfiable
                                            : SolveStatus::Solved;
      result.nodes = nodes_;
      return result;
    }
    pos = target;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

SolveResult compose(const StyleSpec& style, Mode mode, int length,
                    const SolverOptions& options) {
  return complete(makePartialPiece(style, mode, length), options);
}

SolveResult complete(const PartialPiece& partial,
                     const SolverOptions& options) {
  EnumerateResult enumerated = enumerateCompletions(partial, 1, options);
  SolveResult result;
  result.status = enumerated.status;
  result.nodes = enumerated.nodes;
  if (!enumerated.pieces.empty()) result.piece = enumerated.pieces.front();
  return result;
}

EnumerateResult enumerateCompletions(const PartialPiece& partial,
                                     long long limit,
                                     const SolverOptions& options) {
  if (options.rhythm &&
      options.rhythm->duration_strengths.size() !=
          static_cast<std::size_t>(partial.length)) {
    throw std::invalid_argument(
        "rhythm profile covers " +
        std::to_string(options.rhythm->duration_strengths.size()) +
        " steps but the piece has " + std::to_string(partial.length));
  }
  Search search(partial, options);
  return search.run(limit);
}

EnumerateResult enumeratePieces(const StyleSpec& style, Mode mode, int length,
                                long long limit,
                                const SolverOptions& options) {
  return enumerateCompletions(makePartialPiece(style, mode, length), limit,
                              options);
}

}  // namespace cantus
