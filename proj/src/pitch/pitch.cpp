/// @file
/// @brief Note lattice and motion classification.

#include "pitch/pitch.h"

#include <algorithm>
#include <stdexcept>

namespace cantus {

namespace {

/// Scale class sets per mode, ascending. Class 1 is the fundamental; every
/// mode contains classes 1 and 8 (fundamental and fifth).
constexpr std::array<int, 7> kMajorClasses = {1, 3, 5, 6, 8, 10, 12};
constexpr std::array<int, 7> kMinorClasses = {1, 3, 4, 6, 8, 9, 12};
constexpr std::array<int, 7> kDorianClasses = {1, 3, 4, 6, 8, 10, 11};
constexpr std::array<int, 7> kLydianClasses = {1, 3, 5, 7, 8, 10, 12};
constexpr std::array<int, 7> kPhrygianClasses = {1, 2, 4, 6, 8, 9, 11};

}  // namespace

// ---------------------------------------------------------------------------
// Note lattice
// ---------------------------------------------------------------------------

bool isValidNote(int note) {
  return note >= kNoteMin && note <= kNoteMax;
}

int chromaticClass(int note) {
  if (!isValidNote(note)) {
    throw std::out_of_range("note " + std::to_string(note) +
                            " is off the lattice (1..68)");
  }
  return (note - 1) % 12 + 1;
}

// ---------------------------------------------------------------------------
// Modes
// ---------------------------------------------------------------------------

const std::array<int, 7>& scaleClasses(Mode mode) {
  switch (mode) {
    case Mode::Major:    return kMajorClasses;
    case Mode::Minor:    return kMinorClasses;
    case Mode::Dorian:   return kDorianClasses;
    case Mode::Lydian:   return kLydianClasses;
    case Mode::Phrygian: return kPhrygianClasses;
  }
  return kMajorClasses;
}

bool inScale(int note, Mode mode) {
  const auto& classes = scaleClasses(mode);
  int cls = chromaticClass(note);
  return std::find(classes.begin(), classes.end(), cls) != classes.end();
}

std::string modeName(Mode mode) {
  switch (mode) {
    case Mode::Major:    return "major";
    case Mode::Minor:    return "minor";
    case Mode::Dorian:   return "dorian";
    case Mode::Lydian:   return "lydian";
    case Mode::Phrygian: return "phrygian";
  }
  return "major";
}

std::optional<Mode> modeFromName(std::string_view name) {
  for (Mode mode : kAllModes) {
    if (modeName(mode) == name) return mode;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Intervals
// ---------------------------------------------------------------------------

int chromaticInterval(int upper, int lower) {
  return ((upper - lower) % 12 + 12) % 12;
}

bool isConsonantInterval(int interval) {
  return std::find(kConsonantIntervals.begin(), kConsonantIntervals.end(),
                   interval) != kConsonantIntervals.end();
}

// ---------------------------------------------------------------------------
// Motion classification
// ---------------------------------------------------------------------------

Motion classifyMotion(int from, int to, Mode mode) {
  if (!isValidNote(from)) {
    throw std::out_of_range("motion origin " + std::to_string(from) +
                            " is off the lattice (1..68)");
  }
  if (!isValidNote(to)) {
    throw std::out_of_range("motion target " + std::to_string(to) +
                            " is off the lattice (1..68)");
  }

  int delta = to - from;
  if (delta == 0) return {MotionKind::Repeat, 0};

  int size = std::abs(delta);
  bool is_step = isStepSize(size);
  bool is_leap = isLeapSize(size);
  if (!is_step && !is_leap) return {MotionKind::Illegal, delta};

  // Steps and leaps must land on a scale tone.
  if (!inScale(to, mode)) return {MotionKind::Illegal, delta};
  return {is_step ? MotionKind::Step : MotionKind::Leap, delta};
}

int motionDirection(int delta) {
  if (delta > 0) return 1;
  if (delta < 0) return -1;
  return 0;
}

}  // namespace cantus
