#pragma once

/// @file
/// @brief Note lattice, modes, scale membership, and motion classification.

#include <array>
#include <string>
#include <string_view>
#include <optional>

namespace cantus {

// ---------------------------------------------------------------------------
// Note lattice
// ---------------------------------------------------------------------------

/// Notes live on an abstract lattice of 68 chromatic steps. Note 1 is the
/// lowest representable pitch; the mapping to concrete MIDI pitches is the
/// renderer's business (it depends on the chosen fundamental).
inline constexpr int kNoteMin = 1;
inline constexpr int kNoteMax = 68;

/// @brief True if ``note`` lies on the lattice.
bool isValidNote(int note);

/// @brief Chromatic class of a note, in 1..12. Class 1 is the fundamental.
///
/// Throws std::out_of_range for notes off the lattice.
int chromaticClass(int note);

// ---------------------------------------------------------------------------
// Modes
// ---------------------------------------------------------------------------

/// Scale flavors. Minor is the harmonic minor scale.
enum class Mode { Major, Minor, Dorian, Lydian, Phrygian };

inline constexpr std::array<Mode, 5> kAllModes = {
    Mode::Major, Mode::Minor, Mode::Dorian, Mode::Lydian, Mode::Phrygian};

/// @brief The seven chromatic classes belonging to a mode, ascending.
const std::array<int, 7>& scaleClasses(Mode mode);

/// @brief True if the note's chromatic class belongs to the mode.
bool inScale(int note, Mode mode);

/// @brief Lower-case mode name ("major", "minor", ...).
std::string modeName(Mode mode);

/// @brief Parse a mode name; empty if unknown.
std::optional<Mode> modeFromName(std::string_view name);

// ---------------------------------------------------------------------------
// Intervals
// ---------------------------------------------------------------------------

/// @brief Directional chromatic interval between two classes, in 0..11.
///
/// ``upper`` is the class of the higher part. The interval is measured
/// downward: ((upper - lower) mod 12 + 12) mod 12.
int chromaticInterval(int upper, int lower);

/// Chromatic intervals considered consonant between two parts.
/// (Unison/octave, thirds, fifth, sixths.) Styles with three or more parts
/// extend this set; see StyleSpec::extra_valid_intervals.
inline constexpr std::array<int, 6> kConsonantIntervals = {0, 3, 4, 7, 8, 9};

/// @brief True if ``interval`` is in the base consonance set.
bool isConsonantInterval(int interval);

// ---------------------------------------------------------------------------
// Motion classification
// ---------------------------------------------------------------------------

/// Kinds of motion between two consecutive time steps of one part.
enum class MotionKind { Repeat, Step, Leap, ToRest, FromRest, Illegal };

/// A classified motion. ``delta`` is the signed lattice difference
/// (destination minus origin); it is zero for Repeat and meaningless for
/// the rest-related kinds.
struct Motion {
  MotionKind kind = MotionKind::Illegal;
  int delta = 0;

  bool operator==(const Motion&) const = default;
};

/// Legal step sizes (absolute lattice distance).
inline constexpr std::array<int, 2> kStepSizes = {1, 2};

/// Legal leap sizes (absolute lattice distance). The tritone (6) and
/// anything above an octave are never legal.
inline constexpr std::array<int, 7> kLeapSizes = {3, 4, 5, 7, 8, 9, 12};

/// @brief True if ``size`` is a legal step distance.
constexpr bool isStepSize(int size) {
  for (int step : kStepSizes) {
    if (step == size) return true;
  }
  return false;
}

/// @brief True if ``size`` is a legal leap distance.
constexpr bool isLeapSize(int size) {
  for (int leap : kLeapSizes) {
    if (leap == size) return true;
  }
  return false;
}

/// @brief Classify the motion from note ``from`` to note ``to`` in a mode.
///
/// Repeat needs no scale membership (the origin already sounded); Step and
/// Leap additionally require the landing note's class to be in the mode's
/// scale, otherwise the motion is Illegal. Throws std::out_of_range if either
/// note is off the lattice.
Motion classifyMotion(int from, int to, Mode mode);

/// @brief -1, 0, or +1 by the sign of a motion delta.
int motionDirection(int delta);

}  // namespace cantus
