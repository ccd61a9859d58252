/// @file
/// @brief Output back-ends: MIDI pitch mapping, the human-readable score
/// block, the timed event list, and score-engraver text.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rhythm/timed_piece.h"
#include "score/piece.h"

namespace cantus {

// ---------------------------------------------------------------------------
// Fundamentals and pitch mapping
// ---------------------------------------------------------------------------

/// Pitch letter the note lattice is anchored on: lattice note 1 sounds as
/// this letter's pitch class.
enum class Fundamental { C, D, E, F, G, A, B };

/// Semitone offset of the fundamental above C: c 0, d 2, e 4, f 5, g 7,
/// a 9, b 11.
int fundamentalOffset(Fundamental fundamental);

std::string fundamentalName(Fundamental fundamental);
std::optional<Fundamental> fundamentalFromName(std::string_view name);

/// @brief MIDI pitch of a lattice note: note + 23 + offset(fundamental).
///
/// The +23 base anchors lattice note 25 at MIDI 48 (C3) under fundamental c.
/// Throws std::out_of_range for notes off the lattice.
int midiPitch(int note, Fundamental fundamental);

// ---------------------------------------------------------------------------
// Renderers
// ---------------------------------------------------------------------------

/// @brief Human-readable block: per part a MIDI number row, a note-name row
/// with octave ticks, and a signed delta row ("" where no delta exists).
///
/// Rows are column-aligned with staircase prefixes ("| ", "|  ", "|   ");
/// octave ticks count octave boundaries above the part's starting note.
/// Parts are separated by a blank line.
std::string renderHuman(const Piece& piece, Fundamental fundamental);

/// Timed variant: adds a fourth row per part with the tree s-expression.
std::string renderHuman(const TimedPiece& timed, Fundamental fundamental);

/// @brief Timed event list, one "part,onset,duration,midi" line per note.
///
/// Onsets and durations are the exact fractions scaled to
/// ``whole_duration_seconds``, printed as 6-decimal fixed point, sorted by
/// (onset, part). Rests emit no line.
std::string renderEvents(const TimedPiece& timed, Fundamental fundamental,
                         double whole_duration_seconds);

/// @brief Score-engraver (LilyPond) source: one staff per part in order,
/// absolute pitch names, quarter notes throughout.
std::string renderEngraver(const Piece& piece, Fundamental fundamental);

/// Timed variant: note durations snap to the power of two nearest (in log
/// scale) to each leaf span.
std::string renderEngraver(const TimedPiece& timed, Fundamental fundamental);

}  // namespace cantus
