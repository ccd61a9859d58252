/// @file
/// @brief Render back-ends: human block, event list, engraver text.

#include "render/render.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "pitch/pitch.h"
#include "rhythm/partition_tree.h"

namespace cantus {

namespace {

constexpr std::array<const char*, 7> kFundamentalNames = {"c", "d", "e", "f",
                                                          "g", "a", "b"};
constexpr std::array<int, 7> kFundamentalOffsets = {0, 2, 4, 5, 7, 9, 11};

/// Pitch-class spellings, sharps only (the lattice has no flat spellings).
constexpr std::array<const char*, 12> kPitchClassNames = {
    "C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"};
constexpr std::array<const char*, 12> kEngraverNames = {
    "c", "cis", "d", "dis", "e", "f", "fis", "g", "gis", "a", "ais", "b"};

std::string rstrip(std::string row) {
  while (!row.empty() && row.back() == ' ') row.pop_back();
  return row;
}

// --- Human block -------------------------------------------------------------

/// Delta token between two events: signed distance, "" for repeats and for
/// motions without a delta (rests on either side).
std::string deltaToken(const Event& from, const Event& to) {
  if (from.isRest() || to.isRest()) return "\"\"";
  int delta = to.note - from.note;
  if (delta == 0) return "\"\"";
  if (delta > 0) return "+" + std::to_string(delta);
  return std::to_string(delta);
}

void appendPartRows(std::string& out, const Piece& piece, int part,
                    Fundamental fundamental, const std::string* tree_row) {
  // The first sounded note anchors the part's octave-tick reference.
  int start_midi = -1;
  for (int time = 1; time <= piece.length && start_midi < 0; ++time) {
    const Event& event = piece.at(part, time);
    if (!event.isRest()) start_midi = midiPitch(event.note, fundamental);
  }

  std::string numbers = "| ";
  std::string names = "|  ";
  std::string deltas = "|   ";
  for (int time = 1; time <= piece.length; ++time) {
    const Event& event = piece.at(part, time);
    std::string number = "r";
    std::string name = "r";
    if (!event.isRest()) {
      int midi = midiPitch(event.note, fundamental);
      number = std::to_string(midi);
      name = kPitchClassNames[static_cast<std::size_t>(midi % 12)];
      int ticks = midi / 12 - start_midi / 12;
      for (int k = 0; k < ticks; ++k) name += '\'';
    }
    while (name.size() < 2) name += ' ';
    numbers += number + " ";
    names += name + " ";
    if (time < piece.length) {
      deltas += deltaToken(event, piece.at(part, time + 1)) + " ";
    }
  }

  out += rstrip(std::move(numbers)) + "\n";
  out += rstrip(std::move(names)) + "\n";
  out += rstrip(std::move(deltas)) + "\n";
  if (tree_row != nullptr) out += *tree_row + "\n";
}

std::string renderHumanBlock(const Piece& piece, Fundamental fundamental,
                             const std::string* tree_row) {
  std::string out;
  for (int part = 1; part <= piece.style.part_count; ++part) {
    if (part > 1) out += "\n";
    appendPartRows(out, piece, part, fundamental, tree_row);
  }
  return out;
}

// --- Engraver ----------------------------------------------------------------

std::string engraverPitch(int midi) {
  std::string name = kEngraverNames[static_cast<std::size_t>(midi % 12)];
  int octave = midi / 12 - 4;  // 0 = the octave of c (MIDI 48)
  for (int k = 0; k < octave; ++k) name += '\'';
  for (int k = 0; k < -octave; ++k) name += ',';
  return name;
}

/// Duration token: the power of two nearest to the span in log scale,
/// clamped to whole..64th notes.
std::string engraverDuration(const Fraction& width) {
  double inverse = static_cast<double>(width.den) / static_cast<double>(width.num);
  int exponent = static_cast<int>(std::lround(std::log2(inverse)));
  exponent = std::clamp(exponent, 0, 6);
  return std::to_string(1 << exponent);
}

std::string renderEngraverBlock(const Piece& piece, Fundamental fundamental,
                                const std::vector<Fraction>* widths) {
  std::string out = "\\version \"2.24.0\"\n\\score {\n  <<\n";
  for (int part = 1; part <= piece.style.part_count; ++part) {
    out += "    \\new Staff { ";
    for (int time = 1; time <= piece.length; ++time) {
      const Event& event = piece.at(part, time);
      std::string token =
          event.isRest()
              ? "r"
              : engraverPitch(midiPitch(event.note, fundamental));
      token += widths == nullptr
                   ? "4"
                   : engraverDuration((*widths)[static_cast<std::size_t>(time - 1)]);
      out += token + " ";
    }
    out += "}\n";
  }
  out += "  >>\n  \\layout { }\n}\n";
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Fundamentals and pitch mapping
// ---------------------------------------------------------------------------

int fundamentalOffset(Fundamental fundamental) {
  return kFundamentalOffsets[static_cast<std::size_t>(fundamental)];
}

std::string fundamentalName(Fundamental fundamental) {
  return kFundamentalNames[static_cast<std::size_t>(fundamental)];
}

std::optional<Fundamental> fundamentalFromName(std::string_view name) {
  for (std::size_t i = 0; i < kFundamentalNames.size(); ++i) {
    if (name == kFundamentalNames[i]) return static_cast<Fundamental>(i);
  }
  return std::nullopt;
}

int midiPitch(int note, Fundamental fundamental) {
  if (!isValidNote(note)) {
    throw std::out_of_range("note " + std::to_string(note) +
                            " is off the lattice (1..68)");
  }
  return note + 23 + fundamentalOffset(fundamental);
}

// ---------------------------------------------------------------------------
// Renderers
// ---------------------------------------------------------------------------

std::string renderHuman(const Piece& piece, Fundamental fundamental) {
  return renderHumanBlock(piece, fundamental, nullptr);
}

std::string renderHuman(const TimedPiece& timed, Fundamental fundamental) {
  std::string tree_row = "| " + treeToSexpr(timed.tree);
  return renderHumanBlock(timed.piece, fundamental, &tree_row);
}

std::string renderEvents(const TimedPiece& timed, Fundamental fundamental,
                         double whole_duration_seconds) {
  std::string out;
  char line[128];
  for (int time = 1; time <= timed.piece.length; ++time) {
    const Fraction& onset = timed.onsets[static_cast<std::size_t>(time - 1)];
    const Fraction& width = timed.durations[static_cast<std::size_t>(time - 1)];
    double onset_s = static_cast<double>(onset.num) * whole_duration_seconds /
                     static_cast<double>(onset.den);
    double duration_s = static_cast<double>(width.num) *
                        whole_duration_seconds /
                        static_cast<double>(width.den);
    for (int part = 1; part <= timed.piece.style.part_count; ++part) {
      const Event& event = timed.piece.at(part, time);
      if (event.isRest()) continue;
      std::snprintf(line, sizeof line, "%d,%.6f,%.6f,%d\n", part, onset_s,
                    duration_s, midiPitch(event.note, fundamental));
      out += line;
    }
  }
  return out;
}

std::string renderEngraver(const Piece& piece, Fundamental fundamental) {
  return renderEngraverBlock(piece, fundamental, nullptr);
}

std::string renderEngraver(const TimedPiece& timed, Fundamental fundamental) {
  return renderEngraverBlock(timed.piece, fundamental, &timed.durations);
}

}  // namespace cantus
