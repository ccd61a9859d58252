#pragma once

/// @file
/// @brief Ensemble styles: part counts, start policies, ranges, finals.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "pitch/pitch.h"

namespace cantus {

/// Bundled ensemble styles, by part count.
enum class StyleName { Solo, Duet, Trio, Quartet };

/// Inclusive note range on the lattice.
struct NoteRange {
  int lo = kNoteMin;
  int hi = kNoteMax;

  bool contains(int note) const { return note >= lo && note <= hi; }
  bool operator==(const NoteRange&) const = default;
};

/// Constraint on each part's first note: either a set of allowed chromatic
/// classes (degree choice) or an exact note per part.
struct StartPolicy {
  std::set<int> degree_classes;
  std::map<int, int> exact_notes;

  bool isExact() const { return !exact_notes.empty(); }
};

/// Everything the rules and the solver need to know about an ensemble.
/// Part 1 is the top part; parts are numbered downward.
struct StyleSpec {
  StyleName name = StyleName::Solo;
  int part_count = 1;
  std::set<int> melodic_parts;
  int lowest_part = 1;
  StartPolicy start;
  bool rests_allowed = false;

  /// Harmonic intervals allowed on top of the base consonance set.
  std::set<int> extra_valid_intervals;

  /// Allowed chromatic classes for the final note.
  std::set<int> melodic_final_classes;
  std::set<int> accompaniment_final_classes;

  /// Optional per-part range override. When absent, a part may use the
  /// whole lattice; the starts already center every part's tessitura.
  std::map<int, NoteRange> fixed_ranges;

  bool isMelodic(int part) const { return melodic_parts.count(part) > 0; }
};

/// @brief The bundled spec for a style.
StyleSpec styleSpec(StyleName name);

/// @brief Lower-case style name ("solo", "duet", "trio", "quartet").
std::string styleName(StyleName name);

/// @brief Parse a style name; empty if unknown.
std::optional<StyleName> styleFromName(std::string_view name);

/// @brief Effective range for a part: its fixed override if one is set,
/// otherwise the full lattice.
NoteRange partRange(const StyleSpec& style, int part);

}  // namespace cantus
