/// @file
/// @brief Bundled ensemble styles.

#include "score/style.h"

#include <algorithm>

namespace cantus {

namespace {

/// @brief Shared scaffolding: part 1 is the only melodic part, no rests,
/// melodic parts cadence on the fundamental, accompaniment on 1 or 5.
StyleSpec baseSpec(StyleName name, int part_count) {
  StyleSpec spec;
  spec.name = name;
  spec.part_count = part_count;
  spec.melodic_parts = {1};
  spec.lowest_part = part_count;
  spec.rests_allowed = false;
  spec.melodic_final_classes = {1};
  spec.accompaniment_final_classes = {1, 8};
  if (part_count >= 3) spec.extra_valid_intervals = {5};
  return spec;
}

}  // namespace

StyleSpec styleSpec(StyleName name) {
  switch (name) {
    case StyleName::Solo: {
      StyleSpec spec = baseSpec(name, 1);
      spec.start.degree_classes = {1, 8};
      return spec;
    }
    case StyleName::Duet: {
      StyleSpec spec = baseSpec(name, 2);
      spec.start.degree_classes = {1, 8};
      return spec;
    }
    case StyleName::Trio: {
      StyleSpec spec = baseSpec(name, 3);
      spec.start.degree_classes = {1, 8};
      return spec;
    }
    case StyleName::Quartet: {
      StyleSpec spec = baseSpec(name, 4);
      spec.start.exact_notes = {{1, 44}, {2, 37}, {3, 32}, {4, 25}};
      return spec;
    }
  }
  return styleSpec(StyleName::Solo);
}

std::string styleName(StyleName name) {
  switch (name) {
    case StyleName::Solo:    return "solo";
    case StyleName::Duet:    return "duet";
    case StyleName::Trio:    return "trio";
    case StyleName::Quartet: return "quartet";
  }
  return "solo";
}

std::optional<StyleName> styleFromName(std::string_view name) {
  for (StyleName candidate : {StyleName::Solo, StyleName::Duet,
                              StyleName::Trio, StyleName::Quartet}) {
    if (styleName(candidate) == name) return candidate;
  }
  return std::nullopt;
}

NoteRange partRange(const StyleSpec& style, int part) {
  auto fixed = style.fixed_ranges.find(part);
  if (fixed != style.fixed_ranges.end()) return fixed->second;
  return NoteRange{kNoteMin, kNoteMax};
}

}  // namespace cantus
