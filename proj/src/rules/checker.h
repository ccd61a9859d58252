#pragma once

/// @file
/// @brief Rule checkers: progression, melody, harmony, style.

#include <vector>

#include "rules/rule_config.h"
#include "score/piece.h"

namespace cantus {

/// @brief Motion between two consecutive events of one part.
///
/// Note-to-note motions are classified on the lattice; when a rest is
/// involved the kind is ToRest/FromRest (rest-to-rest counts as FromRest;
/// nothing constrains it either way).
Motion eventMotion(const Event& from, const Event& to, Mode mode);

/// @brief Illegal motions, for every part. Errors carry the departure time.
std::vector<ErrorRecord> checkProgression(const Piece& piece);

/// @brief Melodic-line rules, for melodic parts only: repeat ban, octave-leap
/// origin, repeated notes, repeated patterns, split melody, contour, and
/// impulse resolution. The config supplies the lookback window; toggles are
/// applied by diagnose, not here.
std::vector<ErrorRecord> checkMelody(const Piece& piece,
                                     const RuleConfig& config);

/// @brief Vertical rules for adjacent part pairs: interval consonance,
/// maximum distance, and crossing. Errors carry the upper part's number.
std::vector<ErrorRecord> checkHarmony(const Piece& piece);

/// @brief Style policies: start notes, final notes, per-part ranges, rests.
std::vector<ErrorRecord> checkStyle(const Piece& piece);

/// @brief All diagnostics: the union of the four checkers, deduplicated,
/// filtered by the config's rule toggles, sorted by (time, part, reason).
std::vector<ErrorRecord> diagnose(const Piece& piece,
                                  const RuleConfig& config = {});

}  // namespace cantus
