#pragma once

/// @file
/// @brief Fact-format parsing and serialization.

#include <stdexcept>
#include <string>

#include "score/piece.h"

namespace cantus {

/// Fact-text parse or validation failure. ``line`` is 1-based; 0 means the
/// problem is with the file as a whole (e.g. a missing required fact).
class FactParseError : public std::runtime_error {
 public:
  FactParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// @brief Parse fact text into a (possibly partial) piece.
///
/// Accepted facts, one per line, each ending in a period:
///   chosenNote(P,T,N). rest(P,T). keyMode(m). mode(m). style(s).
///   part(lo..hi). part(k). #const t=N.
/// "%" starts a comment; whitespace is insignificant; facts may appear in any
/// order. style and t are required, mode defaults to major. Duplicate facts
/// with equal values are accepted; conflicting values raise FactParseError
/// with the offending line.
PartialPiece parseFacts(const std::string& text);

/// @brief Canonical fact serialization of a complete piece.
///
/// Emits mode, style, #const t, the part declaration, then one line per grid
/// cell ordered by (part, time). parseFacts(emitFacts(p)) reproduces p.
std::string emitFacts(const Piece& piece);

}  // namespace cantus
