#pragma once

/// @file
/// @brief The part-by-time event grid and rule-violation records.

#include <optional>
#include <string>
#include <vector>

#include "pitch/pitch.h"
#include "score/style.h"

namespace cantus {

/// Shortest and longest supported piece, in time steps.
inline constexpr int kLengthMin = 2;
inline constexpr int kLengthMax = 64;

/// One grid cell: a note on the lattice or a rest.
struct Event {
  int note = 0;  ///< 0 encodes a rest.

  static Event rest() { return Event{}; }

  /// @brief A note event. Throws std::out_of_range off the lattice.
  static Event ofNote(int note);

  bool isRest() const { return note == 0; }
  bool operator==(const Event&) const = default;
};

/// A fully assigned piece. Parts and times are 1-based in the public API;
/// part 1 is the top part.
struct Piece {
  StyleSpec style;
  Mode mode = Mode::Major;
  int length = 0;
  std::vector<std::vector<Event>> parts;  ///< [part-1][time-1]

  const Event& at(int part, int time) const;
  Event& at(int part, int time);

  /// @brief Equal when style name, mode, length, and grid all match.
  bool operator==(const Piece& other) const;
};

/// @brief An all-rest grid for a style and length (throws on bad length).
Piece makePiece(const StyleSpec& style, Mode mode, int length);

/// @brief A piece from per-part note rows; throws std::invalid_argument on
/// shape mismatch or off-lattice values.
Piece makePiece(const StyleSpec& style, Mode mode,
                const std::vector<std::vector<int>>& rows);

/// A partially assigned piece; unset cells are free for the solver.
struct PartialPiece {
  StyleSpec style;
  Mode mode = Mode::Major;
  int length = 0;
  std::vector<std::vector<std::optional<Event>>> cells;  ///< [part-1][time-1]

  const std::optional<Event>& at(int part, int time) const;
  std::optional<Event>& at(int part, int time);
  bool isComplete() const;

  /// @brief Convert to a Piece. Throws std::logic_error if any cell is unset.
  Piece toPiece() const;
};

/// @brief A fully unset grid for a style and length (throws on bad length).
PartialPiece makePartialPiece(const StyleSpec& style, Mode mode, int length);

/// A rule violation at a grid position.
struct ErrorRecord {
  int part = 0;
  int time = 0;
  std::string reason;

  bool operator==(const ErrorRecord&) const = default;
};

/// @brief Diagnostics order: by time, then part, then reason string.
bool operator<(const ErrorRecord& a, const ErrorRecord& b);

/// @brief Render as ``error(P,T,"Reason")``.
std::string formatError(const ErrorRecord& error);

}  // namespace cantus
