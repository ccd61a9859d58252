/// @file
/// @brief Event grid construction and error records.

#include "score/piece.h"

#include <stdexcept>
#include <tuple>

namespace cantus {

namespace {

void checkLength(int length) {
  if (length < kLengthMin || length > kLengthMax) {
    throw std::invalid_argument("piece length " + std::to_string(length) +
                                " outside " + std::to_string(kLengthMin) +
                                ".." + std::to_string(kLengthMax));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Event
// ---------------------------------------------------------------------------

Event Event::ofNote(int note) {
  if (!isValidNote(note)) {
    throw std::out_of_range("note " + std::to_string(note) +
                            " is off the lattice (1..68)");
  }
  Event event;
  event.note = note;
  return event;
}

// ---------------------------------------------------------------------------
// Piece
// ---------------------------------------------------------------------------

const Event& Piece::at(int part, int time) const {
  return parts.at(part - 1).at(time - 1);
}

Event& Piece::at(int part, int time) {
  return parts.at(part - 1).at(time - 1);
}

bool Piece::operator==(const Piece& other) const {
  return style.name == other.style.name && mode == other.mode &&
         length == other.length && parts == other.parts;
}

Piece makePiece(const StyleSpec& style, Mode mode, int length) {
  checkLength(length);
  Piece piece;
  piece.style = style;
  piece.mode = mode;
  piece.length = length;
  piece.parts.assign(style.part_count, std::vector<Event>(length));
  return piece;
}

Piece makePiece(const StyleSpec& style, Mode mode,
                const std::vector<std::vector<int>>& rows) {
  if (static_cast<int>(rows.size()) != style.part_count) {
    throw std::invalid_argument("expected " +
                                std::to_string(style.part_count) +
                                " part rows, got " +
                                std::to_string(rows.size()));
  }
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) {
      throw std::invalid_argument("part rows differ in length");
    }
  }
  Piece piece = makePiece(style, mode, static_cast<int>(rows.front().size()));
  for (int part = 1; part <= style.part_count; ++part) {
    for (int time = 1; time <= piece.length; ++time) {
      piece.at(part, time) = Event::ofNote(rows[part - 1][time - 1]);
    }
  }
  return piece;
}

// ---------------------------------------------------------------------------
// PartialPiece
// ---------------------------------------------------------------------------

const std::optional<Event>& PartialPiece::at(int part, int time) const {
  return cells.at(part - 1).at(time - 1);
}

std::optional<Event>& PartialPiece::at(int part, int time) {
  return cells.at(part - 1).at(time - 1);
}

bool PartialPiece::isComplete() const {
  for (const auto& row : cells) {
    for (const auto& cell : row) {
      if (!cell.has_value()) return false;
    }
  }
  return true;
}

Piece PartialPiece::toPiece() const {
  Piece piece = makePiece(style, mode, length);
  for (int part = 1; part <= style.part_count; ++part) {
    for (int time = 1; time <= length; ++time) {
      const auto& cell = at(part, time);
      if (!cell.has_value()) {
        throw std::logic_error("cell (" + std::to_string(part) + "," +
                               std::to_string(time) + ") is unassigned");
      }
      piece.at(part, time) = *cell;
    }
  }
  return piece;
}

PartialPiece makePartialPiece(const StyleSpec& style, Mode mode, int length) {
  checkLength(length);
  PartialPiece partial;
  partial.style = style;
  partial.mode = mode;
  partial.length = length;
  partial.cells.assign(style.part_count,
                       std::vector<std::optional<Event>>(length));
  return partial;
}

// ---------------------------------------------------------------------------
// ErrorRecord
// ---------------------------------------------------------------------------

bool operator<(const ErrorRecord& a, const ErrorRecord& b) {
  return std::tie(a.time, a.part, a.reason) < std::tie(b.time, b.part, b.reason);
}

std::string formatError(const ErrorRecord& error) {
  return "error(" + std::to_string(error.part) + "," +
         std::to_string(error.time) + ",\"" + error.reason + "\")";
}

}  // namespace cantus
