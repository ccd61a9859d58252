/// @file
/// @brief Fact-format parsing and serialization.

#include "score/fact_io.h"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace cantus {

FactParseError::FactParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                  : "facts: " + message),
      line_(line) {}

namespace {

// ---------------------------------------------------------------------------
// Line-level tokenizer
// ---------------------------------------------------------------------------

/// @brief Character cursor over one comment-stripped line.
class LineCursor {
 public:
  LineCursor(const std::string& text, int line) : text_(text), line_(line) {}

  void skipSpaces() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool atEnd() {
    skipSpaces();
    return pos_ >= text_.size();
  }

  bool tryConsume(char c) {
    skipSpaces();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!tryConsume(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }

  std::string readIdent() {
    skipSpaces();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected identifier");
    return text_.substr(start, pos_ - start);
  }

  long readInt() {
    skipSpaces();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stol(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& message) {
    throw FactParseError(line_, message);
  }

  int line() const { return line_; }

 private:
  const std::string& text_;
  size_t pos_ = 0;
  int line_;
};

// ---------------------------------------------------------------------------
// Fact accumulation
// ---------------------------------------------------------------------------

/// Parsed facts plus the lines they came from, before semantic assembly.
struct FactSheet {
  std::optional<std::pair<Mode, int>> mode;
  std::optional<std::pair<StyleName, int>> style;
  std::optional<std::pair<long, int>> length;
  std::vector<std::pair<std::pair<int, int>, int>> part_decls;  // ((lo,hi), line)
  std::map<std::pair<int, int>, std::pair<long, int>> notes;    // (p,t)->(n, line)
  std::map<std::pair<int, int>, int> rests;                     // (p,t)->line
};

void parseConstLine(LineCursor& cur, FactSheet& sheet) {
  cur.expect('#');
  if (cur.readIdent() != "const") cur.fail("expected '#const'");
  std::string name = cur.readIdent();
  if (name != "t") cur.fail("unknown constant '" + name + "'");
  cur.expect('=');
  long value = cur.readInt();
  cur.expect('.');
  if (!cur.atEnd()) cur.fail("trailing characters after fact");
  if (sheet.length && sheet.length->first != value) {
    cur.fail("t=" + std::to_string(value) + " conflicts with t=" +
             std::to_string(sheet.length->first) + " on line " +
             std::to_string(sheet.length->second));
  }
  if (!sheet.length) sheet.length = {value, cur.line()};
}

void parseFactLine(LineCursor& cur, FactSheet& sheet) {
  cur.skipSpaces();
  std::string name = cur.readIdent();
  cur.expect('(');

  if (name == "chosenNote") {
    int part = static_cast<int>(cur.readInt());
    cur.expect(',');
    int time = static_cast<int>(cur.readInt());
    cur.expect(',');
    long note = cur.readInt();
    cur.expect(')');
    auto key = std::make_pair(part, time);
    if (sheet.rests.count(key)) {
      cur.fail("chosenNote conflicts with rest at (" + std::to_string(part) +
               "," + std::to_string(time) + ") on line " +
               std::to_string(sheet.rests[key]));
    }
    auto existing = sheet.notes.find(key);
    if (existing != sheet.notes.end() && existing->second.first != note) {
      cur.fail("chosenNote(" + std::to_string(part) + "," +
               std::to_string(time) + ",...) conflicts with line " +
               std::to_string(existing->second.second));
    }
    if (existing == sheet.notes.end()) sheet.notes[key] = {note, cur.line()};
  } else if (name == "rest") {
    int part = static_cast<int>(cur.readInt());
    cur.expect(',');
    int time = static_cast<int>(cur.readInt());
    cur.expect(')');
    auto key = std::make_pair(part, time);
    if (sheet.notes.count(key)) {
      cur.fail("rest conflicts with chosenNote at (" + std::to_string(part) +
               "," + std::to_string(time) + ") on line " +
               std::to_string(sheet.notes[key].second));
    }
    sheet.rests.emplace(key, cur.line());
  } else if (name == "keyMode" || name == "mode") {
    std::string mode_name = cur.readIdent();
    cur.expect(')');
    auto mode = modeFromName(mode_name);
    if (!mode) cur.fail("unknown mode '" + mode_name + "'");
    if (sheet.mode && sheet.mode->first != *mode) {
      cur.fail("mode '" + mode_name + "' conflicts with line " +
               std::to_string(sheet.mode->second));
    }
    if (!sheet.mode) sheet.mode = {*mode, cur.line()};
  } else if (name == "style") {
    std::string style_name = cur.readIdent();
    cur.expect(')');
    auto style = styleFromName(style_name);
    if (!style) cur.fail("unknown style '" + style_name + "'");
    if (sheet.style && sheet.style->first != *style) {
      cur.fail("style '" + style_name + "' conflicts with line " +
               std::to_string(sheet.style->second));
    }
    if (!sheet.style) sheet.style = {*style, cur.line()};
  } else if (name == "part") {
    int lo = static_cast<int>(cur.readInt());
    int hi = lo;
    if (cur.tryConsume('.')) {
      cur.expect('.');
      hi = static_cast<int>(cur.readInt());
    }
    cur.expect(')');
    if (lo < 1 || hi < lo) cur.fail("bad part declaration");
    sheet.part_decls.push_back({{lo, hi}, cur.line()});
  } else {
    cur.fail("unknown fact '" + name + "'");
  }

  cur.expect('.');
  if (!cur.atEnd()) cur.fail("trailing characters after fact");
}

}  // namespace

// ---------------------------------------------------------------------------
// parseFacts
// ---------------------------------------------------------------------------

PartialPiece parseFacts(const std::string& text) {
  FactSheet sheet;

  std::istringstream input(text);
  std::string raw_line;
  int line_number = 0;
  while (std::getline(input, raw_line)) {
    ++line_number;
    size_t comment = raw_line.find('%');
    if (comment != std::string::npos) raw_line.erase(comment);

    LineCursor cur(raw_line, line_number);
    if (cur.atEnd()) continue;
    if (cur.tryConsume('#')) {
      LineCursor fresh(raw_line, line_number);
      parseConstLine(fresh, sheet);
    } else {
      parseFactLine(cur, sheet);
    }
  }

  // --- Semantic assembly ---
  if (!sheet.style) throw FactParseError(0, "missing style(...) fact");
  if (!sheet.length) throw FactParseError(0, "missing #const t=... fact");

  long length = sheet.length->first;
  if (length < kLengthMin || length > kLengthMax) {
    throw FactParseError(sheet.length->second,
                         "t=" + std::to_string(length) + " outside " +
                             std::to_string(kLengthMin) + ".." +
                             std::to_string(kLengthMax));
  }

  StyleSpec style = styleSpec(sheet.style->first);
  Mode mode = sheet.mode ? sheet.mode->first : Mode::Major;

  if (!sheet.part_decls.empty()) {
    std::vector<bool> covered(static_cast<size_t>(style.part_count) + 1, false);
    for (const auto& [range, line] : sheet.part_decls) {
      auto [lo, hi] = range;
      if (hi > style.part_count) {
        throw FactParseError(line, "part " + std::to_string(hi) +
                                       " out of range for style '" +
                                       styleName(style.name) + "'");
      }
      for (int part = lo; part <= hi; ++part) covered[part] = true;
    }
    for (int part = 1; part <= style.part_count; ++part) {
      if (!covered[part]) {
        throw FactParseError(sheet.part_decls.front().second,
                             "part declaration does not cover part " +
                                 std::to_string(part));
      }
    }
  }

  PartialPiece partial = makePartialPiece(style, mode, static_cast<int>(length));

  auto checkCell = [&](int part, int time, int line) {
    if (part < 1 || part > style.part_count) {
      throw FactParseError(line, "part " + std::to_string(part) +
                                     " out of range for style '" +
                                     styleName(style.name) + "'");
    }
    if (time < 1 || time > length) {
      throw FactParseError(line, "time " + std::to_string(time) +
                                     " out of range 1.." +
                                     std::to_string(length));
    }
  };

  for (const auto& [key, value] : sheet.notes) {
    auto [part, time] = key;
    auto [note, line] = value;
    checkCell(part, time, line);
    if (note < kNoteMin || note > kNoteMax) {
      throw FactParseError(line, "note " + std::to_string(note) +
                                     " out of range 1..68");
    }
    partial.at(part, time) = Event::ofNote(static_cast<int>(note));
  }
  for (const auto& [key, line] : sheet.rests) {
    auto [part, time] = key;
    checkCell(part, time, line);
    partial.at(part, time) = Event::rest();
  }

  return partial;
}

// ---------------------------------------------------------------------------
// emitFacts
// ---------------------------------------------------------------------------

std::string emitFacts(const Piece& piece) {
  std::string out;
  out += "mode(" + modeName(piece.mode) + ").\n";
  out += "style(" + styleName(piece.style.name) + ").\n";
  out += "#const t=" + std::to_string(piece.length) + ".\n";
  if (piece.style.part_count == 1) {
    out += "part(1).\n";
  } else {
    out += "part(1.." + std::to_string(piece.style.part_count) + ").\n";
  }
  for (int part = 1; part <= piece.style.part_count; ++part) {
    for (int time = 1; time <= piece.length; ++time) {
      const Event& event = piece.at(part, time);
      if (event.isRest()) {
        out += "rest(" + std::to_string(part) + "," + std::to_string(time) +
               ").\n";
      } else {
        out += "chosenNote(" + std::to_string(part) + "," +
               std::to_string(time) + "," + std::to_string(event.note) +
               ").\n";
      }
    }
  }
  return out;
}

}  // namespace cantus
