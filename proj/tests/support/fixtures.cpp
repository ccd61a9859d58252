/**
 * @file fixtures.cpp
 * @brief Shared reference pieces, fact text and render blocks for tests.
 */

#include "support/fixtures.h"

#include "rules/reasons.h"
#include "score/style.h"

namespace cantus {
namespace test {

Piece goldenSolo() {
  return makePiece(
      styleSpec(StyleName::Solo), Mode::Major,
      {{32, 37, 25, 27, 25, 37, 36, 39, 32, 34, 30, 32, 25, 29, 24, 25}});
}

std::string goldenSoloHuman() {
  return
      "| 55 60 48 50 48 60 59 62 55 57 53 55 48 52 47 48\n"
      "|  G  C' C  D  C  C' B  D' G  A  F  G  C  E  B  C\n"
      "|   +5 -12 +2 -2 +12 -1 +3 -7 +2 -4 +2 -7 +4 -5 +1\n";
}

Piece goldenDuet() {
  return makePiece(
      styleSpec(StyleName::Duet), Mode::Lydian,
      {{37, 39, 37, 49, 48, 41, 43, 48, 44, 46, 48, 49},
       {37, 32, 34, 34, 32, 37, 39, 39, 41, 39, 39, 37}});
}

std::string goldenDuetHuman() {
  return
      "| 65 67 65 77 76 69 71 76 72 74 76 77\n"
      "|  F  G  F  F' E' A  B  E' C' D' E' F'\n"
      "|   +2 -2 +12 -1 -7 +2 +5 -4 +2 +2 +1\n"
      "| (((X X) (X X)) ((X (X X X)) ((X X) (X X))))\n"
      "\n"
      "| 65 60 62 62 60 65 67 67 69 67 67 65\n"
      "|  F  C  D  D  C  F  G  G  A  G  G  F\n"
      "|   -5 +2 \"\" -2 +5 +2 \"\" +2 -2 \"\" -2\n"
      "| (((X X) (X X)) ((X (X X X)) ((X X) (X X))))\n";
}

Piece brokenSolo() {
  return makePiece(
      styleSpec(StyleName::Solo), Mode::Major,
      {{25, 24, 29, 27, 32, 30, 34, 32, 34, 39, 37, 34, 36, 37}});
}

std::vector<ErrorRecord> brokenSoloErrors() {
  return {
      {1, 2, reasons::kRepeatedPattern},
      {1, 2, reasons::kSplitMelody},
      {1, 4, reasons::kRepeatedPattern},
  };
}

std::string partialSoloFacts() {
  return
      "keyMode(lydian).\n"
      "chosenNote(1,1,25).\n"
      "chosenNote(1,2,24).\n"
      "chosenNote(1,8,19).\n"
      "chosenNote(1,9,20).\n"
      "chosenNote(1,10,24).\n"
      "chosenNote(1,14,29).\n"
      "chosenNote(1,15,27).\n"
      "chosenNote(1,16,25).\n"
      "#const t=16.\n"
      "style(solo).\n"
      "part(1..1).\n";
}

Piece soloPiece(Mode mode, const std::vector<int>& notes) {
  return makePiece(styleSpec(StyleName::Solo), mode, {notes});
}

Piece duetPiece(Mode mode, const std::vector<int>& upper,
                const std::vector<int>& lower) {
  return makePiece(styleSpec(StyleName::Duet), mode, {upper, lower});
}

}  // namespace test
}  // namespace cantus
