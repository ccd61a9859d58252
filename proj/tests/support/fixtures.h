/**
 * @file fixtures.h
 * @brief Shared reference pieces, fact text and render blocks for tests.
 */

#pragma once

#include <string>
#include <vector>

#include "score/piece.h"

namespace cantus {
namespace test {

// --- Clean reference pieces ---

/// Sixteen-step solo line in major; diagnoses clean.
Piece goldenSolo();

/// goldenSolo()'s human-readable block under fundamental c.
std::string goldenSoloHuman();

/// Twelve-step duet in lydian; diagnoses clean and accepts kDuetTreeSexpr.
Piece goldenDuet();

/// The 12-leaf partition tree rendered with the duet.
inline constexpr const char* kDuetTreeSexpr =
    "(((X X) (X X)) ((X (X X X)) ((X X) (X X))))";

/// goldenDuet()'s human block under fundamental f with the tree attached.
std::string goldenDuetHuman();

// --- Faulty reference piece ---

/// Fourteen-step solo line with exactly three melodic violations.
Piece brokenSolo();

/// brokenSolo()'s expected diagnostics, already in diagnostics order.
std::vector<ErrorRecord> brokenSoloErrors();

// --- Fact text ---

/// Fact text pinning eight cells of a sixteen-step lydian solo.
std::string partialSoloFacts();

// --- Builders ---

/// One-row solo piece, the common shape in rule tests.
Piece soloPiece(Mode mode, const std::vector<int>& notes);

/// Two-row duet piece.
Piece duetPiece(Mode mode, const std::vector<int>& upper,
                const std::vector<int>& lower);

}  // namespace test
}  // namespace cantus
