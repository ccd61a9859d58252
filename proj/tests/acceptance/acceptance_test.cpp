/**
 * @file acceptance_test.cpp
 * @brief Release gate: one checked criterion per test, each printing a
 * [CRITERION PASS/FAIL] line with its label.
 *
 * Wall-clock budgets are asserted alongside the functional checks so a
 * regression in either correctness or speed fails the gate.
 */

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cli/app.h"
#include "render/render.h"
#include "rhythm/farey.h"
#include "rhythm/meter.h"
#include "rhythm/partition_tree.h"
#include "rhythm/timed_piece.h"
#include "rules/checker.h"
#include "score/fact_io.h"
#include "score/piece.h"
#include "score/style.h"
#include "solver/search.h"
#include "support/fixtures.h"

namespace cantus {
namespace {

using Clock = std::chrono::steady_clock;

class Criterion : public ::testing::Test {
 protected:
  void start(const std::string& label) {
    label_ = label;
    started_ = Clock::now();
  }

  double elapsedSeconds() const {
    return std::chrono::duration<double>(Clock::now() - started_).count();
  }

  void TearDown() override {
    std::cout << (HasFailure() ? "[CRITERION FAIL] " : "[CRITERION PASS] ")
              << label_ << std::endl;
  }

 private:
  std::string label_ = "unlabeled";
  Clock::time_point started_ = Clock::now();
};

/// Trees checked exhaustively in the tree-set criteria.
constexpr int kExhaustiveLeafCounts[] = {8, 12};
/// The 16-leaf shape space (163,457,954 trees) cannot be enumerated within
/// the gate budgets; its prefix is checked and its total is pinned exactly.
constexpr long long kSixteenLeafPrefix = 1'000'000;
constexpr TreeCount kSixteenLeafTotal = TreeCount{163457954};

std::vector<int> totientTable(int limit) {
  std::vector<int> phi(static_cast<std::size_t>(limit) + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (int p = 2; p <= limit; ++p) {
    if (phi[static_cast<std::size_t>(p)] != p) continue;  // not prime
    for (int k = p; k <= limit; k += p) {
      phi[static_cast<std::size_t>(k)] -=
          phi[static_cast<std::size_t>(k)] / p;
    }
  }
  return phi;
}

std::string tiledRow(const std::string& measure_marks, int hyper_meter) {
  std::string row;
  for (int i = 0; i <= hyper_meter; ++i) {
    if (i > 0) row += ' ';
    row += measure_marks[i % measure_marks.size()];
  }
  return row;
}

bool isThreeSmooth(std::int64_t value) {
  while (value % 2 == 0) value /= 2;
  while (value % 3 == 0) value /= 3;
  return value == 1;
}

std::vector<int> partNotes(const Piece& piece, int part) {
  std::vector<int> notes;
  for (int time = 1; time <= piece.length; ++time) {
    notes.push_back(piece.at(part, time).note);
  }
  return notes;
}

/// Leaves under ``node``, and how many of its leaves are Downbeats.
struct SubtreeTally {
  int leaves = 0;
  int downbeats = 0;
};

SubtreeTally tallySubtree(const TreeNode& node, int cursor,
                          const std::vector<BeatStrength>& strengths) {
  if (node.isLeaf()) {
    bool down = strengths[static_cast<std::size_t>(cursor)] ==
                BeatStrength::Downbeat;
    return {1, down ? 1 : 0};
  }
  SubtreeTally tally;
  for (const TreeNode& child : node.children) {
    SubtreeTally sub = tallySubtree(child, cursor + tally.leaves, strengths);
    tally.leaves += sub.leaves;
    tally.downbeats += sub.downbeats;
  }
  return tally;
}

/// True when every measure subtree holds exactly one Downbeat. A measure
/// subtree is a node at the depth where the measure layer ends that actually
/// subdivides; a leaf at or above that depth is a note held across its whole
/// span and articulates no downbeat of its own.
bool oneDownbeatPerMeasure(const TreeNode& node, int depth, int measure_levels,
                           int cursor,
                           const std::vector<BeatStrength>& strengths) {
  if (node.isLeaf()) return true;
  if (depth == measure_levels) {
    return tallySubtree(node, cursor, strengths).downbeats == 1;
  }
  for (const TreeNode& child : node.children) {
    if (!oneDownbeatPerMeasure(child, depth + 1, measure_levels, cursor,
                               strengths)) {
      return false;
    }
    cursor += tallySubtree(child, cursor, strengths).leaves;
  }
  return true;
}

/// Structural checks shared by the tree-set criteria. Returns a description
/// of the first violation, or the empty string.
std::string structuralFault(const PartitionTree& tree, int leaf_count) {
  if (leafCount(tree) != leaf_count) return "wrong leaf count";
  std::vector<Fraction> onsets = leafOnsets(tree);
  std::vector<Fraction> durations = leafDurations(tree);
  if (onsets.front() != Fraction(0, 1)) return "first onset not 0/1";
  Fraction cursor(0, 1);
  for (std::size_t i = 0; i < onsets.size(); ++i) {
    if (onsets[i] != cursor) return "onsets do not tile the span";
    if (i > 0 && !(onsets[i - 1] < onsets[i])) return "onsets not ascending";
    if (!isThreeSmooth(onsets[i].den)) return "onset denominator not 3-smooth";
    cursor = cursor + durations[i];
  }
  if (cursor != Fraction(1, 1)) return "durations do not sum to the span";
  std::vector<BeatStrength> strengths = beatInfo(tree).strengths;
  if (strengths.front() != BeatStrength::Downbeat) {
    return "the piece does not start on a downbeat";
  }
  if (!oneDownbeatPerMeasure(tree.root, 0, tree.layers.measure, 0,
                             strengths)) {
    return "a measure subtree lacks exactly one downbeat";
  }
  return "";
}

// --- 1 ---

TEST_F(Criterion, FareyEighthSequenceIsExact) {
  start("farey-exactness");
  const std::vector<Fraction> expected = {
      {0, 1}, {1, 8}, {1, 7}, {1, 6}, {1, 5}, {1, 4}, {2, 7}, {1, 3},
      {3, 8}, {2, 5}, {3, 7}, {1, 2}, {4, 7}, {3, 5}, {5, 8}, {2, 3},
      {5, 7}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {1, 1},
  };
  EXPECT_EQ(farey(8), expected);
  EXPECT_LT(elapsedSeconds(), 1.0);
}

// --- 2 ---

TEST_F(Criterion, FareySequencesSatisfyTheirLaws) {
  start("farey-properties");
  std::vector<int> phi = totientTable(64);
  long long phi_sum = 0;
  for (int n = 1; n <= 64; ++n) {
    phi_sum += phi[static_cast<std::size_t>(n)];
    std::vector<Fraction> terms = farey(n);
    EXPECT_EQ(terms.size(), static_cast<std::size_t>(1 + phi_sum))
        << "order " << n;
    for (std::size_t i = 1; i < terms.size(); ++i) {
      const Fraction& a = terms[i - 1];
      const Fraction& b = terms[i];
      EXPECT_LT(a, b) << "order " << n << " term " << i;
      EXPECT_EQ(a.den * b.num - a.num * b.den, 1)
          << "order " << n << ": " << a.toString() << " then " << b.toString();
    }
  }
  EXPECT_LT(elapsedSeconds(), 5.0);
}

// --- 3 ---

TEST_F(Criterion, MetricalHierarchyOfThreeByTwoIsExact) {
  start("metrical-hierarchy-table");
  MetricalHierarchy levels = metricalHierarchy(MeterSignature{3, 2, 6});
  const std::vector<Fraction> measure_level = {
      {0, 1}, {1, 6}, {1, 3}, {1, 2}, {2, 3}, {5, 6},
  };
  const std::vector<Fraction> beat_level = {
      {1, 18}, {1, 9},   {2, 9},   {5, 18}, {7, 18}, {4, 9},
      {5, 9},  {11, 18}, {13, 18}, {7, 9},  {8, 9},  {17, 18},
  };
  const std::vector<Fraction> duration_level = {
      {1, 36},  {1, 12},  {5, 36},  {7, 36},  {1, 4},   {11, 36},
      {13, 36}, {5, 12},  {17, 36}, {19, 36}, {7, 12},  {23, 36},
      {25, 36}, {3, 4},   {29, 36}, {31, 36}, {11, 12}, {35, 36},
  };
  EXPECT_EQ(levels.measure_level, measure_level);
  EXPECT_EQ(levels.beat_level, beat_level);
  EXPECT_EQ(levels.duration_level, duration_level);
  EXPECT_LT(elapsedSeconds(), 1.0);
}

// --- 4 ---

TEST_F(Criterion, PolyrhythmTableRealignsAtThirtySix) {
  start("polyrhythm-table");
  PolyrhythmTable table = polyrhythmTable({
      MeterSignature{3, 2},
      MeterSignature{2, 2},
      MeterSignature{3, 3},
      MeterSignature{2, 3},
  });
  EXPECT_EQ(table.hyper_meter, 36);
  EXPECT_EQ(table.periods, (std::vector<int>{6, 4, 9, 6}));
  ASSERT_EQ(table.rows.size(), 4u);
  EXPECT_EQ(table.rows[0], tiledRow("XoOoOo", 36));
  EXPECT_EQ(table.rows[1], tiledRow("XoOo", 36));
  EXPECT_EQ(table.rows[2], tiledRow("XooOooOoo", 36));
  EXPECT_EQ(table.rows[3], tiledRow("XooOoo", 36));
  EXPECT_LT(elapsedSeconds(), 1.0);
}

// --- 5 ---

TEST_F(Criterion, KnownBrokenPieceYieldsExactlyItsThreeErrors) {
  start("diagnosis-golden");
  EXPECT_EQ(diagnose(test::brokenSolo(), RuleConfig{}),
            test::brokenSoloErrors());
  EXPECT_LT(elapsedSeconds(), 1.0);
}

// --- 6 ---

TEST_F(Criterion, KnownGoodPiecesValidateCleanly) {
  start("known-pieces-validate");
  EXPECT_EQ(diagnose(test::goldenSolo(), RuleConfig{}),
            std::vector<ErrorRecord>{});
  EXPECT_EQ(diagnose(test::goldenDuet(), RuleConfig{}),
            std::vector<ErrorRecord>{});
  AttachResult attached = attachRhythm(
      test::goldenDuet(), treeFromSexpr(test::kDuetTreeSexpr));
  EXPECT_TRUE(attached.accepted());
  EXPECT_EQ(attached.errors, std::vector<ErrorRecord>{});
  EXPECT_LT(elapsedSeconds(), 1.0);
}

// --- 7 ---

TEST_F(Criterion, ComposerIsSoundAcrossSeedsAndStyles) {
  start("soundness-loop");
  const std::vector<std::pair<StyleName, double>> budgets = {
      {StyleName::Solo, 60.0},
      {StyleName::Duet, 60.0},
      {StyleName::Trio, 300.0},
      {StyleName::Quartet, 300.0},
  };
  for (const auto& [name, seconds_per_compose] : budgets) {
    StyleSpec style = styleSpec(name);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      SolverOptions options;
      options.seed = seed;
      Clock::time_point before = Clock::now();
      SolveResult result = compose(style, Mode::Major, 16, options);
      double took = std::chrono::duration<double>(Clock::now() - before)
                        .count();
      ASSERT_EQ(result.status, SolveStatus::Solved)
          << styleName(name) << " seed " << seed;
      ASSERT_TRUE(result.piece.has_value());
      EXPECT_EQ(diagnose(*result.piece, RuleConfig{}),
                std::vector<ErrorRecord>{})
          << styleName(name) << " seed " << seed;
      EXPECT_LT(took, seconds_per_compose)
          << styleName(name) << " seed " << seed;
    }
  }
}

// --- 8 ---

TEST_F(Criterion, EnumerationMatchesTheBruteForceOracle) {
  start("oracle-equivalence");
  StyleSpec style = styleSpec(StyleName::Solo);
  style.fixed_ranges[1] = NoteRange{13, 37};

  std::set<std::array<int, 4>> oracle;
  for (int a = 13; a <= 37; ++a) {
    for (int b = 13; b <= 37; ++b) {
      for (int c = 13; c <= 37; ++c) {
        for (int d = 13; d <= 37; ++d) {
          Piece piece = makePiece(style, Mode::Major, {{a, b, c, d}});
          if (diagnose(piece, RuleConfig{}).empty()) {
            oracle.insert({a, b, c, d});
          }
        }
      }
    }
  }

  EnumerateResult all = enumeratePieces(style, Mode::Major, 4, 0);
  EXPECT_EQ(all.status, SolveStatus::Solved);
  std::set<std::array<int, 4>> enumerated;
  for (const Piece& piece : all.pieces) {
    std::vector<int> notes = partNotes(piece, 1);
    enumerated.insert({notes[0], notes[1], notes[2], notes[3]});
  }
  EXPECT_EQ(enumerated.size(), all.pieces.size()) << "duplicate solutions";
  EXPECT_EQ(enumerated, oracle);
  EXPECT_FALSE(oracle.empty());

  // The two-completion case: first note pinned to 25 in a 2-step piece.
  PartialPiece pinned = makePartialPiece(style, Mode::Major, 2);
  pinned.at(1, 1) = Event::ofNote(25);
  EnumerateResult completions = enumerateCompletions(pinned, 0);
  std::set<std::vector<int>> pairs;
  for (const Piece& piece : completions.pieces) {
    pairs.insert(partNotes(piece, 1));
  }
  EXPECT_EQ(pairs, (std::set<std::vector<int>>{{25, 13}, {25, 37}}));
  EXPECT_LT(elapsedSeconds(), 60.0);
}

// --- 9 ---

TEST_F(Criterion, SerializationRoundTripsExactly) {
  start("round-trips");
  int pieces_checked = 0;
  for (StyleName name : {StyleName::Solo, StyleName::Duet}) {
    for (int length : {16, 8}) {
      for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        SolverOptions options;
        options.seed = seed;
        SolveResult result = compose(styleSpec(name), Mode::Major, length,
                                     options);
        ASSERT_EQ(result.status, SolveStatus::Solved)
            << styleName(name) << " length " << length << " seed " << seed;
        PartialPiece reparsed = parseFacts(emitFacts(*result.piece));
        ASSERT_TRUE(reparsed.isComplete());
        EXPECT_EQ(reparsed.toPiece(), *result.piece);
        ++pieces_checked;
      }
    }
  }
  EXPECT_EQ(pieces_checked, 100);

  for (int leaf_count : kExhaustiveLeafCounts) {
    TreeCount visited = 0;
    bool codec_ok = true;
    forEachTree(leaf_count, LayerCaps{}, [&](const PartitionTree& tree) {
      codec_ok = treeFromSexpr(treeToSexpr(tree)) == tree;
      ++visited;
      return codec_ok;
    });
    EXPECT_TRUE(codec_ok) << leaf_count << " leaves, tree "
                          << static_cast<long long>(visited - 1);
    EXPECT_EQ(visited, countTrees(leaf_count));
  }
  long long sixteen_visited = 0;
  bool sixteen_ok = true;
  forEachTree(16, LayerCaps{}, [&](const PartitionTree& tree) {
    sixteen_ok = treeFromSexpr(treeToSexpr(tree)) == tree;
    ++sixteen_visited;
    return sixteen_ok && sixteen_visited < kSixteenLeafPrefix;
  });
  EXPECT_TRUE(sixteen_ok);
  EXPECT_EQ(sixteen_visited, kSixteenLeafPrefix);
  EXPECT_EQ(countTrees(16), kSixteenLeafTotal);

  EXPECT_EQ(treeToSexpr(treeFromSexpr(test::kDuetTreeSexpr)),
            test::kDuetTreeSexpr);
  EXPECT_LT(elapsedSeconds(), 10.0);
}

// --- 10 ---

TEST_F(Criterion, IdenticalInvocationsProduceIdenticalOutput) {
  start("cli-determinism");
  const std::vector<std::vector<std::string>> invocations = {
      {"--task", "compose", "--seed", "7"},
      {"--task", "compose", "--style", "duet", "--rhythm", "--output",
       "events", "--seed", "7"},
  };
  for (const std::vector<std::string>& args : invocations) {
    std::ostringstream out1, err1, out2, err2;
    int code1 = runCli(args, out1, err1);
    int code2 = runCli(args, out2, err2);
    EXPECT_EQ(code1, kExitOk);
    EXPECT_EQ(code1, code2);
    EXPECT_EQ(out1.str(), out2.str());
    EXPECT_FALSE(out1.str().empty());
    EXPECT_EQ(err1.str(), err2.str());
  }
  EXPECT_LT(elapsedSeconds(), 5.0);
}

// --- 11 ---

TEST_F(Criterion, EveryTreeHasSoundMetricalStructure) {
  start("rhythm-structure");
  for (int leaf_count : kExhaustiveLeafCounts) {
    TreeCount visited = 0;
    std::string fault;
    forEachTree(leaf_count, LayerCaps{}, [&](const PartitionTree& tree) {
      fault = structuralFault(tree, leaf_count);
      ++visited;
      return fault.empty();
    });
    EXPECT_EQ(fault, "") << leaf_count << " leaves, tree "
                         << static_cast<long long>(visited - 1);
    EXPECT_EQ(visited, countTrees(leaf_count));
  }

  long long sixteen_visited = 0;
  std::string fault;
  forEachTree(16, LayerCaps{}, [&](const PartitionTree& tree) {
    fault = structuralFault(tree, 16);
    ++sixteen_visited;
    return fault.empty() && sixteen_visited < kSixteenLeafPrefix;
  });
  EXPECT_EQ(fault, "") << "16 leaves, tree " << sixteen_visited - 1;
  EXPECT_EQ(sixteen_visited, kSixteenLeafPrefix);
  EXPECT_LT(elapsedSeconds(), 30.0);
}

}  // namespace
}  // namespace cantus
