/**
 * @file meter_test.cpp
 * @brief Tests for meter trees, the metrical hierarchy and polyrhythm tables.
 */

#include "rhythm/meter.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cantus {
namespace {

/// One-measure marks tiled across a hyper-meter, space-joined, inclusive of
/// the realigning downbeat at the end.
std::string tiledRow(const std::string& measure_marks, int hyper_meter) {
  std::string row;
  for (int i = 0; i <= hyper_meter; ++i) {
    if (i > 0) row += ' ';
    row += measure_marks[i % measure_marks.size()];
  }
  return row;
}

std::string strengthRow(const PartitionTree& tree) {
  std::string row;
  for (BeatStrength strength : beatInfo(tree).strengths) {
    row += strengthMark(strength);
  }
  return row;
}

// --- Meter trees ---

TEST(MeterTest, SimpleDupleMeasure) {
  PartitionTree tree = meterTree(MeterSignature{2, 2, 1});
  EXPECT_EQ(treeToSexpr(tree), "((X X) (X X))");
  EXPECT_EQ(tree.layers, (LayerSplit{0, 1, 1}));
  EXPECT_EQ(strengthRow(tree), "XoOo");
}

TEST(MeterTest, SimpleTripleMeasure) {
  PartitionTree tree = meterTree(MeterSignature{3, 2, 1});
  EXPECT_EQ(treeToSexpr(tree), "((X X) (X X) (X X))");
  EXPECT_EQ(tree.layers, (LayerSplit{0, 1, 1}));
  EXPECT_EQ(strengthRow(tree), "XoOoOo");
}

TEST(MeterTest, MeasureCountFactorsIntoMeasureLevels) {
  PartitionTree tree = meterTree(MeterSignature{2, 2, 6});
  EXPECT_EQ(leafCount(tree), 24);
  EXPECT_EQ(treeDepth(tree.root), 4);
  EXPECT_EQ(tree.layers, (LayerSplit{2, 1, 1}));
  // Factors ascend: the 2-way split sits above the 3-way split.
  EXPECT_EQ(tree.root.children.size(), 2u);
  EXPECT_EQ(tree.root.children[0].children.size(), 3u);
}

TEST(MeterTest, MeterTreeRejectsBadSignatures) {
  EXPECT_THROW(meterTree(MeterSignature{2, 2, 5}), std::invalid_argument);
  EXPECT_THROW(meterTree(MeterSignature{4, 2, 1}), std::invalid_argument);
  EXPECT_THROW(meterTree(MeterSignature{2, 1, 1}), std::invalid_argument);
}

// --- Metrical hierarchy ---

TEST(MeterTest, HierarchySplitsTheGridIntoThreeLevels) {
  MetricalHierarchy levels = metricalHierarchy(MeterSignature{3, 2, 6});

  const std::vector<Fraction> measure_level = {
      {0, 1}, {1, 6}, {1, 3}, {1, 2}, {2, 3}, {5, 6},
  };
  EXPECT_EQ(levels.measure_level, measure_level);

  const std::vector<Fraction> beat_level = {
      {1, 18}, {1, 9},   {2, 9},   {5, 18}, {7, 18}, {4, 9},
      {5, 9},  {11, 18}, {13, 18}, {7, 9},  {8, 9},  {17, 18},
  };
  EXPECT_EQ(levels.beat_level, beat_level);

  const std::vector<Fraction> duration_level = {
      {1, 36},  {1, 12},  {5, 36},  {7, 36},  {1, 4},   {11, 36},
      {13, 36}, {5, 12},  {17, 36}, {19, 36}, {7, 12},  {23, 36},
      {25, 36}, {3, 4},   {29, 36}, {31, 36}, {11, 12}, {35, 36},
  };
  EXPECT_EQ(levels.duration_level, duration_level);
}

TEST(MeterTest, HierarchyLevelsPartitionTheGrid) {
  MetricalHierarchy levels = metricalHierarchy(MeterSignature{2, 3, 4});
  std::vector<Fraction> all = levels.measure_level;
  all.insert(all.end(), levels.beat_level.begin(), levels.beat_level.end());
  all.insert(all.end(), levels.duration_level.begin(),
             levels.duration_level.end());
  std::sort(all.begin(), all.end());
  ASSERT_EQ(all.size(), 24u) << "4 measures of 2x3 onsets";
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(all[i], Fraction(static_cast<std::int64_t>(i), 24))
        << "slot " << i;
  }
}

// --- Polyrhythm tables ---

TEST(MeterTest, FourVoiceTableAlignsOnTheHyperMeter) {
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
}

TEST(MeterTest, SingleVoiceTableClosesWithItsDownbeat) {
  PolyrhythmTable table = polyrhythmTable({MeterSignature{2, 2}});
  EXPECT_EQ(table.hyper_meter, 4);
  EXPECT_EQ(table.periods, (std::vector<int>{4}));
  ASSERT_EQ(table.rows.size(), 1u);
  EXPECT_EQ(table.rows[0], "X o O o X");
}

TEST(MeterTest, EmptyTableRequestIsRejected) {
  EXPECT_THROW(polyrhythmTable({}), std::invalid_argument);
}

}  // namespace
}  // namespace cantus
