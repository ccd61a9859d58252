/// @file
/// @brief Partition trees: 2/3-way subdivision of a time span into measure,
/// beat and duration layers, with deterministic enumeration, ranking and an
/// s-expression codec.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rhythm/fraction.h"

namespace cantus {

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

/// One node of a partition tree. A node subdivides its span uniformly among
/// its children; a node with no children is a leaf (one note onset).
struct TreeNode {
  std::vector<TreeNode> children;  ///< empty = leaf, otherwise size 2 or 3

  bool isLeaf() const { return children.empty(); }
  bool operator==(const TreeNode&) const = default;
};

/// How many tree levels belong to each layer, top to bottom: measure levels
/// first, then beat levels, then duration levels.
struct LayerSplit {
  int measure = 0;
  int beat = 0;
  int duration = 0;

  int depth() const { return measure + beat + duration; }
  bool operator==(const LayerSplit&) const = default;
};

struct PartitionTree {
  TreeNode root;
  LayerSplit layers;

  bool operator==(const PartitionTree&) const = default;
};

/// Per-layer depth caps used when enumerating trees. The measure cap must be
/// at least 1; together the caps bound the total tree depth.
struct LayerCaps {
  int measure = 2;
  int beat = 2;
  int duration = 2;

  int depthBudget() const { return measure + beat + duration; }
  bool operator==(const LayerCaps&) const = default;
};

/// Metrical weight of a leaf onset.
enum class BeatStrength { Downbeat, Beat, Offbeat };

/// Table mark for a strength: X (downbeat), O (beat), o (offbeat).
char strengthMark(BeatStrength strength);

/// Strengths and duration classes per leaf, in onset order. Duration class
/// DS = 1 is the slowest class; larger DS means shorter subdivisions.
struct BeatInfo {
  std::vector<BeatStrength> strengths;
  std::vector<int> duration_classes;
};

// ---------------------------------------------------------------------------
// Shape queries
// ---------------------------------------------------------------------------

int leafCount(const TreeNode& node);
int leafCount(const PartitionTree& tree);

/// Maximum root-to-leaf edge count.
int treeDepth(const TreeNode& node);

/// @brief Layer assignment for a tree of the given depth under caps.
///
/// Any tree with at least one split gets at least one measure level; the
/// beat layer takes as many of the remaining levels as its cap allows and
/// the duration layer takes the rest. Depth 0 (a single leaf) has no layers.
LayerSplit canonicalLayers(int depth, const LayerCaps& caps = {});

// ---------------------------------------------------------------------------
// Enumeration and ranking
// ---------------------------------------------------------------------------

/// Wide integer for tree counts; deep caps overflow even this, in which case
/// counting throws std::overflow_error.
using TreeCount = unsigned __int128;

/// @brief Number of distinct trees with the given leaf count under caps.
TreeCount countTrees(int leaf_count, const LayerCaps& caps = {});

/// @brief Visit every tree with the given leaf count under caps, in the
/// canonical order: branching 2 before 3, child leaf allocations ascending
/// left to right, and for a fixed allocation the rightmost child's shape
/// varies fastest.
///
/// The visited tree is reused storage; copy it to keep it. Return false from
/// ``visit`` to stop early; the function then returns false.
bool forEachTree(int leaf_count, const LayerCaps& caps,
                 const std::function<bool(const PartitionTree&)>& visit);

/// @brief The tree at 0-based ``index`` in the canonical enumeration order.
///
/// Throws std::out_of_range if ``index`` is not below countTrees().
PartitionTree treeAtIndex(int leaf_count, TreeCount index,
                          const LayerCaps& caps = {});

// ---------------------------------------------------------------------------
// S-expression codec
// ---------------------------------------------------------------------------

/// Serialize: leaves are "X", internal nodes wrap their children in
/// parentheses with single spaces, e.g. "((X X) (X X X))".
std::string treeToSexpr(const PartitionTree& tree);

/// Parse an s-expression produced by treeToSexpr. Layers are assigned
/// canonically for the parsed depth. Throws std::invalid_argument with the
/// offending position on malformed input (including branching outside 2..3).
PartitionTree treeFromSexpr(const std::string& text,
                            const LayerCaps& caps = {});

// ---------------------------------------------------------------------------
// Metrical queries
// ---------------------------------------------------------------------------

/// @brief Leaf onsets under uniform subdivision of [0, 1), ascending from 0/1.
std::vector<Fraction> leafOnsets(const PartitionTree& tree);

/// @brief Leaf span widths, aligned with leafOnsets (they tile [0, 1]).
std::vector<Fraction> leafDurations(const PartitionTree& tree);

/// @brief Beat strength and duration class per leaf, in onset order.
///
/// A leaf reached from a level-L ancestor by first-child edges only carries
/// that ancestor's weight: Downbeat if L is within the measure layer, Beat if
/// within the beat layer, Offbeat otherwise. A leaf that is not its parent's
/// first child is always Offbeat. The single-leaf tree is one Downbeat.
BeatInfo beatInfo(const PartitionTree& tree);

}  // namespace cantus
