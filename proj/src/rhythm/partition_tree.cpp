/// @file
/// @brief Partition tree enumeration, ranking, codec and metrical queries.

#include "rhythm/partition_tree.h"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace cantus {

namespace {

// --- Validation -------------------------------------------------------------

void checkLeafCount(int leaf_count) {
  if (leaf_count < 1) {
    throw std::invalid_argument("leaf count must be at least 1, got " +
                                std::to_string(leaf_count));
  }
}

void checkCaps(const LayerCaps& caps) {
  if (caps.measure < 1) {
    throw std::invalid_argument("layer caps need at least one measure level");
  }
  if (caps.beat < 0 || caps.duration < 0) {
    throw std::invalid_argument("layer caps must be non-negative");
  }
}

// --- Overflow-checked counting ----------------------------------------------

constexpr TreeCount kMaxCount = ~TreeCount{0};

TreeCount checkedAdd(TreeCount a, TreeCount b) {
  if (b > kMaxCount - a) {
    throw std::overflow_error("partition tree count overflow");
  }
  return a + b;
}

TreeCount checkedMul(TreeCount a, TreeCount b) {
  if (a != 0 && b > kMaxCount / a) {
    throw std::overflow_error("partition tree count overflow");
  }
  return a * b;
}

/// Memoized tree counting over (leaves, remaining depth). A chain of binary
/// splits is the deepest useful shape, so depth beyond leaves - 1 is clamped.
class TreeCounter {
 public:
  TreeCounter(int max_leaves, int budget)
      : budget_(std::min(budget, std::max(0, max_leaves - 1))),
        memo_(static_cast<std::size_t>(max_leaves + 1) *
                  static_cast<std::size_t>(budget_ + 1),
              kUnset) {}

  int budget() const { return budget_; }

  /// Trees with ``leaves`` leaves and depth at most ``budget``.
  TreeCount count(int leaves, int budget) {
    budget = std::min(budget, leaves - 1);
    if (leaves == 1) return 1;
    if (budget < 1) return 0;
    TreeCount& slot = memoSlot(leaves, budget);
    if (slot != kUnset) return slot;
    TreeCount total = 0;
    for (int b = 2; b <= 3 && b <= leaves; ++b) {
      total = checkedAdd(total, slots(b, leaves, budget - 1));
    }
    slot = total;
    return total;
  }

  /// Ways to fill ``k`` child slots with ``leaves`` leaves total, one subtree
  /// of depth at most ``budget`` per slot, each taking at least one leaf.
  TreeCount slots(int k, int leaves, int budget) {
    if (k == 1) return count(leaves, budget);
    TreeCount total = 0;
    for (int take = 1; take <= leaves - (k - 1); ++take) {
      total = checkedAdd(
          total, checkedMul(count(take, budget), slots(k - 1, leaves - take, budget)));
    }
    return total;
  }

 private:
  static constexpr TreeCount kUnset = kMaxCount;

  TreeCount& memoSlot(int leaves, int budget) {
    return memo_[static_cast<std::size_t>(leaves) *
                     static_cast<std::size_t>(budget_ + 1) +
                 static_cast<std::size_t>(budget)];
  }

  int budget_;
  std::vector<TreeCount> memo_;
};

// --- Enumeration ------------------------------------------------------------

using Continuation = std::function<bool()>;

bool expandNode(TreeNode& node, int leaves, int budget,
                const Continuation& next);

/// Fill children of ``node`` from ``slot`` on with ``remaining`` leaves, then
/// run ``next``. Allocations ascend; the rightmost slot varies fastest.
bool fillChildren(TreeNode& node, int slot, int remaining, int budget,
                  const Continuation& next) {
  const int b = static_cast<int>(node.children.size());
  if (slot == b) return next();
  const int slots_after = b - slot - 1;
  // The last slot must absorb every remaining leaf.
  const int first_take = slots_after == 0 ? remaining : 1;
  for (int take = first_take; take <= remaining - slots_after; ++take) {
    bool keep_going = expandNode(node.children[slot], take, budget, [&]() {
      return fillChildren(node, slot + 1, remaining - take, budget, next);
    });
    if (!keep_going) return false;
  }
  return true;
}

/// Enumerate every shape of ``node`` with the given leaves within ``budget``
/// levels, running ``next`` for each completed shape.
bool expandNode(TreeNode& node, int leaves, int budget,
                const Continuation& next) {
  if (leaves == 1) {
    node.children.clear();
    return next();
  }
  if (budget < 1) return true;
  for (int b = 2; b <= 3 && b <= leaves; ++b) {
    node.children.assign(static_cast<std::size_t>(b), TreeNode{});
    if (!fillChildren(node, 0, leaves, budget - 1, next)) return false;
  }
  node.children.clear();
  return true;
}

// --- Ranking ----------------------------------------------------------------

void buildIndexed(TreeNode& node, int leaves, int budget, TreeCount index,
                  TreeCounter& counter) {
  if (leaves == 1) {
    node.children.clear();
    return;
  }
  for (int b = 2; b <= 3 && b <= leaves; ++b) {
    if (budget < 1) break;
    TreeCount block = counter.slots(b, leaves, budget - 1);
    if (index >= block) {
      index -= block;
      continue;
    }
    node.children.assign(static_cast<std::size_t>(b), TreeNode{});
    int remaining = leaves;
    const int child_budget = budget - 1;
    for (int slot = 0; slot < b; ++slot) {
      const int slots_after = b - slot - 1;
      const int first_take = slots_after == 0 ? remaining : 1;
      bool placed = false;
      for (int take = first_take; !placed && take <= remaining - slots_after;
           ++take) {
        TreeCount rest = slots_after == 0
                             ? TreeCount{1}
                             : counter.slots(slots_after, remaining - take,
                                             child_budget);
        TreeCount span = checkedMul(counter.count(take, child_budget), rest);
        if (index >= span) {
          index -= span;
          continue;
        }
        buildIndexed(node.children[slot], take, child_budget, index / rest,
                     counter);
        index %= rest;
        remaining -= take;
        placed = true;
      }
      if (!placed) throw std::logic_error("tree rank inconsistency");
    }
    return;
  }
  throw std::logic_error("tree rank inconsistency");
}

// --- S-expression parsing ---------------------------------------------------

struct SexprCursor {
  const std::string& text;
  std::size_t pos = 0;

  void skipSpaces() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw std::invalid_argument("tree s-expression: " + message +
                                " at position " + std::to_string(pos));
  }

  TreeNode parseNode() {
    skipSpaces();
    if (pos >= text.size()) fail("unexpected end of input");
    if (text[pos] == 'X') {
      ++pos;
      return TreeNode{};
    }
    if (text[pos] != '(') fail("expected 'X' or '('");
    ++pos;
    TreeNode node;
    while (true) {
      skipSpaces();
      if (pos >= text.size()) fail("missing ')'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      node.children.push_back(parseNode());
    }
    if (node.children.size() < 2 || node.children.size() > 3) {
      fail("branching must be 2 or 3, got " +
           std::to_string(node.children.size()));
    }
    return node;
  }
};

// --- Metrical walks ----------------------------------------------------------

void collectSpans(const TreeNode& node, const Fraction& start,
                  const Fraction& width, std::vector<Fraction>& onsets,
                  std::vector<Fraction>& widths) {
  if (node.isLeaf()) {
    onsets.push_back(start);
    widths.push_back(width);
    return;
  }
  const auto b = static_cast<long long>(node.children.size());
  Fraction child_width = width / Fraction(b, 1);
  for (long long i = 0; i < b; ++i) {
    collectSpans(node.children[static_cast<std::size_t>(i)],
                 start + Fraction(i, 1) * child_width, child_width, onsets,
                 widths);
  }
}

void collectBeatInfo(const TreeNode& node, int level, int chain_top,
                     const LayerSplit& layers, BeatInfo& info) {
  if (node.isLeaf()) {
    BeatStrength strength = BeatStrength::Offbeat;
    if (level == 0) {
      strength = BeatStrength::Downbeat;  // single-leaf tree
    } else if (chain_top == level) {
      strength = BeatStrength::Offbeat;  // not a first child
    } else if (chain_top <= layers.measure) {
      strength = BeatStrength::Downbeat;
    } else if (chain_top <= layers.measure + layers.beat) {
      strength = BeatStrength::Beat;
    }
    info.strengths.push_back(strength);
    info.duration_classes.push_back(
        std::max(1, level - layers.measure - layers.beat));
    return;
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    int child_top = i == 0 ? chain_top : level + 1;
    collectBeatInfo(node.children[i], level + 1, child_top, layers, info);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Shape queries
// ---------------------------------------------------------------------------

char strengthMark(BeatStrength strength) {
  switch (strength) {
    case BeatStrength::Downbeat:
      return 'X';
    case BeatStrength::Beat:
      return 'O';
    case BeatStrength::Offbeat:
      return 'o';
  }
  return '?';
}

int leafCount(const TreeNode& node) {
  if (node.isLeaf()) return 1;
  int total = 0;
  for (const TreeNode& child : node.children) total += leafCount(child);
  return total;
}

int leafCount(const PartitionTree& tree) { return leafCount(tree.root); }

int treeDepth(const TreeNode& node) {
  int deepest = 0;
  for (const TreeNode& child : node.children) {
    deepest = std::max(deepest, 1 + treeDepth(child));
  }
  return deepest;
}

LayerSplit canonicalLayers(int depth, const LayerCaps& caps) {
  if (depth <= 0) return {0, 0, 0};
  LayerSplit split;
  split.measure = std::max(1, depth - caps.beat - caps.duration);
  split.beat = std::min(caps.beat, depth - split.measure);
  split.duration = depth - split.measure - split.beat;
  return split;
}

// ---------------------------------------------------------------------------
// Enumeration and ranking
// ---------------------------------------------------------------------------

TreeCount countTrees(int leaf_count, const LayerCaps& caps) {
  checkLeafCount(leaf_count);
  checkCaps(caps);
  TreeCounter counter(leaf_count, caps.depthBudget());
  return counter.count(leaf_count, counter.budget());
}

bool forEachTree(int leaf_count, const LayerCaps& caps,
                 const std::function<bool(const PartitionTree&)>& visit) {
  checkLeafCount(leaf_count);
  checkCaps(caps);
  PartitionTree tree;
  return expandNode(tree.root, leaf_count, caps.depthBudget(), [&]() {
    tree.layers = canonicalLayers(treeDepth(tree.root), caps);
    return visit(tree);
  });
}

PartitionTree treeAtIndex(int leaf_count, TreeCount index,
                          const LayerCaps& caps) {
  checkLeafCount(leaf_count);
  checkCaps(caps);
  TreeCounter counter(leaf_count, caps.depthBudget());
  if (index >= counter.count(leaf_count, counter.budget())) {
    throw std::out_of_range("tree index out of range");
  }
  PartitionTree tree;
  buildIndexed(tree.root, leaf_count, counter.budget(), index, counter);
  tree.layers = canonicalLayers(treeDepth(tree.root), caps);
  return tree;
}

// ---------------------------------------------------------------------------
// S-expression codec
// ---------------------------------------------------------------------------

namespace {

void writeSexpr(const TreeNode& node, std::string& out) {
  if (node.isLeaf()) {
    out += 'X';
    return;
  }
  out += '(';
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i > 0) out += ' ';
    writeSexpr(node.children[i], out);
  }
  out += ')';
}

}  // namespace

std::string treeToSexpr(const PartitionTree& tree) {
  std::string out;
  writeSexpr(tree.root, out);
  return out;
}

PartitionTree treeFromSexpr(const std::string& text, const LayerCaps& caps) {
  SexprCursor cursor{text};
  PartitionTree tree;
  tree.root = cursor.parseNode();
  cursor.skipSpaces();
  if (cursor.pos != text.size()) cursor.fail("trailing characters");
  tree.layers = canonicalLayers(treeDepth(tree.root), caps);
  return tree;
}

// ---------------------------------------------------------------------------
// Metrical queries
// ---------------------------------------------------------------------------

std::vector<Fraction> leafOnsets(const PartitionTree& tree) {
  std::vector<Fraction> onsets;
  std::vector<Fraction> widths;
  collectSpans(tree.root, Fraction(0, 1), Fraction(1, 1), onsets, widths);
  return onsets;
}

std::vector<Fraction> leafDurations(const PartitionTree& tree) {
  std::vector<Fraction> onsets;
  std::vector<Fraction> widths;
  collectSpans(tree.root, Fraction(0, 1), Fraction(1, 1), onsets, widths);
  return widths;
}

BeatInfo beatInfo(const PartitionTree& tree) {
  BeatInfo info;
  collectBeatInfo(tree.root, 0, 0, tree.layers, info);
  return info;
}

}  // namespace cantus
