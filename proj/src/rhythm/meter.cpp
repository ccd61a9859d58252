/// @file
/// @brief Meter trees and the metrical hierarchy / polyrhythm tables.

#include "rhythm/meter.h"

#include <numeric>
#include <stdexcept>

namespace cantus {

namespace {

void checkDivision(int value, const char* what) {
  if (value != 2 && value != 3) {
    throw std::invalid_argument(std::string(what) + " must be 2 or 3, got " +
                                std::to_string(value));
  }
}

/// Prime factors of the measure count, ascending (2s then 3s).
std::vector<int> measureFactors(int measures) {
  if (measures < 1) {
    throw std::invalid_argument("measure count must be at least 1, got " +
                                std::to_string(measures));
  }
  std::vector<int> factors;
  int rest = measures;
  while (rest % 2 == 0) {
    factors.push_back(2);
    rest /= 2;
  }
  while (rest % 3 == 0) {
    factors.push_back(3);
    rest /= 3;
  }
  if (rest != 1) {
    throw std::invalid_argument("measure count must factor into 2s and 3s, got " +
                                std::to_string(measures));
  }
  return factors;
}

/// Uniform tree: level k splits every node into factors[k] children.
TreeNode uniformTree(const std::vector<int>& factors, std::size_t level) {
  TreeNode node;
  if (level == factors.size()) return node;
  node.children.assign(static_cast<std::size_t>(factors[level]), TreeNode{});
  for (TreeNode& child : node.children) {
    child = uniformTree(factors, level + 1);
  }
  return node;
}

}  // namespace

PartitionTree meterTree(const MeterSignature& sig) {
  checkDivision(sig.beats, "beats per measure");
  checkDivision(sig.subdivisions, "subdivisions per beat");
  std::vector<int> factors = measureFactors(sig.measures);
  const int measure_levels = static_cast<int>(factors.size());
  factors.push_back(sig.beats);
  factors.push_back(sig.subdivisions);

  PartitionTree tree;
  tree.root = uniformTree(factors, 0);
  tree.layers = {measure_levels, 1, 1};
  return tree;
}

MetricalHierarchy metricalHierarchy(const MeterSignature& sig) {
  checkDivision(sig.beats, "beats per measure");
  checkDivision(sig.subdivisions, "subdivisions per beat");
  measureFactors(sig.measures);  // validates 3-smoothness
  const auto m = static_cast<long long>(sig.measures);
  const long long beat_grid = m * sig.beats;
  const long long full_grid = beat_grid * sig.subdivisions;

  MetricalHierarchy result;
  for (long long k = 0; k < m; ++k) {
    result.measure_level.push_back(Fraction(k, m));
  }
  for (long long k = 0; k < beat_grid; ++k) {
    if (k % sig.beats == 0) continue;  // already on the measure level
    result.beat_level.push_back(Fraction(k, beat_grid));
  }
  for (long long k = 0; k < full_grid; ++k) {
    if (k % sig.subdivisions == 0) continue;  // on a coarser level
    result.duration_level.push_back(Fraction(k, full_grid));
  }
  return result;
}

PolyrhythmTable polyrhythmTable(const std::vector<MeterSignature>& sigs) {
  if (sigs.empty()) {
    throw std::invalid_argument("polyrhythm table needs at least one voice");
  }

  PolyrhythmTable table;
  table.hyper_meter = 1;
  for (const MeterSignature& sig : sigs) {
    int period = sig.beats * sig.subdivisions;
    table.periods.push_back(period);
    table.hyper_meter = std::lcm(table.hyper_meter, period);
  }

  for (const MeterSignature& sig : sigs) {
    MeterSignature one_measure{sig.beats, sig.subdivisions, 1};
    BeatInfo info = beatInfo(meterTree(one_measure));
    const int period = sig.beats * sig.subdivisions;
    std::string row;
    for (int k = 0; k <= table.hyper_meter; ++k) {
      if (k > 0) row += ' ';
      row += strengthMark(info.strengths[static_cast<std::size_t>(k % period)]);
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace cantus
