/// @file
/// @brief Meter signatures, their measure/beat/duration trees, and the
/// metrical hierarchy and polyrhythm tables they generate.
#pragma once

#include <string>
#include <vector>

#include "rhythm/fraction.h"
#include "rhythm/partition_tree.h"

namespace cantus {

/// A meter as a division pair: ``beats`` per measure, ``subdivisions`` per
/// beat (both 2 or 3), over a number of measures.
struct MeterSignature {
  int beats = 2;
  int subdivisions = 2;
  int measures = 1;

  bool operator==(const MeterSignature&) const = default;
};

/// @brief The uniform partition tree of a signature.
///
/// The measure count is factored into ascending primes (2s then 3s) to form
/// the measure levels, then every measure splits into ``beats`` and every
/// beat into ``subdivisions``. Throws std::invalid_argument if the measure
/// count has a prime factor other than 2 or 3, or if a division is not 2/3.
PartitionTree meterTree(const MeterSignature& sig);

/// Onset sets per metrical level, each ascending and fully reduced.
struct MetricalHierarchy {
  std::vector<Fraction> measure_level;   ///< level I: measure starts
  std::vector<Fraction> beat_level;      ///< level II: beat starts not on I
  std::vector<Fraction> duration_level;  ///< level III: the rest of the grid
};

/// @brief Split the signature's full onset grid into the three levels.
MetricalHierarchy metricalHierarchy(const MeterSignature& sig);

/// Aligned beat-strength rows for several voices in different meters.
struct PolyrhythmTable {
  int hyper_meter = 0;            ///< least common multiple of the periods
  std::vector<int> periods;       ///< beats * subdivisions per voice
  std::vector<std::string> rows;  ///< hyper_meter + 1 marks, space-joined
};

/// @brief One row per signature: its one-measure X/O/o pattern repeated
/// across the hyper-meter, inclusive of the realigning final downbeat.
/// The measures field of each signature is ignored. Throws
/// std::invalid_argument on an empty list.
PolyrhythmTable polyrhythmTable(const std::vector<MeterSignature>& sigs);

}  // namespace cantus
