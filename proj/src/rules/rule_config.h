#pragma once

/// @file
/// @brief Tunable rule parameters and per-rule toggles.

#include <set>
#include <string>

#include "rules/reasons.h"

namespace cantus {

/// Default lookback window (in time steps) for the repeated-notes and
/// repeated-pattern rules, and its floor.
inline constexpr int kDefaultRepeatWindow = 8;
inline constexpr int kRepeatWindowMin = 2;

/// Rule knobs. Every rule is on by default; rules are toggled off by their
/// reason string from reasons::kAll.
struct RuleConfig {
  int repeat_window = kDefaultRepeatWindow;
  std::set<std::string> disabled_reasons;

  bool isEnabled(const std::string& reason) const {
    return disabled_reasons.count(reason) == 0;
  }
  void disable(const std::string& reason) { disabled_reasons.insert(reason); }
};

}  // namespace cantus
