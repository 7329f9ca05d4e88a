#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aclab/numeric.hpp"

namespace aclab {

/// One failing witness inside a verification run. `detail` spells out what was
/// expected and what was found, including the digit decomposition of x when
/// the check is about a particular value.
struct Counterexample {
  Int x;
  std::string detail;
};

/// Result of one verification suite over one base. Checks never stop at the
/// first failure; `counterexamples` collects every witness found (capped at
/// `kMaxCounterexamples` to keep reports readable, with the overflow noted).
struct VerificationReport {
  static constexpr std::size_t kMaxCounterexamples = 32;

  std::string suite;
  std::string base;
  Int bound = 0;
  bool passed = false;
  Int checked = 0;  // number of individual assertions evaluated
  std::vector<Counterexample> counterexamples;
  double wall_ms = 0.0;

  void add_counterexample(Int x, std::string detail);
  nlohmann::json to_json() const;
};

}  // namespace aclab
