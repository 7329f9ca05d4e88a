#include "aclab/report.hpp"

namespace aclab {

void VerificationReport::add_counterexample(Int x, std::string detail) {
  if (counterexamples.size() < kMaxCounterexamples) {
    counterexamples.push_back(Counterexample{std::move(x), std::move(detail)});
  }
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["base"] = base;
  j["bound"] = bound.str();
  j["passed"] = passed;
  j["checked"] = checked.str();
  j["wall_ms"] = wall_ms;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& ce : counterexamples) {
    arr.push_back({{"x", ce.x.str()}, {"detail", ce.detail}});
  }
  j["counterexamples"] = arr;
  return j;
}

}  // namespace aclab
