#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "aclab/base_spec.hpp"
#include "aclab/numeric.hpp"

namespace aclab {

/// Materialized prefix of a base sequence together with its partial products
///   b_0 = 1, b_j >= 2   and   a_j = b_0 * b_1 * ... * b_j.
///
/// The prefix grows lazily: any accessor that needs terms past the current
/// length extends the sequence first. Extension is deterministic (same spec,
/// same terms, always), idempotent, and guarded by a mutex so concurrent
/// readers may share one instance. Copies share the materialized state.
class BaseSequence {
 public:
  /// Validates the descriptor and materializes `initial_terms` terms (at least b_0).
  explicit BaseSequence(BaseSpec spec, std::size_t initial_terms = 1);

  const BaseSpec& spec() const;
  std::string describe() const;

  /// Number of terms currently materialized.
  std::size_t materialized() const;

  /// Extends so that at least `count` terms exist. No-op when already there.
  void ensure_terms(std::size_t count) const;

  /// Extends until some partial product exceeds `bound` (bound >= 0) and
  /// returns the smallest index n with a_n > bound.
  std::size_t ensure_product_above(const Int& bound) const;

  Int term(std::size_t j) const;     // b_j
  Int product(std::size_t j) const;  // a_j

  /// Copies of the first `count` terms / products, extending as needed.
  /// Scans grab one snapshot instead of locking per digit.
  std::vector<Int> terms(std::size_t count) const;
  std::vector<Int> products(std::size_t count) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

}  // namespace aclab
