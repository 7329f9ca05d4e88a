#include "aclab/base_sequence.hpp"

#include <mutex>
#include <stdexcept>

namespace aclab {

struct BaseSequence::State {
  BaseSpec spec;
  mutable std::mutex mu;
  mutable std::vector<Int> b;
  mutable std::vector<Int> a;

  // Caller must hold mu.
  void grow_locked(std::size_t count) const {
    while (b.size() < count) {
      const std::size_t j = b.size();
      Int t = spec.term_at(j);
      Int prod = j == 0 ? t : Int(a.back() * t);
      b.push_back(std::move(t));
      a.push_back(std::move(prod));
    }
  }
};

BaseSequence::BaseSequence(BaseSpec spec, std::size_t initial_terms) : state_(std::make_shared<State>()) {
  spec.validate();
  state_->spec = std::move(spec);
  if (initial_terms == 0) initial_terms = 1;
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->grow_locked(initial_terms);
}

const BaseSpec& BaseSequence::spec() const { return state_->spec; }

std::string BaseSequence::describe() const { return state_->spec.describe(); }

std::size_t BaseSequence::materialized() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->b.size();
}

void BaseSequence::ensure_terms(std::size_t count) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->grow_locked(count);
}

std::size_t BaseSequence::ensure_product_above(const Int& bound) const {
  if (bound < 0) throw std::invalid_argument("ensure_product_above requires bound >= 0");
  std::lock_guard<std::mutex> lock(state_->mu);
  std::size_t n = 0;
  while (true) {
    state_->grow_locked(n + 1);
    if (state_->a[n] > bound) return n;
    ++n;
  }
}

Int BaseSequence::term(std::size_t j) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->grow_locked(j + 1);
  return state_->b[j];
}

Int BaseSequence::product(std::size_t j) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->grow_locked(j + 1);
  return state_->a[j];
}

std::vector<Int> BaseSequence::terms(std::size_t count) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->grow_locked(count);
  return std::vector<Int>(state_->b.begin(), state_->b.begin() + static_cast<std::ptrdiff_t>(count));
}

std::vector<Int> BaseSequence::products(std::size_t count) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->grow_locked(count);
  return std::vector<Int>(state_->a.begin(), state_->a.begin() + static_cast<std::ptrdiff_t>(count));
}

}  // namespace aclab
