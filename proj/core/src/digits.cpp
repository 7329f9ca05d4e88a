#include "aclab/digits.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace aclab {

std::string DigitVector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) os << ',';
    os << digits[i];
  }
  os << ']';
  return os.str();
}

DigitVector encode(const BaseSequence& base, const Int& m) {
  if (m < 0) throw std::invalid_argument("encode requires m >= 0");
  DigitVector dv;
  if (m == 0) return dv;

  const std::size_t n = base.ensure_product_above(m);  // a_n > m
  const std::vector<Int> a = base.products(n + 1);

  std::size_t top = n;
  while (a[top] > m) --top;  // a_0 = 1 <= m, so this stops
  dv.digits.assign(top + 1, Int(0));

  Int r = m;
  for (std::size_t j = top + 1; j-- > 0;) {
    if (a[j] <= r) {
      dv.digits[j] = r / a[j];
      r %= a[j];
    }
  }
  // r < a_0 = 1 here, so the expansion is complete.
  return dv;
}

Int decode(const BaseSequence& base, const DigitVector& dv) {
  if (!dv.canonical()) {
    throw std::invalid_argument("decode requires a canonical digit vector (no trailing zero)");
  }
  if (dv.empty()) return 0;

  base.ensure_terms(dv.size() + 1);
  const std::vector<Int> b = base.terms(dv.size() + 1);
  const std::vector<Int> a = base.products(dv.size());

  Int value = 0;
  for (std::size_t j = 0; j < dv.size(); ++j) {
    const Int& d = dv.digits[j];
    const Int bound = b[j + 1] - 1;
    if (d < 0 || d > bound) {
      std::ostringstream os;
      os << "digit " << d << " at index " << j << " outside [0, " << bound << "]";
      throw std::invalid_argument(os.str());
    }
    value += d * a[j];
  }
  return value;
}

VerificationReport verify_uniqueness(const BaseSequence& base, const Int& bound) {
  if (bound < 0) throw std::invalid_argument("verify_uniqueness requires bound >= 0");
  static const Int kGuard = 10000000;
  if (bound > kGuard) throw std::invalid_argument("verify_uniqueness bound exceeds the enumeration guard 10^7");

  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = "uniqueness";
  report.base = base.describe();
  report.bound = bound;

  const std::size_t n = base.ensure_product_above(bound);  // top index < n
  const std::vector<Int> b = base.terms(n + 1);
  const std::vector<Int> a = base.products(n + 1);
  const std::uint64_t limit = static_cast<std::uint64_t>(bound);

  // hits[v] counts the canonical vectors summing to v; collect[v], when
  // non-null, collects their renderings for the report pass.
  std::vector<std::uint32_t> hits(limit + 1, 0);
  std::vector<std::string>* collect = nullptr;
  std::vector<std::vector<std::string>> vectors;

  DigitVector scratch;
  // Enumerates digits below `pos` given the partial value so far; the digit at
  // the top position was already chosen nonzero, lower digits are free.
  std::function<void(std::size_t, const Int&)> fill_below = [&](std::size_t pos, const Int& partial) {
    if (pos == 0) {
      const std::uint64_t v = static_cast<std::uint64_t>(partial);
      ++hits[v];
      if (collect != nullptr) vectors[v].push_back(scratch.to_string());
      return;
    }
    const std::size_t j = pos - 1;
    const Int max_digit = b[j + 1] - 1;
    Int contribution = 0;
    for (Int d = 0; d <= max_digit; ++d) {
      const Int next = partial + contribution;
      if (next > bound) break;
      scratch.digits[j] = d;
      fill_below(j, next);
      contribution += a[j];
    }
    scratch.digits[j] = 0;
  };

  auto enumerate = [&] {
    // The empty vector is the representation of 0.
    ++hits[0];
    if (collect != nullptr) vectors[0].push_back("[]");
    for (std::size_t top = 0; top < n; ++top) {
      if (a[top] > bound) break;
      scratch.digits.assign(top + 1, Int(0));
      const Int max_digit = b[top + 1] - 1;
      for (Int d = 1; d <= max_digit; ++d) {
        const Int partial = d * a[top];
        if (partial > bound) break;
        scratch.digits[top] = d;
        fill_below(top, partial);
      }
    }
  };

  enumerate();

  bool ok = true;
  for (std::uint64_t v = 0; v <= limit; ++v) {
    if (hits[v] != 1) ok = false;
  }

  if (!ok) {
    // Second pass records the colliding vectors only for the failing values.
    vectors.assign(limit + 1, {});
    std::vector<std::string> sink;
    collect = &sink;  // non-null flag; vectors[] does the storing
    std::fill(hits.begin(), hits.end(), 0u);
    enumerate();
    for (std::uint64_t v = 0; v <= limit; ++v) {
      if (hits[v] == 1) continue;
      std::ostringstream os;
      if (hits[v] == 0) {
        os << "no digit vector sums to " << v;
      } else {
        os << hits[v] << " digit vectors sum to " << v << ":";
        for (const std::string& s : vectors[v]) os << ' ' << s;
      }
      report.add_counterexample(Int(v), os.str());
    }
  }

  report.checked = Int(limit + 1);
  report.passed = ok;
  report.wall_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

}  // namespace aclab
