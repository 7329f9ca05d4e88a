#include "aclab/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace aclab {

namespace {

double elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

std::vector<Int> oracle_members(const BaseSequence& base, SetSide side, const Int& bound, const Int& guard) {
  if (bound < 0) return {};
  if (bound > guard) throw std::invalid_argument("oracle enumeration bound exceeds the guard");

  const int parity = side == SetSide::A ? 0 : 1;
  const std::size_t n = base.ensure_product_above(bound);
  const std::vector<Int> b = base.terms(n + 1);
  const std::vector<Int> a = base.products(n + 1);

  // Digit positions of this side that can contribute at all.
  std::vector<std::size_t> positions;
  for (std::size_t j = static_cast<std::size_t>(parity); j < n; j += 2) {
    if (a[j] <= bound) positions.push_back(j);
  }

  std::vector<Int> out;
  // Depth-first over the support positions, high to low, pruning sums that
  // already exceed the bound. Values are formed by plain summation.
  std::function<void(std::size_t, const Int&)> walk = [&](std::size_t idx, const Int& partial) {
    if (idx == 0) {
      out.push_back(partial);
      return;
    }
    const std::size_t j = positions[idx - 1];
    const Int max_digit = b[j + 1] - 1;
    Int contribution = 0;
    for (Int d = 0; d <= max_digit; ++d) {
      const Int value = partial + contribution;
      if (value > bound) break;
      walk(idx - 1, value);
      contribution += a[j];
    }
  };
  walk(positions.size(), 0);

  std::sort(out.begin(), out.end());
  return out;
}

OracleCounts oracle_counts(const BaseSequence& base, const Int& x, const Int& guard) {
  if (x < 0) throw std::invalid_argument("oracle_counts requires x >= 0");
  OracleCounts counts;
  counts.count_a = Int(oracle_members(base, SetSide::A, x, guard).size());
  counts.count_b = Int(oracle_members(base, SetSide::B, x, guard).size());
  return counts;
}

std::vector<FractionCase> fraction_case_samples(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> range(1, 40);

  std::vector<FractionCase> samples;
  while (samples.size() < count) {
    FractionCase fc;
    fc.a1 = coeff(rng);
    fc.a2 = coeff(rng);
    fc.b1 = coeff(rng);
    fc.b2 = coeff(rng);
    fc.u = range(rng);
    if (fc.a1 * fc.b2 - fc.a2 * fc.b1 < 0) continue;
    // Positivity of the denominator on [0, u]: a linear function is positive
    // on an interval iff it is positive at both ends.
    if (fc.b2 <= 0 || fc.a2 * fc.u + fc.b2 <= 0) continue;
    samples.push_back(std::move(fc));
  }
  return samples;
}

VerificationReport check_lemma33(const std::vector<FractionCase>& samples) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = "lemma33";
  report.base = "-";
  report.bound = Int(samples.size());

  Int checked = 0;
  for (const FractionCase& fc : samples) {
    if (fc.u < 0) throw std::invalid_argument("fraction case requires u >= 0");
    if (fc.a1 * fc.b2 - fc.a2 * fc.b1 < 0) throw std::invalid_argument("fraction case violates a1*b2 - a2*b1 >= 0");
    if (fc.b2 <= 0 || fc.a2 * fc.u + fc.b2 <= 0) {
      throw std::invalid_argument("fraction case denominator not positive on [0, u]");
    }
    const Int num_u = fc.a1 * fc.u + fc.b1;
    const Int den_u = fc.a2 * fc.u + fc.b2;
    for (Int x = 0; x <= fc.u; ++x) {
      const Int num_x = fc.a1 * x + fc.b1;
      const Int den_x = fc.a2 * x + fc.b2;
      ++checked;
      if (num_x * den_u > num_u * den_x) {
        std::ostringstream os;
        os << "(" << fc.a1 << "x+" << fc.b1 << ")/(" << fc.a2 << "x+" << fc.b2 << ") at x=" << x << " exceeds value at u="
           << fc.u;
        report.add_counterexample(x, os.str());
      }
    }
  }

  report.checked = checked;
  report.passed = report.counterexamples.empty();
  report.wall_ms = elapsed_ms(t0);
  return report;
}

namespace {

// Shared body of the two maximality checks: side members of each block
// against that block's distinguished point.
VerificationReport check_block_maximality(const ComplementPair& pair, unsigned k_max, const Int& guard, SetSide side) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = side == SetSide::A ? "lemma34" : "lemma35";
  report.base = pair.describe();
  report.bound = Int(k_max);

  if (k_max < 1) throw std::invalid_argument("block maximality checks require k_max >= 1");
  const std::size_t top_needed = 2 * static_cast<std::size_t>(k_max) + 2;
  if (pair.base().product(top_needed) > guard) {
    std::ostringstream os;
    os << "a_" << top_needed << " exceeds the enumeration guard; lower k_max";
    throw std::invalid_argument(os.str());
  }

  Int checked = 0;
  for (unsigned k = 1; k <= k_max; ++k) {
    const SpecialPoints pts = pair.special_points(k);
    const Int& point = side == SetSide::A ? pts.y : pts.z;
    const Int peak = pair.count_a(point) * pair.count_b(point);
    // Top digit index exactly 2k (side A) or 2k+1 (side B): the half-open
    // value range between consecutive products. Members below the block are
    // outside the statement; x = 1 alone already has ratio 2, above every
    // block peak.
    const std::size_t top = side == SetSide::A ? 2 * k : 2 * k + 1;
    const Int block_begin = pair.base().product(top);
    const Int block_end = pair.base().product(top + 1);

    // Rank of the first member >= block_begin: members below it, 0 included.
    const Int start_rank = side == SetSide::A ? pair.count_a(block_begin - 1) : pair.count_b(block_begin - 1);
    MemberStream stream(pair.base(), side, start_rank);
    while (stream.value() < block_end) {
      const Int& x = stream.value();
      const Int product = pair.count_a(x) * pair.count_b(x);
      ++checked;
      // ratio(x) <= ratio(point) by cross-multiplication.
      if (product * point > peak * x) {
        std::ostringstream os;
        os << "ratio at " << x << " (digits " << encode(pair.base(), x).to_string() << ", block " << k
           << ") exceeds the block peak at " << point;
        report.add_counterexample(x, os.str());
      }
      stream.advance();
    }
  }

  report.checked = checked;
  report.passed = report.counterexamples.empty();
  report.wall_ms = elapsed_ms(t0);
  return report;
}

}  // namespace

VerificationReport check_lemma34(const ComplementPair& pair, unsigned k_max, const Int& guard) {
  return check_block_maximality(pair, k_max, guard, SetSide::A);
}

VerificationReport check_lemma35(const ComplementPair& pair, unsigned k_max, const Int& guard) {
  return check_block_maximality(pair, k_max, guard, SetSide::B);
}

VerificationReport check_scan_reduction(const ComplementPair& pair, const Int& limit, unsigned threads) {
  if (limit < 2) throw std::invalid_argument("check_scan_reduction requires limit >= 2");
  if (limit > kEnumerationGuard) throw std::invalid_argument("check_scan_reduction limit exceeds the guard");
  if (threads == 0) threads = thread_budget();
  if (limit < 4096) threads = 1;

  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = "scan-reduction";
  report.base = pair.describe();
  report.bound = limit;

  struct ChunkResult {
    Int checked = 0;
    std::vector<Counterexample> counterexamples;
  };
  std::vector<ChunkResult> results(threads);

  auto run_chunk = [&pair](const Int& lo, const Int& hi, ChunkResult& out) {
    // Counts at the chunk entry; maintained by membership from there on.
    Int count_a = pair.count_a(lo);
    Int count_b = pair.count_b(lo);
    for (Int x = lo + 1; x <= hi; ++x) {
      const bool in_a = pair.member_a(x);
      const bool in_b = pair.member_b(x);
      if (in_a) ++count_a;
      if (in_b) ++count_b;
      if (in_a || in_b) continue;

      // Independent recomputation of both counts at this x.
      const Int dp_a = pair.count_a(x);
      const Int dp_b = pair.count_b(x);
      out.checked += 1;
      if (dp_a != count_a || dp_b != count_b) {
        std::ostringstream os;
        os << "digit-scan counts (" << dp_a << "," << dp_b << ") disagree with membership tally (" << count_a << ","
           << count_b << ")";
        if (out.counterexamples.size() < VerificationReport::kMaxCounterexamples) {
          out.counterexamples.push_back(Counterexample{x, os.str()});
        }
        continue;
      }
      // x outside both sets: counts at x-1 coincide, so the claim
      // A(x)B(x)/x < A(x-1)B(x-1)/(x-1) reduces to the cross product below.
      const Int product = dp_a * dp_b;
      if (!(product * (x - 1) < product * x)) {
        if (out.counterexamples.size() < VerificationReport::kMaxCounterexamples) {
          out.counterexamples.push_back(Counterexample{x, "ratio failed to drop strictly"});
        }
      }
    }
  };

  if (threads == 1) {
    run_chunk(1, limit, results[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      const Int lo = t == 0 ? Int(1) : Int(limit * t / threads);
      const Int hi = limit * (t + 1) / threads;
      workers.emplace_back([&run_chunk, &results, t, lo, hi] { run_chunk(lo, hi, results[t]); });
    }
    for (auto& w : workers) w.join();
  }

  for (ChunkResult& r : results) {
    report.checked += r.checked;
    for (Counterexample& ce : r.counterexamples) {
      if (report.counterexamples.size() < VerificationReport::kMaxCounterexamples) {
        report.counterexamples.push_back(std::move(ce));
      }
    }
  }
  report.passed = report.counterexamples.empty();
  report.wall_ms = elapsed_ms(t0);
  return report;
}

}  // namespace aclab
