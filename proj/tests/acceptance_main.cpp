// Acceptance gate: ten checks over the full library surface, each with an
// exact pass condition and a pinned wall-clock budget. Prints one line per
// criterion and exits nonzero if any of them fails its condition or its
// budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "aclab/constructions.hpp"
#include "aclab/dk.hpp"
#include "aclab/oracle.hpp"
#include "aclab/ratio_scan.hpp"

namespace {

using aclab::BaseSequence;
using aclab::BaseSpec;
using aclab::ComplementPair;
using aclab::Int;
using aclab::Rational;

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// The five structurally different bases the checks run against.
std::vector<BaseSpec> test_bases() {
  return {
      BaseSpec::uniform(2),
      BaseSpec::explicit_list(ints({2, 3, 2, 3, 2, 3})),
      BaseSpec::thm12(ints({2, 4}), 9),
      BaseSpec::thm11(),
      BaseSpec::lemma22(2, 4, 1),
  };
}

struct Criterion {
  int id;
  std::string description;
  long budget_ms;
  std::function<bool(std::string&)> run;
};

bool require(bool ok, const std::string& what, std::string& detail) {
  if (!ok && detail.empty()) detail = what;
  return ok;
}

// 1: every m <= 10^5 has exactly one two-class decomposition.
bool criterion_cover(std::string& detail) {
  bool ok = true;
  for (const BaseSpec& spec : {BaseSpec::uniform(2), BaseSpec::explicit_list(ints({2, 3, 2, 3, 2, 3})),
                               BaseSpec::thm12(ints({2, 4}), 9)}) {
    const ComplementPair pair{BaseSequence(spec)};
    const aclab::VerificationReport report = pair.verify_cover(100000);
    ok &= require(report.passed, "decomposition failure on " + pair.describe(), detail);
  }
  return ok;
}

// 2: defect exactly one at every block-top point, k = 1..10.
bool criterion_defect(std::string& detail) {
  bool ok = true;
  for (const BaseSpec& spec : test_bases()) {
    const ComplementPair pair{BaseSequence(spec)};
    for (unsigned k = 1; k <= 10; ++k) {
      const Int point = pair.base().product(2 * k) - 1;
      ok &= require(pair.defect(point) == 1, "defect != 1 at block " + std::to_string(k) + " on " + pair.describe(),
                    detail);
    }
  }
  return ok;
}

// 3: closed-form counts and series ratios at the distinguished points.
bool criterion_closed_forms(std::string& detail) {
  bool ok = true;
  for (const BaseSpec& spec : test_bases()) {
    const ComplementPair pair{BaseSequence(spec)};
    const std::vector<Int> b = pair.base().terms(2 * 8 + 2);
    Int odd = 1, even = 1;
    for (unsigned k = 1; k <= 8; ++k) {
      odd *= b[2 * k - 1];
      even *= b[2 * k];
      const aclab::SpecialPoints pts = pair.special_points(k);
      ok &= require(pair.count_a(pts.y) == 2 * odd && pair.count_b(pts.y) == even,
                    "closed-form count mismatch at a y point on " + pair.describe(), detail);
      ok &= require(pair.count_a(pts.z) == odd * b[2 * k + 1] && pair.count_b(pts.z) == 2 * even,
                    "closed-form count mismatch at a z point on " + pair.describe(), detail);
      // Throws on count/series disagreement.
      try {
        const Rational ry = aclab::ratio_at_special(pair, aclab::SpecialKind::Y, k);
        const Rational rz = aclab::ratio_at_special(pair, aclab::SpecialKind::Z, k);
        ok &= require(ry == Rational(pair.count_a(pts.y) * pair.count_b(pts.y), pts.y), "ratio form mismatch at y",
                      detail);
        ok &= require(rz == Rational(pair.count_a(pts.z) * pair.count_b(pts.z), pts.z), "ratio form mismatch at z",
                      detail);
      } catch (const std::exception& e) {
        ok &= require(false, std::string("series cross-check threw: ") + e.what(), detail);
      }
    }
  }
  return ok;
}

// 4: block maximality, exhaustive per block while a_{2k+2} <= 10^6.
bool criterion_maximality(std::string& detail) {
  const Int guard = 1000000;
  bool ok = true;
  for (const BaseSpec& spec : test_bases()) {
    const ComplementPair pair{BaseSequence(spec)};
    unsigned k_max = 0;
    while (pair.base().product(2 * (k_max + 1) + 2) <= guard) ++k_max;
    if (!require(k_max >= 1, "no block fits under the bound on " + pair.describe(), detail)) {
      ok = false;
      continue;
    }
    const aclab::VerificationReport on_a = aclab::check_lemma34(pair, k_max, guard);
    const aclab::VerificationReport on_b = aclab::check_lemma35(pair, k_max, guard);
    ok &= require(on_a.passed, "in-A maximality failed on " + pair.describe(), detail);
    ok &= require(on_b.passed, "in-B maximality failed on " + pair.describe(), detail);
  }
  return ok;
}

// 5: strict ratio drop at every non-member up to 10^5.
bool criterion_reduction(std::string& detail) {
  bool ok = true;
  for (const BaseSpec& spec : {BaseSpec::uniform(2), BaseSpec::explicit_list(ints({2, 3, 2, 3, 2, 3})),
                               BaseSpec::thm12(ints({2, 4}), 9)}) {
    const ComplementPair pair{BaseSequence(spec)};
    const aclab::VerificationReport report = aclab::check_scan_reduction(pair, 100000);
    ok &= require(report.passed, "reduction failed on " + pair.describe(), detail);
  }
  return ok;
}

// 6: the two-letter limit agrees with the run-length-one series limit.
bool criterion_crosscheck(std::string& detail) {
  const std::vector<std::pair<std::pair<long, long>, Rational>> cases = {
      {{2, 4}, Rational(7, 4)},
      {{2, 5}, Rational(9, 5)},
      {{3, 5}, Rational(7, 4)},
  };
  bool ok = true;
  for (const auto& [ab, expect] : cases) {
    const Rational via_series = Rational(2) / (1 + aclab::lemma22_limit(ab.first, ab.second, 1));
    const Rational closed = aclab::theorem_b_limit(ab.first, ab.second);
    ok &= require(via_series == closed && closed == expect,
                  "limit mismatch at (" + std::to_string(ab.first) + "," + std::to_string(ab.second) + ")", detail);
  }
  return ok;
}

// 7: run-length growth drives the series limit to 1/6 and the ratio to 12/7.
bool criterion_convergence(std::string& detail) {
  const std::vector<std::pair<unsigned, Rational>> expect = {
      {1, Rational(1, 7)}, {3, Rational(5, 31)}, {5, Rational(21, 127)}, {7, Rational(85, 511)}};
  const Rational target(1, 6);  // a/(b(a+1)) at a=2, b=4
  const Rational ratio_target(12, 7);
  bool ok = true;
  Rational prev_gap = 1, prev_ratio_gap = 1;
  for (const auto& [l, value] : expect) {
    const Rational d = aclab::lemma22_limit(2, 4, l);
    ok &= require(d == value, "series limit at run length " + std::to_string(l) + " is off", detail);
    Rational gap = d - target;
    if (gap < 0) gap = -gap;
    ok &= require(gap < prev_gap, "approach to 1/6 is not monotone", detail);
    prev_gap = gap;

    Rational ratio_gap = Rational(2) / (1 + d) - ratio_target;
    if (ratio_gap < 0) ratio_gap = -ratio_gap;
    ok &= require(ratio_gap < prev_ratio_gap, "ratio approach to 12/7 is not monotone", detail);
    prev_ratio_gap = ratio_gap;
  }
  ok &= require(prev_gap < Rational(1, 1000), "gap at run length 7 is not below 1/1000", detail);
  return ok;
}

// 8: factorial-style base pushes the peak ratio above 1.9 by block 12.
bool criterion_factorial_peaks(std::string& detail) {
  const ComplementPair pair{BaseSequence(BaseSpec::thm11())};
  bool ok = true;
  Rational best = 0;
  for (unsigned k = 1; k <= 12; ++k) {
    const Rational d = aclab::dk(pair.base(), 2 * k);
    ok &= require(d > 0 && d < Rational(1, 2 * k + 1), "series bound 0 < D < 1/b violated", detail);
    Rational ratio;
    try {
      ratio = aclab::ratio_at_special(pair, aclab::SpecialKind::Y, k);
    } catch (const std::exception& e) {
      ok &= require(false, std::string("series cross-check threw: ") + e.what(), detail);
      continue;
    }
    ok &= require(ratio == Rational(2) / (1 + d), "peak ratio differs from 2/(1+D)", detail);
    if (ratio > best) best = ratio;
  }
  ok &= require(best > Rational(19, 10), "no peak above 1.9 within 12 blocks", detail);
  return ok;
}

// 9: block-base series bounds and the certified alternating enclosures.
bool criterion_enclosures(std::string& detail) {
  bool ok = true;
  BaseSequence base(BaseSpec::thm12(ints({2, 4}), 9));
  for (unsigned k = 1; k <= 20; ++k) {
    const Rational d = aclab::dk(base, k);
    if (aclab::thm12_is_c_position(k)) {
      ok &= require(d <= Rational(1, 9), "separator-position value above 1/9 at k=" + std::to_string(k), detail);
    } else {
      ok &= require(d >= Rational(1, 8), "letter-position value below 1/8 at k=" + std::to_string(k), detail);
    }
  }

  const aclab::DeltaInterval all_two = aclab::delta_interval(std::vector<Int>(10, Int(2)));
  ok &= require(all_two.contains(Rational(2, 3)), "all-2 enclosure misses 2/3", detail);
  ok &= require(all_two.width() <= Rational(1, 1024), "all-2 enclosure wider than 2^-10", detail);

  std::vector<Int> d_prefix;
  for (int i = 0; i < 6; ++i) {
    d_prefix.emplace_back(2);
    d_prefix.emplace_back(4);
  }
  const aclab::DeltaInterval window = aclab::induced_ratio_interval(aclab::delta_interval(d_prefix), 9);
  ok &= require(window.lo > Rational(16, 9) && window.hi < 2, "induced window leaves (16/9, 2)", detail);
  return ok;
}

// 10: digit-scan counting equals brute-force enumeration everywhere.
bool criterion_oracle(std::string& detail) {
  const Int bound = 100000;
  bool ok = true;
  for (const BaseSpec& spec : test_bases()) {
    BaseSequence base(spec);
    const ComplementPair pair{base};
    const std::vector<Int> in_a = aclab::oracle_members(base, aclab::SetSide::A, bound);
    const std::vector<Int> in_b = aclab::oracle_members(base, aclab::SetSide::B, bound);
    std::size_t ia = 0, ib = 0;
    for (Int x = 0; x <= bound; ++x) {
      while (ia < in_a.size() && in_a[ia] <= x) ++ia;
      while (ib < in_b.size() && in_b[ib] <= x) ++ib;
      if (pair.count_a(x) != Int(ia) || pair.count_b(x) != Int(ib)) {
        ok &= require(false, "count mismatch at x=" + x.str() + " on " + pair.describe(), detail);
        break;
      }
    }
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "every m <= 100000 splits uniquely across the pair (3 bases)", 5000, criterion_cover},
      {2, "defect one at all block tops a_2k - 1, k <= 10 (5 bases)", 1000, criterion_defect},
      {3, "closed-form counts and series ratios at y_k, z_k, k <= 8 (5 bases)", 1000, criterion_closed_forms},
      {4, "exhaustive block maximality while a_2k+2 <= 10^6 (5 bases)", 30000, criterion_maximality},
      {5, "strict ratio drop at every non-member <= 100000 (3 bases)", 5000, criterion_reduction},
      {6, "two-letter limits 7/4, 9/5, 7/4 match the series route", 1000, criterion_crosscheck},
      {7, "run-length limits 1/7, 5/31, 21/127, 85/511 -> 1/6; ratios -> 12/7", 1000, criterion_convergence},
      {8, "factorial base peak ratio exceeds 1.9 within 12 blocks", 1000, criterion_factorial_peaks},
      {9, "separator series bounds and certified alternating enclosures", 1000, criterion_enclosures},
      {10, "digit-scan counts equal enumeration for all x <= 100000 (5 bases)", 10000, criterion_oracle},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool pass = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (ms > c.budget_ms) {
      pass = false;
      detail = "over budget: " + std::to_string(ms) + " ms";
    }
    std::printf("criterion %2d: %s %6ld ms (budget %5ld ms)  %s%s%s\n", c.id, pass ? "PASS" : "FAIL", ms, c.budget_ms,
                c.description.c_str(), detail.empty() ? "" : " | ", detail.c_str());
    if (!pass) ++failures;
  }
  std::printf("acceptance: %d/10 passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
