#pragma once

#include <vector>

#include "aclab/base_spec.hpp"
#include "aclab/numeric.hpp"

namespace aclab {

/*
 * Named base-sequence families with known ratio behaviour, plus the exact
 * closed forms their analysis rests on. The families are exposed as BaseSpec
 * values so the rest of the library (counting, scans, verification) treats
 * them like any other base.
 */

/// b_j = j + 1: the factorial-growth base whose block ratios climb toward 2.
BaseSpec thm11_spec();

/// Blocks d_j, ..., d_1, c over a two-letter alphabet {a,b} = {min d, max d}
/// with b >= a+2 and a separator c > 2b. The d-list extends cyclically.
BaseSpec thm12_spec(std::vector<Int> d, Int c);

/// Periodic base: l copies of a then one b (l odd, b >= a+2).
BaseSpec lemma22_spec(Int a, Int b, unsigned l);

/// Limit of D over the period boundaries of lemma22(a, b, l):
///   (1 - a^-(l+1)) / (b (1 + 1/a) (1 - 1/(a^l b)))
/// evaluated exactly.
Rational lemma22_limit(const Int& a, const Int& b, unsigned l);

/// Limit of the block ratios as the run length l grows: 2 / (1 + a/(b(a+1))).
Rational thm13_limit(const Int& a, const Int& b);

/// Closed-form ratio limit 2 / ((a-1)/(ab-1) + 1) used by the
/// theoremB-crosscheck suite; equals the l = 1 case of the lemma22 family.
Rational theorem_b_limit(const Int& a, const Int& b);

/// Closed enclosure of the alternating-series value
///   Delta = 1 - 1/d_1 + 1/(d_1 d_2) - ...
/// over all infinite extensions of a finite prefix by terms >= 2.
struct DeltaInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool disjoint_from(const DeltaInterval& other) const { return hi < other.lo || other.hi < lo; }
};

/// Enclosure from a non-empty prefix. The omitted tail has the sign of the
/// next term and magnitude below 1/(2 d_1...d_j) because every extension term
/// is at least 2, so the interval is one-sided of width 1/(2 d_1...d_j);
/// in particular the width never exceeds 1/(d_1...d_j) and the interval lies
/// inside [1/2, 1).
DeltaInterval delta_interval(const std::vector<Int>& d_prefix);

/// Ratio window 2 / (1 + Delta/c) induced by a Delta enclosure.
DeltaInterval induced_ratio_interval(const DeltaInterval& delta, const Int& c);

struct InjectivityReport {
  Int a, b;
  unsigned prefix_len = 0;
  std::size_t pairs = 0;
  bool passed = false;
  unsigned max_extension = 0;  // prefix growth needed for the hardest pair
  std::vector<std::string> failures;
};

/// Certifies that distinct {a,b}-prefixes of the given length force disjoint
/// Delta enclosures. Each prefix is extended term by term with the alphabet
/// pattern that pushes its enclosure outward (larger letter at odd positions
/// for the upper bound, smaller at odd positions for the lower bound) until
/// the two intervals separate; the report notes the deepest extension any
/// pair needed.
InjectivityReport delta_injectivity(const Int& a, const Int& b, unsigned prefix_len);

}  // namespace aclab
