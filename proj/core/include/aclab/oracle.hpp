#pragma once

#include <cstdint>
#include <vector>

#include "aclab/complement.hpp"
#include "aclab/numeric.hpp"
#include "aclab/report.hpp"

namespace aclab {

/*
 * Brute-force cross-checks. Everything here recomputes results by direct
 * enumeration or per-value recomputation, deliberately avoiding the counting
 * shortcuts it is used to check. Enumeration entry points refuse bounds
 * beyond a guard (default 10^7) instead of silently taking hours.
 */

inline const Int kEnumerationGuard = 10000000;

/// Every member of one side up to `bound`, found by generating all digit
/// vectors supported on the side's positions and summing them directly.
/// Sorted ascending.
std::vector<Int> oracle_members(const BaseSequence& base, SetSide side, const Int& bound,
                                const Int& guard = kEnumerationGuard);

struct OracleCounts {
  Int count_a;
  Int count_b;
};

/// |A intersect [0,x]| and |B intersect [0,x]| by enumeration.
OracleCounts oracle_counts(const BaseSequence& base, const Int& x, const Int& guard = kEnumerationGuard);

/// Hypotheses and range for one monotone-fraction check: coefficients with
/// a1*b2 - a2*b1 >= 0 and a2*x + b2 > 0 on [0, u].
struct FractionCase {
  Int a1, a2, b1, b2, u;
};

/// Deterministic sample generator for check_lemma33 (fixed seed, fixed count).
std::vector<FractionCase> fraction_case_samples(std::uint64_t seed, std::size_t count);

/// Verifies (a1 x + b1)/(a2 x + b2) <= (a1 u + b1)/(a2 u + b2) for every
/// integer 0 <= x <= u of every sample, by cross-multiplication. Samples must
/// satisfy the hypotheses; a violating sample throws.
VerificationReport check_lemma33(const std::vector<FractionCase>& samples);

/// For every block k <= k_max and every x in A whose top digit index is
/// exactly 2k, checks ratio(x) <= ratio(y_k) exactly. Requires
/// a_{2k_max+2} <= guard. Values below a_2 are outside every block (their
/// ratio envelope peaks at the uninformative 2 at x = 1).
VerificationReport check_lemma34(const ComplementPair& pair, unsigned k_max, const Int& guard = kEnumerationGuard);

/// Mirror image on B: every x in B with top index exactly 2k+1 against z_k.
VerificationReport check_lemma35(const ComplementPair& pair, unsigned k_max, const Int& guard = kEnumerationGuard);

/// For every x <= limit outside A union B, recomputes both counts at x by
/// digit scan, checks they agree with an incrementally maintained membership
/// tally (which carries the counts at x-1, unchanged by a non-member), and
/// verifies the strict ratio drop A(x)B(x)/x < A(x-1)B(x-1)/(x-1) by
/// cross-multiplication.
VerificationReport check_scan_reduction(const ComplementPair& pair, const Int& limit, unsigned threads = 0);

}  // namespace aclab
