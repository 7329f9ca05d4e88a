#pragma once

#include "aclab/complement.hpp"
#include "aclab/numeric.hpp"

namespace aclab {

/*
 * The alternating series attached to a base prefix b_1, ..., b_k:
 *
 *   D_k = 1/b_k - 1/(b_k b_{k-1}) + 1/(b_k b_{k-1} b_{k-2}) - ...
 *
 * and its starred variant, which subtracts the full product term once more
 * at odd indices:
 *
 *   D*_k = D_k            for k even
 *   D*_k = D_k - 1/a_k    for k odd.
 *
 * The ratio A(x)B(x)/x at the distinguished points of block k is exactly
 * 2/(1 + D*_{2k}) at y_k and 2/(1 + D*_{2k+1}) at z_k.
 */

/// D_k as an exact rational, k >= 1.
Rational dk(const BaseSequence& base, unsigned k);

/// D*_k as an exact rational, k >= 2 (throws below that: both parities of the
/// starred form only exist from the second index on).
Rational dk_star(const BaseSequence& base, unsigned k);

/// Which distinguished point of a block to evaluate at.
enum class SpecialKind { Y, Z };

/// Exact ratio A(p)B(p)/p at the chosen point p of block k, computed from
/// the counting functions and cross-checked against 2/(1 + D*) before
/// returning; a mismatch throws std::logic_error.
Rational ratio_at_special(const ComplementPair& pair, SpecialKind kind, unsigned k);

/// Largest value of 2/(1 + D*_k) over 2 <= k <= k_max. Monotone
/// non-decreasing in k_max by construction.
Rational limsup_estimate(const BaseSequence& base, unsigned k_max);

}  // namespace aclab
