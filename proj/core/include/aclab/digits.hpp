#pragma once

#include <string>
#include <vector>

#include "aclab/base_sequence.hpp"
#include "aclab/numeric.hpp"
#include "aclab/report.hpp"

namespace aclab {

/*
 * Positional representation over a base sequence. A value m >= 0 is written
 *
 *   m = sum_j e_j * a_j,   0 <= e_j <= b_{j+1} - 1,
 *
 * with a_j the partial products of the sequence. Every m has exactly one such
 * digit vector once trailing zeros are forbidden; m = 0 is the empty vector.
 */

/// Canonical digit vector: digits[j] multiplies a_j, the top digit is nonzero.
struct DigitVector {
  std::vector<Int> digits;

  bool empty() const { return digits.empty(); }
  std::size_t size() const { return digits.size(); }

  /// True when the vector is empty or ends in a nonzero digit.
  bool canonical() const { return digits.empty() || digits.back() != 0; }

  /// Index of the highest nonzero digit. Requires a non-empty vector.
  std::size_t top_index() const { return digits.size() - 1; }

  /// Rendering like "[1,2,1]" for reports and error messages.
  std::string to_string() const;

  bool operator==(const DigitVector& other) const = default;
};

/// Digits of m, most significant last. Greedy from the top: pick the largest
/// a_n <= m, split off floor(m / a_n) copies, recurse on the remainder. The
/// digit bounds then hold automatically. Throws for m < 0.
DigitVector encode(const BaseSequence& base, const Int& m);

/// Value of a canonical digit vector. Throws when a digit violates its bound
/// (naming the index) or when the vector has a trailing zero.
Int decode(const BaseSequence& base, const DigitVector& dv);

/// Exhaustively enumerates every canonical digit vector whose value is at
/// most `bound` (by direct value sums, independent of encode) and confirms
/// the values cover 0..bound exactly once. Counterexamples list the values
/// hit a wrong number of times with the colliding vectors.
VerificationReport verify_uniqueness(const BaseSequence& base, const Int& bound);

}  // namespace aclab
