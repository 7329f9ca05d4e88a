#pragma once

#include <vector>

#include "aclab/base_sequence.hpp"
#include "aclab/digits.hpp"
#include "aclab/numeric.hpp"
#include "aclab/report.hpp"

namespace aclab {

/*
 * Splitting the digit positions of a base sequence by parity yields two sets
 *
 *   A = { m : every odd-index digit of m is 0 }
 *   B = { m : every even-index digit of m is 0 }
 *
 * Every m >= 0 then splits uniquely as m = alpha + beta with alpha in A and
 * beta in B (drop the odd digits for alpha, the even ones for beta), so A and
 * B are additive complements. 0 belongs to both. The counting functions
 * A(x), B(x) count members <= x including 0.
 */

/// The distinguished points of the k-th digit block (k >= 1):
///   y = sum_{i=1..k} (b_{2i-1} - 1) a_{2i-2} + a_{2k}
///   z = sum_{i=1..k} (b_{2i} - 1) a_{2i-1} + a_{2k+1}
///   x = a_{2k} - 1
/// y and z are the in-set ratio peaks, x has product defect exactly one.
struct SpecialPoints {
  unsigned k = 0;
  Int y;
  Int z;
  Int x;
};

/// Which of the two parity classes a routine should work on.
enum class SetSide { A, B };

class ComplementPair {
 public:
  explicit ComplementPair(BaseSequence base);

  const BaseSequence& base() const { return base_; }
  std::string describe() const { return base_.describe(); }

  bool member_a(const Int& m) const;
  bool member_b(const Int& m) const;

  /// The unique split m = part_a(m) + part_b(m) with the parts in A and B.
  Int part_a(const Int& m) const;
  Int part_b(const Int& m) const;

  /// Counting functions A(x), B(x) for x >= 0, members of [0, x]. One pass
  /// over the digits of x, no enumeration.
  Int count_a(const Int& x) const;
  Int count_b(const Int& x) const;

  /// A(x) * B(x) - x for x >= 1.
  Int defect(const Int& x) const;

  SpecialPoints special_points(unsigned k) const;

  /// Ascending members of one side up to `limit` (0 is always first).
  std::vector<Int> members_a(const Int& limit) const;
  std::vector<Int> members_b(const Int& limit) const;

  /// Checks that every m in [0, limit] has exactly one decomposition a + b
  /// with a in A, b in B, by counting all pairs with small sums. Limit is
  /// capped by the enumeration guard 10^7.
  VerificationReport verify_cover(const Int& limit) const;

 private:
  Int count_side(const Int& x, int parity) const;
  Int part_side(const Int& m, int parity) const;

  BaseSequence base_;
};

/// Ascending walk over one parity class, starting at an arbitrary rank.
/// rank r holds the (r+1)-th smallest member; rank 0 is the value 0.
/// Stepping is an odometer increment over the constrained digit slots, so a
/// scan of many consecutive members costs O(1) big-int operations per step
/// on average.
class MemberStream {
 public:
  MemberStream(BaseSequence base, SetSide side, const Int& start_rank = 0);

  const Int& value() const { return value_; }
  const Int& rank() const { return rank_; }
  void advance();

 private:
  std::size_t position(std::size_t slot) const;  // digit index of a slot
  Int slot_radix(std::size_t slot) const;        // b_{position+1}
  Int slot_place(std::size_t slot) const;        // a_{position}

  BaseSequence base_;
  int parity_;
  Int rank_;
  Int value_;
  std::vector<Int> slots_;  // digit per slot, least significant first
};

/// Value of the member of `side` with the given 0-based rank.
Int member_at_rank(const BaseSequence& base, SetSide side, const Int& rank);

}  // namespace aclab
