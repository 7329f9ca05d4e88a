#include "aclab/complement.hpp"

#include <chrono>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace aclab {

ComplementPair::ComplementPair(BaseSequence base) : base_(std::move(base)) {}

namespace {

// Digits of the wrong parity must vanish for membership.
bool member_side(const BaseSequence& base, const Int& m, int parity) {
  if (m < 0) return false;
  const DigitVector dv = encode(base, m);
  for (std::size_t j = 0; j < dv.size(); ++j) {
    if (static_cast<int>(j % 2) != parity && dv.digits[j] != 0) return false;
  }
  return true;
}

}  // namespace

bool ComplementPair::member_a(const Int& m) const { return member_side(base_, m, 0); }
bool ComplementPair::member_b(const Int& m) const { return member_side(base_, m, 1); }

Int ComplementPair::part_side(const Int& m, int parity) const {
  if (m < 0) throw std::invalid_argument("digit split requires m >= 0");
  const DigitVector dv = encode(base_, m);
  if (dv.empty()) return 0;
  const std::vector<Int> a = base_.products(dv.size());
  Int part = 0;
  for (std::size_t j = 0; j < dv.size(); ++j) {
    if (static_cast<int>(j % 2) == parity) part += dv.digits[j] * a[j];
  }
  return part;
}

Int ComplementPair::part_a(const Int& m) const { return part_side(m, 0); }
Int ComplementPair::part_b(const Int& m) const { return part_side(m, 1); }

/*
 * Counting by one digit scan, most significant first. Among the vectors with
 * digits only at positions of the right parity, those with value <= x are:
 * for each position j of x's expansion, the vectors agreeing with x above j
 * and smaller at j. When j has the right parity there are e_j admissible
 * smaller digits, each completed freely below j; when j has the wrong parity
 * and e_j > 0 every admissible vector agreeing above j is smaller, and no
 * vector agrees through j, so the scan stops. The number of free completions
 * below j is the product of the radices at the admissible positions under j.
 * If the scan survives every digit, x itself is a member and counts too.
 */
Int ComplementPair::count_side(const Int& x, int parity) const {
  if (x < 0) throw std::invalid_argument("counting requires x >= 0");
  const DigitVector dv = encode(base_, x);
  if (dv.empty()) return 1;  // only the member 0

  const std::vector<Int> b = base_.terms(dv.size() + 1);
  std::vector<Int> completions(dv.size());  // product of radices below each position
  Int running = 1;
  for (std::size_t j = 0; j < dv.size(); ++j) {
    completions[j] = running;
    if (static_cast<int>(j % 2) == parity) running *= b[j + 1];
  }

  Int count = 0;
  for (std::size_t j = dv.size(); j-- > 0;) {
    if (static_cast<int>(j % 2) == parity) {
      count += dv.digits[j] * completions[j];
    } else if (dv.digits[j] != 0) {
      count += completions[j];
      return count;
    }
  }
  return count + 1;
}

Int ComplementPair::count_a(const Int& x) const { return count_side(x, 0); }
Int ComplementPair::count_b(const Int& x) const { return count_side(x, 1); }

Int ComplementPair::defect(const Int& x) const {
  if (x < 1) throw std::invalid_argument("defect requires x >= 1");
  return count_a(x) * count_b(x) - x;
}

SpecialPoints ComplementPair::special_points(unsigned k) const {
  if (k < 1) throw std::invalid_argument("special_points requires k >= 1");
  const std::size_t top = 2 * static_cast<std::size_t>(k) + 1;
  const std::vector<Int> b = base_.terms(top + 1);
  const std::vector<Int> a = base_.products(top + 1);

  SpecialPoints p;
  p.k = k;
  p.y = a[2 * k];
  p.z = a[2 * k + 1];
  for (unsigned i = 1; i <= k; ++i) {
    p.y += (b[2 * i - 1] - 1) * a[2 * i - 2];
    p.z += (b[2 * i] - 1) * a[2 * i - 1];
  }
  p.x = a[2 * k] - 1;
  return p;
}

MemberStream::MemberStream(BaseSequence base, SetSide side, const Int& start_rank)
    : base_(std::move(base)), parity_(side == SetSide::A ? 0 : 1), rank_(start_rank), value_(0) {
  if (start_rank < 0) throw std::invalid_argument("member rank must be >= 0");
  // Mixed-radix digits of the rank over the slot radices give the member's
  // digit slots directly, least significant first.
  Int r = start_rank;
  std::size_t slot = 0;
  while (r > 0) {
    const Int radix = slot_radix(slot);
    Int digit = r % radix;
    r /= radix;
    value_ += digit * slot_place(slot);
    slots_.push_back(std::move(digit));
    ++slot;
  }
}

std::size_t MemberStream::position(std::size_t slot) const {
  return 2 * slot + static_cast<std::size_t>(parity_);
}

Int MemberStream::slot_radix(std::size_t slot) const { return base_.term(position(slot) + 1); }

Int MemberStream::slot_place(std::size_t slot) const { return base_.product(position(slot)); }

void MemberStream::advance() {
  ++rank_;
  std::size_t slot = 0;
  while (true) {
    if (slot == slots_.size()) slots_.push_back(Int(0));
    const Int radix = slot_radix(slot);
    if (slots_[slot] + 1 < radix) {
      ++slots_[slot];
      value_ += slot_place(slot);
      return;
    }
    // Carry: this slot wraps to zero and the next one takes the increment.
    value_ -= slots_[slot] * slot_place(slot);
    slots_[slot] = 0;
    ++slot;
  }
}

Int member_at_rank(const BaseSequence& base, SetSide side, const Int& rank) {
  return MemberStream(base, side, rank).value();
}

namespace {

std::vector<Int> collect_members(const BaseSequence& base, SetSide side, const Int& limit) {
  std::vector<Int> out;
  if (limit < 0) return out;
  MemberStream stream(base, side);
  while (stream.value() <= limit) {
    out.push_back(stream.value());
    stream.advance();
  }
  return out;
}

}  // namespace

std::vector<Int> ComplementPair::members_a(const Int& limit) const { return collect_members(base_, SetSide::A, limit); }

std::vector<Int> ComplementPair::members_b(const Int& limit) const { return collect_members(base_, SetSide::B, limit); }

VerificationReport ComplementPair::verify_cover(const Int& limit) const {
  if (limit < 0) throw std::invalid_argument("verify_cover requires limit >= 0");
  static const Int kGuard = 10000000;
  if (limit > kGuard) throw std::invalid_argument("verify_cover limit exceeds the enumeration guard 10^7");

  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = "coverage";
  report.base = describe();
  report.bound = limit;

  const std::uint64_t bound = static_cast<std::uint64_t>(limit);
  std::vector<std::uint32_t> decompositions(bound + 1, 0);

  // All pairwise sums <= limit. The inner stream restarts per a-member; the
  // work is proportional to the number of pairs, which equals limit + 1 when
  // the cover property holds.
  MemberStream a_stream(base_, SetSide::A);
  while (a_stream.value() <= limit) {
    const std::uint64_t a_val = static_cast<std::uint64_t>(a_stream.value());
    MemberStream b_stream(base_, SetSide::B);
    while (b_stream.value() + a_stream.value() <= limit) {
      ++decompositions[a_val + static_cast<std::uint64_t>(b_stream.value())];
      b_stream.advance();
    }
    a_stream.advance();
  }

  bool ok = true;
  for (std::uint64_t m = 0; m <= bound; ++m) {
    if (decompositions[m] == 1) continue;
    ok = false;
    std::ostringstream os;
    os << decompositions[m] << " decompositions as a+b (expected 1); digit split gives " << part_a(Int(m)) << " + "
       << part_b(Int(m)) << ", digits " << encode(base_, Int(m)).to_string();
    report.add_counterexample(Int(m), os.str());
  }

  report.checked = Int(bound + 1);
  report.passed = ok;
  report.wall_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

}  // namespace aclab
