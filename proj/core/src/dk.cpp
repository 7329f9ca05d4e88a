#include "aclab/dk.hpp"

#include <sstream>
#include <stdexcept>

namespace aclab {

Rational dk(const BaseSequence& base, unsigned k) {
  if (k < 1) throw std::invalid_argument("dk requires k >= 1");
  const std::vector<Int> b = base.terms(static_cast<std::size_t>(k) + 1);
  Rational sum = 0;
  Int prod = 1;
  for (unsigned i = 0; i < k; ++i) {
    prod *= b[k - i];
    if (i % 2 == 0) {
      sum += Rational(1, prod);
    } else {
      sum -= Rational(1, prod);
    }
  }
  return sum;
}

Rational dk_star(const BaseSequence& base, unsigned k) {
  if (k < 2) throw std::invalid_argument("dk_star is defined for k >= 2");
  Rational d = dk(base, k);
  if (k % 2 == 1) d -= Rational(1, base.product(k));
  return d;
}

Rational ratio_at_special(const ComplementPair& pair, SpecialKind kind, unsigned k) {
  if (k < 1) throw std::invalid_argument("ratio_at_special requires k >= 1");
  const SpecialPoints pts = pair.special_points(k);
  const Int& point = kind == SpecialKind::Y ? pts.y : pts.z;
  const unsigned star_index = kind == SpecialKind::Y ? 2 * k : 2 * k + 1;

  const Rational from_counts = Rational(pair.count_a(point) * pair.count_b(point), point);
  const Rational from_series = Rational(2) / (1 + dk_star(pair.base(), star_index));
  if (from_counts != from_series) {
    std::ostringstream os;
    os << "ratio mismatch at block " << k << " point " << point << ": counts give " << from_counts
       << ", series gives " << from_series;
    throw std::logic_error(os.str());
  }
  return from_counts;
}

Rational limsup_estimate(const BaseSequence& base, unsigned k_max) {
  if (k_max < 2) throw std::invalid_argument("limsup_estimate requires k_max >= 2");
  Rational best = 0;
  for (unsigned k = 2; k <= k_max; ++k) {
    const Rational candidate = Rational(2) / (1 + dk_star(base, k));
    if (candidate > best) best = candidate;
  }
  return best;
}

}  // namespace aclab
