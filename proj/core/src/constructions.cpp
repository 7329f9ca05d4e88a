#include "aclab/constructions.hpp"

#include <sstream>
#include <stdexcept>

namespace aclab {

namespace {

void require_letters(const Int& a, const Int& b, const char* who) {
  if (a < 2) {
    std::ostringstream os;
    os << who << " requires a >= 2 (got a=" << a << ")";
    throw std::invalid_argument(os.str());
  }
  if (b < a + 2) {
    std::ostringstream os;
    os << who << " requires b >= a+2 (got a=" << a << ", b=" << b << ")";
    throw std::invalid_argument(os.str());
  }
}

Int int_pow(const Int& base, unsigned e) {
  Int r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

BaseSpec thm11_spec() { return BaseSpec::thm11(); }

BaseSpec thm12_spec(std::vector<Int> d, Int c) { return BaseSpec::thm12(std::move(d), std::move(c)); }

BaseSpec lemma22_spec(Int a, Int b, unsigned l) { return BaseSpec::lemma22(std::move(a), std::move(b), l); }

Rational lemma22_limit(const Int& a, const Int& b, unsigned l) {
  require_letters(a, b, "lemma22_limit");
  if (l == 0 || l % 2 == 0) {
    std::ostringstream os;
    os << "lemma22_limit requires odd l >= 1 (got l=" << l << ")";
    throw std::invalid_argument(os.str());
  }
  const Rational numerator = 1 - Rational(1, int_pow(a, l + 1));
  const Rational denominator = Rational(b) * (1 + Rational(1, a)) * (1 - Rational(1, int_pow(a, l) * b));
  return numerator / denominator;
}

Rational thm13_limit(const Int& a, const Int& b) {
  require_letters(a, b, "thm13_limit");
  return Rational(2) / (1 + Rational(a, b * (a + 1)));
}

Rational theorem_b_limit(const Int& a, const Int& b) {
  require_letters(a, b, "theorem_b_limit");
  return Rational(2) / (Rational(a - 1, a * b - 1) + 1);
}

DeltaInterval delta_interval(const std::vector<Int>& d_prefix) {
  if (d_prefix.empty()) throw std::invalid_argument("delta_interval requires a non-empty prefix");
  Rational sum = 1;
  Int prod = 1;
  int sign = -1;
  for (std::size_t i = 0; i < d_prefix.size(); ++i) {
    if (d_prefix[i] < 2) {
      std::ostringstream os;
      os << "delta_interval prefix term at index " << (i + 1) << " must be >= 2 (got " << d_prefix[i] << ")";
      throw std::invalid_argument(os.str());
    }
    prod *= d_prefix[i];
    if (sign > 0) {
      sum += Rational(1, prod);
    } else {
      sum -= Rational(1, prod);
    }
    sign = -sign;
  }
  // `sign` now carries the sign of the first omitted term; the whole omitted
  // alternating tail shares it and is smaller than 1/(2 prod) in magnitude.
  const Rational tail(1, 2 * prod);
  DeltaInterval iv;
  if (sign > 0) {
    iv.lo = sum;
    iv.hi = sum + tail;
  } else {
    iv.lo = sum - tail;
    iv.hi = sum;
  }
  return iv;
}

DeltaInterval induced_ratio_interval(const DeltaInterval& delta, const Int& c) {
  if (c < 1) throw std::invalid_argument("induced_ratio_interval requires c >= 1");
  DeltaInterval out;
  out.lo = Rational(2) / (1 + delta.hi / Rational(c));
  out.hi = Rational(2) / (1 + delta.lo / Rational(c));
  return out;
}

namespace {

// Extension letter at absolute position j that pushes the enclosure up
// (toward the supremum over alphabet tails): subtracted positions (odd j)
// get the large letter, added positions the small one. `up = false` mirrors.
Int steer_letter(const Int& a, const Int& b, std::size_t j, bool up) {
  const bool odd = j % 2 == 1;
  return (odd == up) ? b : a;
}

DeltaInterval steered_interval(const Int& a, const Int& b, std::vector<Int> prefix, unsigned extension, bool up) {
  std::size_t j = prefix.size();
  for (unsigned i = 0; i < extension; ++i) {
    ++j;
    prefix.push_back(steer_letter(a, b, j, up));
  }
  return delta_interval(prefix);
}

}  // namespace

InjectivityReport delta_injectivity(const Int& a, const Int& b, unsigned prefix_len) {
  require_letters(a, b, "delta_injectivity");
  if (prefix_len < 1 || prefix_len > 20) {
    throw std::invalid_argument("delta_injectivity requires 1 <= prefix_len <= 20");
  }

  InjectivityReport report;
  report.a = a;
  report.b = b;
  report.prefix_len = prefix_len;
  report.passed = true;

  const std::size_t count = static_cast<std::size_t>(1) << prefix_len;
  std::vector<std::vector<Int>> prefixes(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    prefixes[mask].reserve(prefix_len);
    for (unsigned i = 0; i < prefix_len; ++i) {
      prefixes[mask].push_back((mask >> i) & 1 ? b : a);
    }
  }

  constexpr unsigned kMaxExtension = 64;
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t q = p + 1; q < count; ++q) {
      ++report.pairs;
      bool separated = false;
      for (unsigned ext = 0; ext <= kMaxExtension; ++ext) {
        const Rational p_hi = steered_interval(a, b, prefixes[p], ext, true).hi;
        const Rational p_lo = steered_interval(a, b, prefixes[p], ext, false).lo;
        const Rational q_hi = steered_interval(a, b, prefixes[q], ext, true).hi;
        const Rational q_lo = steered_interval(a, b, prefixes[q], ext, false).lo;
        if (p_hi < q_lo || q_hi < p_lo) {
          separated = true;
          if (ext > report.max_extension) report.max_extension = ext;
          break;
        }
      }
      if (!separated) {
        report.passed = false;
        std::ostringstream os;
        os << "prefixes ";
        for (const Int& t : prefixes[p]) os << t << '.';
        os << " and ";
        for (const Int& t : prefixes[q]) os << t << '.';
        os << " still overlap after " << kMaxExtension << " extension terms";
        report.failures.push_back(os.str());
      }
    }
  }
  return report;
}

}  // namespace aclab
