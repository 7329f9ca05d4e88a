#include "aclab/numeric.hpp"

#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace aclab {

namespace {

Int pow10(unsigned e) {
  Int r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

int decimal_digit_count(const Int& v) {
  return static_cast<int>(v.str().size());
}

}  // namespace

/*
 * Exact decimal rendering of num/den to s significant digits.
 *
 * Pick the exponent e with 10^e <= num/den < 10^(e+1), then compute
 *   q = floor(num * 10^(s-1-e) / den)
 * so that q has exactly s digits, and round half up on the remainder.
 * The first guess for e comes from digit counts and is off by at most one,
 * so one correction loop suffices. Rounding can carry q up to 10^s, which
 * bumps e and drops the trailing zero.
 */
std::string to_decimal(const Rational& value, unsigned significant_digits) {
  if (significant_digits == 0) throw std::invalid_argument("to_decimal requires at least 1 significant digit");
  if (value == 0) return "0";

  const bool negative = value < 0;
  const Int num = negative ? Int(-numerator(value)) : Int(numerator(value));
  const Int den = denominator(value);
  const int s = static_cast<int>(significant_digits);

  int e = decimal_digit_count(num) - decimal_digit_count(den);
  Int q, rem;
  const Int lo = pow10(static_cast<unsigned>(s - 1));
  const Int hi = lo * 10;
  for (;;) {
    const int p = s - 1 - e;
    Int scaled_num = num;
    Int scaled_den = den;
    if (p >= 0) {
      scaled_num *= pow10(static_cast<unsigned>(p));
    } else {
      scaled_den *= pow10(static_cast<unsigned>(-p));
    }
    q = scaled_num / scaled_den;
    rem = scaled_num % scaled_den;
    if (q >= hi) {
      ++e;
    } else if (q < lo) {
      --e;
    } else {
      if (2 * rem >= scaled_den) {
        ++q;
        if (q == hi) {
          q /= 10;
          ++e;
        }
      }
      break;
    }
  }

  std::string digits = q.str();
  std::string out;
  if (negative) out += '-';
  if (e >= s - 1) {
    // Integer-valued rendering: pad with zeros up to the decimal point.
    out += digits;
    out.append(static_cast<std::size_t>(e - (s - 1)), '0');
  } else if (e >= 0) {
    out += digits.substr(0, static_cast<std::size_t>(e + 1));
    out += '.';
    out += digits.substr(static_cast<std::size_t>(e + 1));
  } else {
    out += "0.";
    out.append(static_cast<std::size_t>(-e - 1), '0');
    out += digits;
  }
  return out;
}

unsigned thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const char* env = std::getenv("ACLAB_THREADS");
  if (env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && cap >= 1) {
      return static_cast<unsigned>(cap < static_cast<long>(hw) ? cap : static_cast<long>(hw));
    }
  }
  return hw;
}

}  // namespace aclab
