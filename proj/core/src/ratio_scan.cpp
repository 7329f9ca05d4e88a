#include "aclab/ratio_scan.hpp"

#include <ostream>
#include <stdexcept>
#include <thread>

namespace aclab {

namespace {

// Records for members in (lo, hi]; counts seeded by digit-scan counts at lo.
std::vector<RatioRecord> scan_chunk(const ComplementPair& pair, const Int& lo, const Int& hi) {
  std::vector<RatioRecord> out;
  Int count_a = pair.count_a(lo);
  Int count_b = pair.count_b(lo);

  MemberStream a_stream(pair.base(), SetSide::A, count_a);
  MemberStream b_stream(pair.base(), SetSide::B, count_b);

  while (true) {
    const bool take_a = a_stream.value() <= b_stream.value();
    const Int x = take_a ? a_stream.value() : b_stream.value();
    if (x > hi) break;

    RatioRecord rec;
    rec.x = x;
    if (a_stream.value() == x) {
      rec.in_a = true;
      ++count_a;
      a_stream.advance();
    }
    if (b_stream.value() == x) {
      rec.in_b = true;
      ++count_b;
      b_stream.advance();
    }
    rec.count_a = count_a;
    rec.count_b = count_b;
    const Int product = count_a * count_b;
    rec.ratio = Rational(product, x);
    rec.defect = product - x;
    out.push_back(std::move(rec));
  }

  // Counts are flat between members, so the tally must land on the
  // digit-scan counts at the boundary.
  if (count_a != pair.count_a(hi) || count_b != pair.count_b(hi)) {
    throw std::logic_error("ratio scan tally disagrees with digit-scan counts at a chunk boundary");
  }
  return out;
}

}  // namespace

RatioScanResult ratio_scan(const ComplementPair& pair, const Int& limit, unsigned threads) {
  if (limit < 1) throw std::invalid_argument("ratio_scan requires limit >= 1");
  if (threads == 0) threads = thread_budget();

  // Small ranges are not worth the seeding overhead.
  if (limit < 4096) threads = 1;

  std::vector<std::vector<RatioRecord>> chunks(threads);
  if (threads == 1) {
    chunks[0] = scan_chunk(pair, 0, limit);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      const Int lo = limit * t / threads;
      const Int hi = limit * (t + 1) / threads;
      workers.emplace_back([&pair, &chunks, t, lo, hi] { chunks[t] = scan_chunk(pair, lo, hi); });
    }
    for (auto& w : workers) w.join();
  }

  RatioScanResult result;
  result.max_ratio = 0;
  result.argmax = 0;
  const Int a2 = pair.base().product(2);
  for (auto& chunk : chunks) {
    for (auto& rec : chunk) {
      if (rec.x >= a2 && rec.ratio > result.max_ratio) {
        result.max_ratio = rec.ratio;
        result.argmax = rec.x;
      }
      result.records.push_back(std::move(rec));
    }
  }

  // The all-maximal-digit points a_{2k} - 1, verified rather than assumed.
  for (unsigned k = 1;; ++k) {
    const Int point = pair.base().product(2 * k) - 1;
    if (point > limit) break;
    if (pair.defect(point) != 1) {
      throw std::logic_error("defect at a block-top point is not one; counting is broken");
    }
    result.defect_one_points.push_back(point);
  }
  return result;
}

void write_csv(const RatioScanResult& result, std::ostream& os) {
  os << "x,in_A,in_B,count_A,count_B,ratio_num,ratio_den,ratio_decimal,defect\n";
  for (const RatioRecord& rec : result.records) {
    os << rec.x << ',' << (rec.in_a ? 1 : 0) << ',' << (rec.in_b ? 1 : 0) << ',' << rec.count_a << ',' << rec.count_b
       << ',' << numerator(rec.ratio) << ',' << denominator(rec.ratio) << ',' << to_decimal(rec.ratio) << ','
       << rec.defect << '\n';
  }
}

}  // namespace aclab
