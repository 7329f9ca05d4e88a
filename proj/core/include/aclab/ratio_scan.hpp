#pragma once

#include <iosfwd>
#include <vector>

#include "aclab/complement.hpp"
#include "aclab/numeric.hpp"

namespace aclab {

/// One member of A union B in a scan, with the exact counting data at it.
struct RatioRecord {
  Int x;
  bool in_a = false;
  bool in_b = false;
  Int count_a;
  Int count_b;
  Rational ratio;  // count_a * count_b / x, reduced
  Int defect;      // count_a * count_b - x
};

struct RatioScanResult {
  std::vector<RatioRecord> records;  // ascending x

  // Largest ratio among records with x >= a_2, and the smallest x attaining
  // it. Records below a_2 are emitted but excluded here: every base has
  // ratio 2 at x = 1 (and at x = a_1 when b_1 = 2), a ceiling that carries
  // no information about the base. From a_2 on, the block maximality bounds
  // apply and the maximum lands on a y_k or z_k. Zero when the scan range
  // holds no such record.
  Rational max_ratio;
  Int argmax;

  // The points a_{2k} - 1 <= limit (k >= 1), each verified from its counts
  // to have defect exactly one. These all lie outside A union B (every digit
  // is maximal), so they never appear among the records.
  std::vector<Int> defect_one_points;
};

/// Walks every x in (A union B), 1 <= x <= limit, in ascending order. The
/// counting functions only change at members, so these x carry all ratio
/// information: between members the ratio just decays as 1/x. Counts are
/// maintained incrementally from two member streams; no per-x digit scans.
///
/// The range is partitioned across `threads` workers (0 picks the budget from
/// the environment); each worker seeds its counts with one digit-scan count
/// at the chunk boundary and the chunks concatenate in order, so the result
/// is identical for every thread count. Each chunk re-derives the counts at
/// its upper boundary by digit scan and requires them to match the
/// incremental tally, a spot check that no member was skipped and that the
/// counts really are flat between members.
RatioScanResult ratio_scan(const ComplementPair& pair, const Int& limit, unsigned threads = 0);

/// CSV with the exact header
/// x,in_A,in_B,count_A,count_B,ratio_num,ratio_den,ratio_decimal,defect
/// one row per record, booleans as 0/1, ratio_decimal to 12 significant
/// digits. Byte-deterministic for fixed input.
void write_csv(const RatioScanResult& result, std::ostream& os);

}  // namespace aclab
