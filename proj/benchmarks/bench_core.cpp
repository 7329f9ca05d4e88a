#include <benchmark/benchmark.h>

#include "aclab/complement.hpp"
#include "aclab/digits.hpp"
#include "aclab/oracle.hpp"
#include "aclab/ratio_scan.hpp"

namespace {

using aclab::BaseSequence;
using aclab::BaseSpec;
using aclab::ComplementPair;
using aclab::Int;

BaseSpec spec_for(int id) {
  switch (id) {
    case 0: return BaseSpec::uniform(2);
    case 1: return BaseSpec::explicit_list({Int(2), Int(3)});
    default: return BaseSpec::thm12({Int(2), Int(4)}, Int(9));
  }
}

void BM_Encode(benchmark::State& state) {
  BaseSequence base(spec_for(static_cast<int>(state.range(0))));
  Int m = 987654321;
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode(base, m));
  }
}
BENCHMARK(BM_Encode)->Arg(0)->Arg(1)->Arg(2);

// Digit-scan counting at a fixed large argument.
void BM_CountScan(benchmark::State& state) {
  const ComplementPair pair{BaseSequence(spec_for(static_cast<int>(state.range(0))))};
  const Int x = 987654321;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pair.count_a(x));
  }
}
BENCHMARK(BM_CountScan)->Arg(0)->Arg(1)->Arg(2);

// The same count by brute-force enumeration, at a much smaller argument;
// the gap against BM_CountScan is the point of the digit scan.
void BM_CountEnumerated(benchmark::State& state) {
  BaseSequence base(spec_for(static_cast<int>(state.range(0))));
  const Int x = 100000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(aclab::oracle_counts(base, x));
  }
}
BENCHMARK(BM_CountEnumerated)->Arg(0)->Arg(1)->Arg(2);

void BM_RatioScan(benchmark::State& state) {
  const ComplementPair pair{BaseSequence(BaseSpec::uniform(2))};
  const Int limit = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(aclab::ratio_scan(pair, limit, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RatioScan)->Arg(10000)->Arg(100000);

void BM_MemberStream(benchmark::State& state) {
  const BaseSequence base{BaseSpec::uniform(2)};
  for (auto _ : state) {
    aclab::MemberStream stream(base, aclab::SetSide::A);
    for (int i = 0; i < 4096; ++i) stream.advance();
    benchmark::DoNotOptimize(stream.value());
  }
  state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_MemberStream);

}  // namespace

BENCHMARK_MAIN();
