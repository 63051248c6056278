// Compares the serial reference search against the OpenMP kernel on
// full-scan workloads (identities that survive, so no early exit).

#include <benchmark/benchmark.h>

#include "placid/checks.hpp"
#include "placid/identities.hpp"
#include "placid/search.hpp"

namespace {

using namespace placid;

void BM_check_sylv_serial(benchmark::State& state) {
  Identity id = parse_identity("xyxy=yxxy");
  SearchBounds b{3, static_cast<int>(state.range(0)), true};
  for (auto _ : state) {
    Verdict v = check_identity(MonoidId::sylv, id, b, /*jobs=*/1);
    benchmark::DoNotOptimize(v.substitutions_tested);
  }
}
BENCHMARK(BM_check_sylv_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_check_sylv_parallel(benchmark::State& state) {
  Identity id = parse_identity("xyxy=yxxy");
  SearchBounds b{3, static_cast<int>(state.range(0)), true};
  for (auto _ : state) {
    Verdict v = check_identity(MonoidId::sylv, id, b, /*jobs=*/0);
    benchmark::DoNotOptimize(v.substitutions_tested);
  }
}
BENCHMARK(BM_check_sylv_parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_check_baxt_serial(benchmark::State& state) {
  Identity id = parse_identity("xyxyxy=xyyxxy");
  SearchBounds b{3, 3, true};
  for (auto _ : state) {
    Verdict v = check_identity(MonoidId::baxt, id, b, /*jobs=*/1);
    benchmark::DoNotOptimize(v.substitutions_tested);
  }
}
BENCHMARK(BM_check_baxt_serial)->Unit(benchmark::kMillisecond);

void BM_check_baxt_parallel(benchmark::State& state) {
  Identity id = parse_identity("xyxyxy=xyyxxy");
  SearchBounds b{3, 3, true};
  for (auto _ : state) {
    Verdict v = check_identity(MonoidId::baxt, id, b, /*jobs=*/0);
    benchmark::DoNotOptimize(v.substitutions_tested);
  }
}
BENCHMARK(BM_check_baxt_parallel)->Unit(benchmark::kMillisecond);

void BM_plac3_pq_serial(benchmark::State& state) {
  SearchBounds b{3, 2, true};
  for (auto _ : state) {
    Verdict v = check_plac3_pq_identity(b, /*jobs=*/1);
    benchmark::DoNotOptimize(v.substitutions_tested);
  }
}
BENCHMARK(BM_plac3_pq_serial)->Unit(benchmark::kMillisecond);

void BM_plac3_pq_parallel(benchmark::State& state) {
  SearchBounds b{3, 2, true};
  for (auto _ : state) {
    Verdict v = check_plac3_pq_identity(b, /*jobs=*/0);
    benchmark::DoNotOptimize(v.substitutions_tested);
  }
}
BENCHMARK(BM_plac3_pq_parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
