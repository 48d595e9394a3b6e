// Serial reference vs OpenMP kernels. Arg 0 selects the flavour (0 serial,
// 1 parallel) so the two rows sit next to each other in the report.

#include <benchmark/benchmark.h>

#include "ordsplit/constructions.hpp"
#include "ordsplit/oracle.hpp"
#include "ordsplit/patterns.hpp"
#include "ordsplit/splitting.hpp"

using namespace ordsplit;

namespace {

Exec flavour(const benchmark::State& s) { return s.range(0) == 0 ? Exec::serial : Exec::parallel; }

const OrderedHypergraph& big_host() {
  static const auto h = random_hypergraph(2048, 4, 200000, 1);
  return h;
}

void BM_EdgeLevels(benchmark::State& s) {
  const auto& h = big_host();
  for (auto _ : s) benchmark::DoNotOptimize(edge_levels(h, 3, flavour(s)));
  s.SetItemsProcessed(static_cast<std::int64_t>(s.iterations() * h.edge_count()));
}
BENCHMARK(BM_EdgeLevels)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& s) {
  const auto& h = big_host();
  for (auto _ : s) benchmark::DoNotOptimize(decompose(h, 3, flavour(s)));
  s.SetItemsProcessed(static_cast<std::int64_t>(s.iterations() * h.edge_count()));
}
BENCHMARK(BM_Decompose)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ContainsMiss(benchmark::State& s) {
  // Crossing-free host: the search has to exhaust every branch.
  static const auto host = ekr_extremal_family(14, 3);
  Edge a{1, 3, 5}, b{2, 4, 6};
  static const auto pattern = OrderedHypergraph::from_edges(6, 3, {a, b});
  for (auto _ : s) benchmark::DoNotOptimize(contains_ordered_pattern(host, pattern, flavour(s)));
}
BENCHMARK(BM_ContainsMiss)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ContainsZigzag(benchmark::State& s) {
  static const auto host = random_hypergraph(60, 3, 3000, 2);
  static const auto pattern = zigzag_path(5, 3);
  for (auto _ : s) benchmark::DoNotOptimize(contains_ordered_pattern(host, pattern, flavour(s)));
}
BENCHMARK(BM_ContainsZigzag)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BruteEx(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(brute_ex_ordered(8, 2, ForbiddenSpec::crossing(), flavour(s)));
}
BENCHMARK(BM_BruteEx)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
