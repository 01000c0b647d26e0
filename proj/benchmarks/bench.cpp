#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "quadwalk/analytics.hpp"
#include "quadwalk/enumeration.hpp"
#include "quadwalk/primality.hpp"
#include "quadwalk/ring.hpp"
#include "quadwalk/walks.hpp"

using namespace quadwalk;

namespace {

void BM_classify_grid(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    std::uint64_t primes = 0;
    for (std::int64_t a = -n; a <= n; ++a)
      for (std::int64_t b = -n; b <= n; ++b)
        if (classify(QuadInt{a, b, RingId::zsqrt2()}).is_prime()) ++primes;
    benchmark::DoNotOptimize(primes);
  }
  state.SetItemsProcessed(state.iterations() * (2 * n + 1) * (2 * n + 1));
}
BENCHMARK(BM_classify_grid)->Arg(100)->Arg(300);

void BM_is_rational_prime(benchmark::State& state) {
  std::uint64_t p = 1'000'000'007ull;
  for (auto _ : state) benchmark::DoNotOptimize(is_rational_prime(p));
}
BENCHMARK(BM_is_rational_prime);

void BM_represent_prime(benchmark::State& state) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 3; ps.size() < 256; p += 2) {
    std::uint64_t m = p % 8;
    if ((m == 1 || m == 7) && is_rational_prime(p)) ps.push_back(p);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(represent_prime(ps[i]));
    i = (i + 1) % ps.size();
  }
}
BENCHMARK(BM_represent_prime);

void BM_disk_enumeration(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto pts = prime_points_in_region(RingId::gauss(), Disk{r});
    benchmark::DoNotOptimize(pts.size());
  }
}
BENCHMARK(BM_disk_enumeration)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_neighbor_queries(benchmark::State& state) {
  WalkGraph g = build_walk_graph(RingId::zsqrt2(), Rect{0, 500, 0, 375}, StepBound{8});
  std::vector<std::uint32_t> out;
  std::uint32_t id = 0;
  for (auto _ : state) {
    g.neighbor_ids(id, out);
    benchmark::DoNotOptimize(out.size());
    id = (id + 1) % g.points().size();
  }
}
BENCHMARK(BM_neighbor_queries);

void BM_component_bfs(benchmark::State& state) {
  WalkGraph g = build_walk_graph(RingId::zsqrt2(), Rect{0, 1000, 0, 750}, StepBound{8});
  for (auto _ : state) {
    auto s = component_of(g, QuadInt{0, 1, RingId::zsqrt2()});
    benchmark::DoNotOptimize(s.size);
  }
}
BENCHMARK(BM_component_bfs)->Unit(benchmark::kMillisecond);

void BM_representable_count(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(representable_count(n));
}
BENCHMARK(BM_representable_count)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_moat_bound_report(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(moat_bound_report(10, 5, 1e6).ratio);
}
BENCHMARK(BM_moat_bound_report);

}  // namespace

BENCHMARK_MAIN();
