#include <benchmark/benchmark.h>

#include "psylow/counting.hpp"
#include "psylow/element_table.hpp"
#include "psylow/group_spec.hpp"
#include "psylow/hallpoly.hpp"
#include "psylow/perm_group.hpp"

namespace {

using namespace psylow;

void bm_bsgs_symmetric7(benchmark::State& state) {
  GroupSpec spec = parse_spec("Symmetric(7)");
  for (auto _ : state) {
    PermGroup g = build_group(spec);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(bm_bsgs_symmetric7);

void bm_enumerate_gl2_7(benchmark::State& state) {
  GroupSpec spec = parse_spec("GL2(7)");
  for (auto _ : state) {
    ElementTable t = ElementTable::enumerate(build_group(spec));
    benchmark::DoNotOptimize(t.size());
  }
}
BENCHMARK(bm_enumerate_gl2_7);

void bm_profile_abelianp(benchmark::State& state) {
  GroupSpec spec = parse_spec("AbelianP(3,[2,1,1])");
  for (auto _ : state) {
    // fresh table each round so the profile memo cannot short-circuit
    ElementTable t = ElementTable::enumerate(build_group(spec));
    benchmark::DoNotOptimize(count_profile(t, 3)->per_a.back().count);
  }
}
BENCHMARK(bm_profile_abelianp);

void bm_count_symmetric6_p2(benchmark::State& state) {
  GroupSpec spec = parse_spec("Symmetric(6)");
  for (auto _ : state) {
    ElementTable t = ElementTable::enumerate(build_group(spec));
    benchmark::DoNotOptimize(count_subgroups_of_order(t, 2, 2).count);
  }
}
BENCHMARK(bm_count_symmetric6_p2);

void bm_hall_formula(benchmark::State& state) {
  Partition lam = Partition::parse("[4,3,2,1]");
  for (auto _ : state) {
    BigInt total = 0;
    for (unsigned a = 0; a <= 10; ++a) total += hall_count_order(lam, a, 3);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(bm_hall_formula);

}  // namespace

BENCHMARK_MAIN();
