// Micro-benchmarks for the hot paths: the condition checker, block
// extraction, quotient construction, and the exhaustive enumerators.

#include <benchmark/benchmark.h>

#include "ptol/enumerate.hpp"
#include "ptol/io.hpp"
#include "ptol/poset.hpp"
#include "ptol/quotient.hpp"
#include "ptol/refinement.hpp"
#include "ptol/relation.hpp"

namespace {

using namespace ptol;

// Bounded six-element poset with two incomparable middle pairs.
const Poset& bench_poset() {
  static const Poset p = parse_poset(
      "elements: 0 a b c d 1\n"
      "covers: 0<a 0<b a<c a<d b<c b<d c<1 d<1\n",
      "<bench>");
  return p;
}

Relation bench_relation(const char* cliques) {
  return parse_relation(std::string("cliques: ") + cliques, bench_poset(),
                        "<bench>")
      .relation;
}

void bm_is_tolerance(benchmark::State& state) {
  const Poset& p = bench_poset();
  const Relation t = bench_relation("{0,a,b,c} {b,c,d,1}");
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_tolerance(p, t));
  }
}
BENCHMARK(bm_is_tolerance);

void bm_tolerance_violation(benchmark::State& state) {
  const Poset& p = bench_poset();
  // Intersection of two tolerances; fails the bounded-middle condition, so
  // the checker walks conditions 1-2 in full before finding the witness.
  const Relation t = bench_relation("{0,a,b} {a,c} {b,d} {c,d,1}");
  for (auto _ : state) {
    benchmark::DoNotOptimize(tolerance_violation(p, t));
  }
}
BENCHMARK(bm_tolerance_violation);

void bm_blocks(benchmark::State& state) {
  const Relation t = bench_relation("{0,a,b,c} {b,c,d,1}");
  for (auto _ : state) {
    benchmark::DoNotOptimize(blocks(t));
  }
}
BENCHMARK(bm_blocks);

void bm_quotient_poset(benchmark::State& state) {
  const Poset& p = bench_poset();
  const Relation t = bench_relation("{0,a} {b,c} {d,1}");
  for (auto _ : state) {
    benchmark::DoNotOptimize(quotient_poset(p, t));
  }
}
BENCHMARK(bm_quotient_poset);

void bm_refinement_analysis(benchmark::State& state) {
  const Poset& p = bench_poset();
  const Relation s = bench_relation("{0,a} {b} {c} {d,1}");
  const Relation t = bench_relation("{0,a} {b,c} {d,1}");
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_refinement(p, s, t));
  }
}
BENCHMARK(bm_refinement_analysis);

void bm_all_tolerances(benchmark::State& state) {
  const Poset& p = bench_poset();
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_tolerances(p));
  }
}
BENCHMARK(bm_all_tolerances);

void bm_all_posets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_posets(n));
  }
}
BENCHMARK(bm_all_posets)->Arg(4)->Arg(5);

void bm_verify_sweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_theorems(n));
  }
}
BENCHMARK(bm_verify_sweep)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
