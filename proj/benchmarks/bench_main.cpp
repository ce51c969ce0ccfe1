#include <benchmark/benchmark.h>

#include "latq/claims.hpp"
#include "latq/congruence.hpp"
#include "latq/generate.hpp"

namespace {

using namespace latq;

void BM_GenerateCorpus(benchmark::State& state) {
  for (auto _ : state) {
    auto corpus = distributive_lattices_up_to(int(state.range(0)));
    benchmark::DoNotOptimize(corpus.size());
  }
}
BENCHMARK(BM_GenerateCorpus)->Arg(6)->Arg(7)->Arg(8)->Arg(9);

void BM_Theta(benchmark::State& state) {
  auto corpus = distributive_lattices_up_to(int(state.range(0)));
  for (auto _ : state) {
    long classes = 0;
    for (const Lattice& l : corpus)
      for (const Derivation& d : enumerate_derivations(l))
        for (const Ideal& i : enumerate_ideals(l)) {
          if (is_trivial(l, i)) continue;
          classes += theta(l, d, i).num_classes();
        }
    benchmark::DoNotOptimize(classes);
  }
}
BENCHMARK(BM_Theta)->Arg(6)->Arg(7);

void BM_CongruenceLattice(benchmark::State& state) {
  auto corpus = distributive_lattices_up_to(int(state.range(0)));
  for (auto _ : state) {
    long count = 0;
    for (const Lattice& l : corpus) count += long(enumerate_congruences(l).size());
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CongruenceLattice)->Arg(6)->Arg(7);

void BM_VerifySweep(benchmark::State& state) {
  for (auto _ : state) {
    VerifyOptions opt;
    opt.max_size = int(state.range(0));
    VerifyReport r = run_verify(opt);
    benchmark::DoNotOptimize(r.scenarios);
  }
}
BENCHMARK(BM_VerifySweep)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
