#include <benchmark/benchmark.h>

#include "holo/delta.hpp"
#include "holo/holomorph.hpp"
#include "holo/tgroup.hpp"

using namespace holo;

namespace {

ClassTwoPresentation pick(int which, unsigned p)
{
  switch (which) {
  case 0: return preset_gp(p);
  case 1: return preset_hp(p);
  default: return preset_free(p, 2);
  }
}

void set_label(benchmark::State &state, const Group &G)
{ state.SetLabel("|G| = " + std::to_string(G.order())); }

} // namespace

static void BM_BuildGroup(benchmark::State &state)
{
  auto pres = pick(state.range(0), state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_group(pres));
}
BENCHMARK(BM_BuildGroup)->Args({0, 3})->Args({0, 5})->Args({1, 7})->Args({2, 5});

static void BM_AutomorphismGroup(benchmark::State &state)
{
  Group G = build_group(pick(state.range(0), state.range(1)));
  set_label(state, G);
  for (auto _ : state)
    benchmark::DoNotOptimize(automorphism_group(G).order());
}
BENCHMARK(BM_AutomorphismGroup)->Args({0, 3})->Args({0, 5})->Args({1, 7})->Args({2, 5});

static void BM_GenericGammas(benchmark::State &state)
{
  Group G = build_group(pick(state.range(0), state.range(1)));
  auto A = automorphism_group(G);
  A.elements();
  set_label(state, G);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_gammas_generic(G, A).size());
}
BENCHMARK(BM_GenericGammas)->Args({0, 3})->Args({0, 5})->Args({1, 5})->Args({2, 5});

static void BM_DeltaEnumeration(benchmark::State &state)
{
  Group G = build_group(pick(state.range(0), state.range(1)));
  auto A = automorphism_group(G);
  set_label(state, G);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_deltas(G, A).count);
}
BENCHMARK(BM_DeltaEnumeration)->Args({0, 3})->Args({0, 5})->Args({1, 5})->Args({2, 5});

static void BM_TGroup(benchmark::State &state)
{
  Group G = build_group(pick(state.range(0), state.range(1)));
  auto A = automorphism_group(G);
  std::vector<GammaMap> hc;
  for (auto &N : jc_set(G, A))
    if (N.iso_to_G)
      hc.push_back(N.gamma);
  set_label(state, G);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_t_group(G, A, hc).order());
}
BENCHMARK(BM_TGroup)->Args({0, 3})->Args({0, 5})->Args({1, 5})->Args({2, 5});

static void BM_SymmetricDeltaSpace(benchmark::State &state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(symmetric_delta_space(state.range(0), 3).dimension);
}
BENCHMARK(BM_SymmetricDeltaSpace)->Arg(2)->Arg(4)->Arg(5);
BENCHMARK_MAIN();
