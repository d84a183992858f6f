// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include <benchmark/benchmark.h>

#include "nlmg/hierarchy.hpp"
#include "nlmg/multigrid.hpp"
#include "nlmg/problem.hpp"

namespace
{

// Range(0): grid exponent, range(1): 0 for delta = 5h, 1 for delta = 1.
nlmg::AssembledSystem model(const benchmark::State &state)
{
  const auto horizon = state.range(1) == 0 ? nlmg::HorizonSpec::proportional(5.0)
                                           : nlmg::HorizonSpec::fixed(1.0);
  const auto p = nlmg::manufactured_example(4.0, horizon);
  return nlmg::assemble_system(p, (1 << state.range(0)) - 1);
}

void run_cycles(benchmark::State &state, nlmg::HierarchyOptions options)
{
  const auto sys = model(state);
  const auto hier = nlmg::Hierarchy::build(sys, nlmg::Kernel::constant(), options);
  nlmg::VCycle cycle(hier, {});
  std::vector<double> v(sys.n, 0.0);
  for (auto _ : state)
  {
    cycle.apply(sys.rhs, v);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * sys.n);
}

void BM_VCycleGalerkin(benchmark::State &state)
{
  run_cycles(state, {});
}

void BM_VCycleRediscretizedDirect(benchmark::State &state)
{
  nlmg::HierarchyOptions o;
  o.strategy = nlmg::Coarsening::rediscretize;
  run_cycles(state, o);
}

void BM_VCycleRediscretizedFft(benchmark::State &state)
{
  nlmg::HierarchyOptions o;
  o.strategy = nlmg::Coarsening::rediscretize;
  o.matvec = nlmg::MatvecPath::fft;
  run_cycles(state, o);
}

void BM_HierarchyGalerkin(benchmark::State &state)
{
  const auto sys = model(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(nlmg::Hierarchy::build(sys, nlmg::Kernel::constant()).depth());
}

void cycle_args(benchmark::internal::Benchmark *b)
{
  for (int J : {10, 12, 14})
    for (int which : {0, 1})
      b->Args({J, which});
}

}  // namespace

BENCHMARK(BM_VCycleGalerkin)->Apply(cycle_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_VCycleRediscretizedDirect)->Apply(cycle_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_VCycleRediscretizedFft)->Apply(cycle_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_HierarchyGalerkin)->Apply(cycle_args)->Unit(benchmark::kMillisecond);
