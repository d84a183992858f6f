// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "nlmg/band_matrix.hpp"
#include "nlmg/fft_toeplitz.hpp"
#include "nlmg/stencil.hpp"

namespace
{

// Range(0): grid exponent, range(1): horizon in cells.
nlmg::SymBandToeplitz make_operator(const benchmark::State &state)
{
  const int n = (1 << state.range(0)) - 1;
  const double h = 4.0 / (n + 1);
  const auto st = nlmg::closed_form_stencil(h, static_cast<double>(state.range(1)) * h);
  return nlmg::SymBandToeplitz(n, st.coeffs);
}

std::vector<double> random_input(int n)
{
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(n);
  for (auto &v : x)
    v = dist(rng);
  return x;
}

void BM_MatvecDirect(benchmark::State &state)
{
  const auto A = make_operator(state);
  const auto x = random_input(A.size());
  std::vector<double> y(A.size());
  for (auto _ : state)
  {
    A.multiply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * A.size());
}

void BM_MatvecFft(benchmark::State &state)
{
  const auto A = make_operator(state);
  const nlmg::ToeplitzFftOperator op(A);
  const auto x = random_input(A.size());
  std::vector<double> y(A.size());
  for (auto _ : state)
  {
    op.multiply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * A.size());
}

void matvec_args(benchmark::internal::Benchmark *b)
{
  for (int J : {10, 13, 16})
    for (int cells : {1, 5, 64, 1024})
      if (cells < (1 << J) / 4)
        b->Args({J, cells});
}

}  // namespace

BENCHMARK(BM_MatvecDirect)->Apply(matvec_args);
BENCHMARK(BM_MatvecFft)->Apply(matvec_args);
