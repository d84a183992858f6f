// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_BENCH_ORACLE_HPP
#define NLMG_BENCH_ORACLE_HPP

#include <span>
#include <string>
#include <vector>

namespace nlmg::bench
{

struct OracleRow
{
  int k = 0;
  double closed = 0.0;
  double oracle = 0.0;
  double rel_diff = 0.0;  // relative to the largest closed-form entry
};

struct OracleResult
{
  std::string title;
  std::vector<OracleRow> rows;
  double max_rel_diff = 0.0;
  double tolerance = 0.0;

  bool pass() const { return max_rel_diff <= tolerance; }
};

// Closed-form stencil against hat-function quadrature at h = 1, delta = R.
OracleResult stencil_oracle(double R, double tolerance = 1e-10);

// Closed-form coarsening against 8^(k-1) times the interior row of repeated
// Galerkin products on a long Toeplitz matrix.
OracleResult coarsen_oracle(std::span<const double> band, int k, double tolerance = 1e-12);

std::string render(const OracleResult &result);

}  // namespace nlmg::bench

#endif  // NLMG_BENCH_ORACLE_HPP
