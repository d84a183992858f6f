// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_COST_MODEL_HPP
#define NLMG_COST_MODEL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nlmg/hierarchy.hpp"
#include "nlmg/multigrid.hpp"

namespace nlmg
{

struct LevelCost
{
  int m = 0;
  int n = 0;
  int halfwidth = 0;
  bool fft = false;
  double matvec_flops = 0.0;
  double cycle_flops = 0.0;  // work on this level during one V-cycle
  std::size_t stored = 0;    // operator coefficients held
};

struct CycleCost
{
  int n_finest = 0;
  std::vector<LevelCost> levels;
  double flops_per_cycle = 0.0;
  std::size_t storage = 0;
  std::size_t finest_storage = 0;

  double storage_ratio() const;
};

CycleCost estimate_cycle_cost(const Hierarchy &hierarchy, const SmootherParams &params);

// Least-squares slope of log y against log x.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace nlmg

#endif  // NLMG_COST_MODEL_HPP
