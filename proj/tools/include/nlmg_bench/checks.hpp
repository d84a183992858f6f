// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_BENCH_CHECKS_HPP
#define NLMG_BENCH_CHECKS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlmg/analysis.hpp"
#include "nlmg_bench/run_config.hpp"

namespace nlmg::bench
{

// Unset fields fall back to a per-check sweep of configurations.
struct CheckOptions
{
  double b = 4.0;
  std::optional<double> omega;
  std::optional<int> J;
  std::optional<DeltaSpec> delta;
  std::optional<int> sweeps;  // V-cycle pre and post sweeps
  std::optional<int> terms;   // number of dilated Laplacians
  std::optional<int> dim;
};

const std::vector<std::string> &known_checks();

// Appends the records of one named check. Unknown names raise UsageError.
void run_check(std::string_view name, const CheckOptions &options,
               analysis::AnalysisReport &report);

}  // namespace nlmg::bench

#endif  // NLMG_BENCH_CHECKS_HPP
