// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_BENCH_EXPERIMENT_HPP
#define NLMG_BENCH_EXPERIMENT_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nlmg_bench/run_config.hpp"

namespace nlmg::bench
{

struct TableRow
{
  long N = 0;
  double h = 0.0;
  double delta = 0.0;
  std::string delta_spec;
  std::string strategy;
  double err_inf = 0.0;
  std::optional<double> rate;  // log2(err(2h) / err(h))
  int iters = 0;
  double cpu_s = 0.0;
};

// Assembles the manufactured problem, builds the hierarchy and solves once.
TableRow run_solve(const RunConfig &config);

// Fills in rates for consecutive rows of equal delta_spec.
void fill_rates(std::vector<TableRow> &rows);

struct ReferenceEntry
{
  double err = 0.0;
  int iters = 0;
};

// Published results for one horizon column at N = 2^10..2^13.
struct ReferenceColumn
{
  const char *delta_spec;
  std::array<ReferenceEntry, 4> entries;
};

struct ReferenceTable
{
  const char *name;
  Coarsening strategy;
  int iter_tolerance;
  std::array<ReferenceColumn, 4> columns;
};

// which is "galerkin" or "rediscretize"; "5.1" and "5.2" are accepted aliases.
const ReferenceTable &reference_table(std::string_view which);

inline constexpr double kErrorTolerance = 0.01;  // relative
inline constexpr double kRateTolerance = 0.05;   // around 2

struct RowVerdict
{
  ReferenceEntry expected;
  double err_rel = 0.0;
  bool err_ok = false;
  bool rate_ok = true;
  bool iters_ok = false;

  bool pass() const { return err_ok && rate_ok && iters_ok; }
};

struct TableRun
{
  const ReferenceTable *reference = nullptr;
  std::vector<TableRow> rows;
  std::vector<RowVerdict> verdicts;

  bool pass() const;
};

// Runs the 16 solves of a reference table. base supplies the smoother and
// solver settings; J and delta are overridden per row.
TableRun run_table(std::string_view which, const RunConfig &base, int J_min = 10,
                   int J_max = 13);

}  // namespace nlmg::bench

#endif  // NLMG_BENCH_EXPERIMENT_HPP
