// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg_bench/experiment.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "nlmg/hierarchy.hpp"
#include "nlmg/multigrid.hpp"
#include "nlmg/problem.hpp"

namespace nlmg::bench
{

namespace
{

constexpr ReferenceTable kGalerkin{
  "galerkin",
  Coarsening::galerkin,
  3,
  {{
    {"const:1", {{{4.0638e-05, 13}, {1.0169e-05, 13}, {2.5461e-06, 12}, {6.3918e-07, 12}}}},
    {"sqrt_h", {{{3.1010e-05, 21}, {7.7246e-06, 21}, {1.9262e-06, 21}, {4.8200e-07, 21}}}},
    {"5h", {{{3.0396e-05, 22}, {7.5840e-06, 23}, {1.8943e-06, 23}, {4.7244e-07, 23}}}},
    {"h", {{{2.4416e-05, 18}, {6.1057e-06, 18}, {1.5310e-06, 18}, {3.8268e-07, 18}}}},
  }},
};

constexpr ReferenceTable kRediscretized{
  "rediscretize",
  Coarsening::rediscretize,
  5,
  {{
    {"const:1", {{{4.0589e-05, 42}, {1.0132e-05, 40}, {2.5229e-06, 39}, {6.2373e-07, 38}}}},
    {"sqrt_h", {{{3.0999e-05, 56}, {7.7139e-06, 54}, {1.9184e-06, 54}, {4.7520e-07, 53}}}},
    {"5h", {{{3.0393e-05, 54}, {7.5819e-06, 54}, {1.8917e-06, 53}, {4.7021e-07, 52}}}},
    {"h", {{{2.4385e-05, 47}, {6.0749e-06, 47}, {1.4982e-06, 47}, {3.7118e-07, 47}}}},
  }},
};

}  // namespace

TableRow run_solve(const RunConfig &config)
{
  config.validate();
  const ProblemSpec problem = manufactured_example(config.b, config.delta.horizon);
  const int n = static_cast<int>(config.N()) - 1;
  const AssembledSystem sys = assemble_system(problem, n);

  HierarchyOptions options;
  options.strategy = config.strategy;
  options.coarsest_size = config.coarsest_size;
  options.matvec = config.matvec;
  const Hierarchy hier = Hierarchy::build(sys, problem.kernel, options);

  SolveOptions solve_options;
  solve_options.tol = config.tol;
  solve_options.max_cycles = config.max_cycles;
  const SolveResult result = solve(hier, config.smoother, sys.rhs, solve_options);

  TableRow row;
  row.N = config.N();
  row.h = sys.h;
  row.delta = sys.delta;
  row.delta_spec = config.delta.text;
  row.strategy = to_string(config.strategy);
  row.err_inf = max_nodal_error(sys, result.u, problem.exact);
  row.iters = result.report.cycles;
  row.cpu_s = result.report.cpu_seconds;
  return row;
}

void fill_rates(std::vector<TableRow> &rows)
{
  for (std::size_t i = 0; i < rows.size(); ++i)
  {
    rows[i].rate.reset();
    if (i > 0 && rows[i - 1].delta_spec == rows[i].delta_spec && rows[i - 1].N * 2 == rows[i].N &&
        rows[i].err_inf > 0.0)
      rows[i].rate = std::log2(rows[i - 1].err_inf / rows[i].err_inf);
  }
}

const ReferenceTable &reference_table(std::string_view which)
{
  if (which == "5.1" || which == "galerkin")
    return kGalerkin;
  if (which == "5.2" || which == "rediscretize")
    return kRediscretized;
  throw UsageError(fmt::format("unknown table '{}'", which));
}

bool TableRun::pass() const
{
  return std::all_of(verdicts.begin(), verdicts.end(), [](const RowVerdict &v) { return v.pass(); });
}

TableRun run_table(std::string_view which, const RunConfig &base, int J_min, int J_max)
{
  TableRun run;
  run.reference = &reference_table(which);
  if (J_min < 10 || J_max > 13 || J_min > J_max)
    throw UsageError("table rows are defined for N = 2^10..2^13");

  for (const ReferenceColumn &column : run.reference->columns)
    for (int J = J_min; J <= J_max; ++J)
    {
      RunConfig config = base;
      config.J = J;
      config.delta = parse_delta_spec(column.delta_spec);
      config.strategy = run.reference->strategy;
      run.rows.push_back(run_solve(config));
    }
  fill_rates(run.rows);

  std::size_t r = 0;
  for (const ReferenceColumn &column : run.reference->columns)
    for (int J = J_min; J <= J_max; ++J, ++r)
    {
      const TableRow &row = run.rows[r];
      RowVerdict v;
      v.expected = column.entries[J - 10];
      v.err_rel = std::abs(row.err_inf - v.expected.err) / v.expected.err;
      v.err_ok = v.err_rel <= kErrorTolerance;
      if (row.rate)
        v.rate_ok = std::abs(*row.rate - 2.0) <= kRateTolerance;
      v.iters_ok = std::abs(row.iters - v.expected.iters) <= run.reference->iter_tolerance;
      run.verdicts.push_back(v);
    }
  return run;
}

}  // namespace nlmg::bench
