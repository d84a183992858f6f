// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg_bench/checks.hpp"

#include <cmath>

#include <fmt/format.h>

#include "nlmg/cost_model.hpp"
#include "nlmg/hierarchy.hpp"
#include "nlmg/stencil.hpp"

namespace nlmg::bench
{

namespace
{

using analysis::AnalysisReport;
using analysis::CheckRecord;
using analysis::kBoundSlack;
using analysis::ModelConfig;

std::vector<DeltaSpec> deltas_or(const CheckOptions &o, std::initializer_list<const char *> fallback)
{
  if (o.delta)
    return {*o.delta};
  std::vector<DeltaSpec> out;
  for (const char *spec : fallback)
    out.push_back(parse_delta_spec(spec));
  return out;
}

std::vector<int> exponents_or(const CheckOptions &o, std::initializer_list<int> fallback)
{
  if (o.J)
    return {*o.J};
  return fallback;
}

std::string label(const DeltaSpec &d, double b, int J)
{
  return fmt::format("b={} delta={} J={}", b, d.text, J);
}

CheckRecord upper(std::string check, std::string config, double measured, double bound)
{
  return {std::move(check), std::move(config), measured, bound, "<=",
          measured <= bound + kBoundSlack};
}

void check_tgm(const CheckOptions &o, AnalysisReport &report)
{
  const double omega = o.omega.value_or(1.0 / 3.0);
  const double bound = analysis::tgm_bound(omega);
  const double local = analysis::tgm_bound_local(omega);
  for (const auto &d : deltas_or(o, {"const:1", "sqrt_h", "h", "3h", "5h"}))
    for (int J : exponents_or(o, {8, 9, 10}))
    {
      const ModelConfig config{o.b, d.horizon, J};
      const double factor = analysis::measured_tgm_factor(config, omega);
      const std::string where = fmt::format("{} omega={:.6g}", label(d, o.b, J), omega);
      report.add(upper("tgm", where, factor, bound));
      if (horizon_ratio(config.delta(), config.h()).R <= 1.0)
        report.add(upper("tgm_local", where, factor, local));
    }

  // Every level of a delta = 3h Galerkin hierarchy.
  if (!o.delta)
  {
    const int J = o.J.value_or(8);
    const ModelConfig config{o.b, HorizonSpec::proportional(3.0), J};
    const Hierarchy hier = Hierarchy::galerkin(config.matrix(), config.h());
    const auto factors = analysis::per_level_tgm_factors(hier, omega);
    for (std::size_t l = 0; l < factors.size(); ++l)
      report.add(upper("tgm_level",
                       fmt::format("b={} delta=3h J={} level m={} omega={:.6g}", o.b, J,
                                   hier.level(l).m, omega),
                       factors[l], bound));
  }
}

void check_vcycle(const CheckOptions &o, AnalysisReport &report)
{
  const double omega = o.omega.value_or(0.5);
  std::vector<int> sweeps = o.sweeps ? std::vector<int>{*o.sweeps} : std::vector<int>{1, 2};
  for (const auto &d : deltas_or(o, {"h"}))
    for (int l : sweeps)
      for (int J : exponents_or(o, {5, 6, 7, 8, 9}))
      {
        const ModelConfig config{o.b, d.horizon, J};
        const double factor = analysis::measured_vcycle_contraction(config, l, omega);
        report.add(upper("vcycle",
                         fmt::format("{} l={} omega={:.6g}", label(d, o.b, J), l, omega), factor,
                         analysis::vcycle_bound(l, omega)));
      }
}

void check_lambda_min(const CheckOptions &o, AnalysisReport &report)
{
  for (const auto &d : deltas_or(o, {"const:1", "sqrt_h", "h", "5h"}))
    for (int J : exponents_or(o, {7, 8, 9}))
    {
      const auto r = analysis::verify_lambda_min(ModelConfig{o.b, d.horizon, J});
      report.add({"lambda_min", label(d, o.b, J), r.lambda_min, r.bound, ">=", r.pass});
    }
}

void check_cond(const CheckOptions &o, AnalysisReport &report)
{
  const std::vector<int> Js = o.J ? std::vector<int>{*o.J - 2, *o.J - 1, *o.J}
                                  : std::vector<int>{7, 8, 9, 10, 11};
  for (const auto &d : deltas_or(o, {"const:1", "sqrt_h", "h"}))
  {
    const auto s = analysis::verify_condition_scaling(o.b, d.horizon, Js);
    const std::string where = fmt::format("b={} delta={} J={}..{}", o.b, d.text, Js.front(), Js.back());
    if (d.horizon.beta == 0.0)
      report.add({"cond_ratio", where, s.max_ratio, 1.5, "<=", s.pass});
    else
      report.add({"cond_slope", where, s.slope, s.expected_slope, "within 0.2 of", s.pass});
  }
}

void check_jacobi(const CheckOptions &o, AnalysisReport &report)
{
  for (const auto &d : deltas_or(o, {"const:1", "5h", "h"}))
    for (int J : exponents_or(o, {9}))
    {
      const ModelConfig config{o.b, d.horizon, J};
      const Hierarchy hier = Hierarchy::galerkin(config.matrix(), config.h());
      for (const auto &level : analysis::verify_jacobi_bound(hier))
        report.add({"jacobi_bound",
                    fmt::format("{} level m={} n={} a1={:.6g}", label(d, o.b, J), level.m, level.n,
                                level.first_offdiag),
                    level.lambda_max, level.bound, level.bound == 2.0 ? "in [1, 2]" : "in [1, 3)",
                    level.pass});
    }
}

void check_dilated_sum(const CheckOptions &o, AnalysisReport &report)
{
  std::vector<int> terms;
  if (o.terms)
    terms = {*o.terms};
  else
    for (int n = 1; n <= 16; ++n)
      terms.push_back(n);
  const std::vector<int> dims = o.dim ? std::vector<int>{*o.dim} : std::vector<int>{8, 32, 128};
  for (int n : terms)
    for (int dim : dims)
    {
      const auto r = analysis::verify_dilated_sum(n, dim);
      const std::string where = fmt::format("n={} dim={}", n, dim);
      report.add({"dilated_sum_eig", where, r.lambda_min, 0.0, ">", r.lambda_min > 0.0});
      report.add({"dilated_sum_symbol", where, r.g_min, -1e-12, ">=", r.g_min >= -1e-12});
    }
}

void check_cost(const CheckOptions &o, AnalysisReport &report)
{
  const SmootherParams params;
  const int J_max = o.J.value_or(13);
  for (const auto &d : deltas_or(o, {"5h"}))
  {
    std::vector<double> Ns, flops;
    for (int J = J_max - 3; J <= J_max; ++J)
    {
      const ModelConfig config{o.b, d.horizon, J};
      const Hierarchy hier = Hierarchy::galerkin(config.matrix(), config.h());
      const CycleCost cost = estimate_cycle_cost(hier, params);
      Ns.push_back(static_cast<double>(1L << J));
      flops.push_back(cost.flops_per_cycle);
      report.add(upper("cost_storage", label(d, o.b, J), cost.storage_ratio(), 2.0));
    }
    const double slope = loglog_slope(Ns, flops);
    report.add({"cost_slope", fmt::format("b={} delta={} J={}..{}", o.b, d.text, J_max - 3, J_max),
                slope, 1.0, "within 0.15 of", std::abs(slope - 1.0) <= 0.15});
  }
}

struct Entry
{
  const char *name;
  void (*run)(const CheckOptions &, AnalysisReport &);
};

constexpr Entry kChecks[] = {
  {"tgm", check_tgm},
  {"vcycle", check_vcycle},
  {"lambda_min", check_lambda_min},
  {"cond", check_cond},
  {"jacobi_bound", check_jacobi},
  {"dilated_sum", check_dilated_sum},
  {"cost", check_cost},
};

}  // namespace

const std::vector<std::string> &known_checks()
{
  static const std::vector<std::string> names = []
  {
    std::vector<std::string> v;
    for (const auto &e : kChecks)
      v.emplace_back(e.name);
    return v;
  }();
  return names;
}

void run_check(std::string_view name, const CheckOptions &options, AnalysisReport &report)
{
  if (name == "lemma310")
    name = "dilated_sum";
  for (const auto &e : kChecks)
    if (name == e.name)
    {
      e.run(options, report);
      return;
    }
  throw UsageError(fmt::format("unknown check '{}'", name));
}

}  // namespace nlmg::bench
