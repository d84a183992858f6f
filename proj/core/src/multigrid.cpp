// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg/multigrid.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <numeric>

#include "nlmg/error.hpp"

namespace nlmg
{

namespace
{

double norm2(std::span<const double> x)
{
  double s = 0.0;
  for (double v : x)
    s += v * v;
  return std::sqrt(s);
}

void check_length(std::size_t got, int want)
{
  if (got != static_cast<std::size_t>(want))
    throw InvalidArgument("vector length does not match the finest level");
}

void smooth(const Level &level, std::span<double> v, std::span<const double> f, double omega,
            std::span<double> scratch)
{
  level.op.multiply(v, scratch);
  const double *dinv = level.inv_diagonal.data();
  for (int i = 0; i < level.n; ++i)
    v[i] += omega * dinv[i] * (f[i] - scratch[i]);
}

}  // namespace

void SmootherParams::validate() const
{
  auto ok = [](double w) { return w > 0.0 && w < 2.0; };
  if (!ok(omega_pre) || !ok(omega_post))
    throw InvalidArgument("Jacobi weights must lie in (0, 2)");
  if (pre_sweeps < 0 || post_sweeps < 0)
    throw InvalidArgument("sweep counts must be non-negative");
}

void jacobi_sweep(const Level &level, std::span<double> v, std::span<const double> f, double omega)
{
  if (static_cast<int>(v.size()) != level.n || static_cast<int>(f.size()) != level.n)
    throw InvalidArgument("vector length does not match the level");
  std::vector<double> scratch(static_cast<std::size_t>(level.n));
  smooth(level, v, f, omega, scratch);
}

VCycle::VCycle(const Hierarchy &hierarchy, SmootherParams params)
  : hierarchy_(&hierarchy), params_(params)
{
  params_.validate();
  const std::size_t depth = hierarchy.depth();
  scratch_.resize(depth);
  coarse_rhs_.resize(depth);
  coarse_sol_.resize(depth);
  for (std::size_t l = 0; l < depth; ++l)
  {
    scratch_[l].resize(hierarchy.level(l).n);
    if (l + 1 < depth)
    {
      coarse_rhs_[l].resize(hierarchy.level(l + 1).n);
      coarse_sol_[l].resize(hierarchy.level(l + 1).n);
    }
  }
}

void VCycle::apply(std::span<const double> f, std::span<double> v)
{
  check_length(f.size(), hierarchy_->finest().n);
  check_length(v.size(), hierarchy_->finest().n);
  cycle(0, f, v);
}

void VCycle::cycle(std::size_t l, std::span<const double> f, std::span<double> v)
{
  const Hierarchy &hier = *hierarchy_;
  if (l + 1 == hier.depth())
  {
    hier.coarse_solve(f, v);
    return;
  }

  const Level &level = hier.level(l);
  std::span<double> work = scratch_[l];
  for (int k = 0; k < params_.pre_sweeps; ++k)
    smooth(level, v, f, params_.omega_pre, work);

  level.op.multiply(v, work);
  for (int i = 0; i < level.n; ++i)
    work[i] = f[i] - work[i];

  std::vector<double> &fc = coarse_rhs_[l];
  std::vector<double> &vc = coarse_sol_[l];
  const int nc = static_cast<int>(fc.size());
  for (int I = 0; I < nc; ++I)
    fc[I] = 0.25 * work[2 * I] + 0.5 * work[2 * I + 1] + 0.25 * work[2 * I + 2];
  std::fill(vc.begin(), vc.end(), 0.0);
  cycle(l + 1, fc, vc);
  for (int I = 0; I < nc; ++I)
  {
    v[2 * I] += 0.5 * vc[I];
    v[2 * I + 1] += vc[I];
    v[2 * I + 2] += 0.5 * vc[I];
  }

  for (int k = 0; k < params_.post_sweeps; ++k)
    smooth(level, v, f, params_.omega_post, work);
}

std::vector<double> v_cycle(const Hierarchy &hierarchy, const SmootherParams &params,
                            std::span<const double> f, std::span<const double> v0)
{
  VCycle vc(hierarchy, params);
  std::vector<double> v(v0.begin(), v0.end());
  vc.apply(f, v);
  return v;
}

SolveResult solve(const Hierarchy &hierarchy, const SmootherParams &params,
                  std::span<const double> f, const SolveOptions &options)
{
  if (!(options.tol > 0.0))
    throw InvalidArgument("tolerance must be positive");
  if (options.max_cycles < 1)
    throw InvalidArgument("cycle limit must be positive");
  const int n = hierarchy.finest().n;
  check_length(f.size(), n);

  const std::clock_t start = std::clock();
  SolveResult out;
  out.u.assign(static_cast<std::size_t>(n), 0.0);
  const double r0 = norm2(f);
  if (!std::isfinite(r0))
    throw InvalidArgument("right-hand side is not finite");
  if (r0 == 0.0)
    return out;

  VCycle vc(hierarchy, params);
  std::vector<double> r(static_cast<std::size_t>(n));
  double ratio = 1.0;
  while (out.report.cycles < options.max_cycles)
  {
    vc.apply(f, out.u);
    ++out.report.cycles;
    hierarchy.finest().op.multiply(out.u, r);
    for (int i = 0; i < n; ++i)
      r[i] = f[i] - r[i];
    ratio = norm2(r) / r0;
    out.report.residual_ratios.push_back(ratio);
    if (!std::isfinite(ratio))
      throw NumericalFailure("multigrid iteration diverged", ratio);
    if (ratio < options.tol)
      break;
  }
  out.report.cpu_seconds = static_cast<double>(std::clock() - start) / CLOCKS_PER_SEC;
  if (!(ratio < options.tol))
    throw NumericalFailure("multigrid did not reach the residual tolerance", ratio);
  return out;
}

}  // namespace nlmg
