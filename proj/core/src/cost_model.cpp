// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg/cost_model.hpp"

#include <cmath>

#include "nlmg/error.hpp"

namespace nlmg
{

double CycleCost::storage_ratio() const
{
  return finest_storage == 0 ? 0.0
                             : static_cast<double>(storage) / static_cast<double>(finest_storage);
}

CycleCost estimate_cycle_cost(const Hierarchy &hierarchy, const SmootherParams &params)
{
  params.validate();
  CycleCost out;
  out.n_finest = hierarchy.finest().n;
  const int sweeps = params.pre_sweeps + params.post_sweeps;
  for (std::size_t l = 0; l < hierarchy.depth(); ++l)
  {
    const Level &level = hierarchy.level(l);
    LevelCost c;
    c.m = level.m;
    c.n = level.n;
    c.halfwidth = level.op.halfwidth();
    c.fft = level.op.uses_fft();
    c.matvec_flops = level.op.matvec_flops();
    c.stored = level.op.stored_coefficients();
    const double n = level.n;
    if (l + 1 == hierarchy.depth())
    {
      // Two triangular solves with the stored Cholesky factor.
      c.cycle_flops = 2.0 * n * n;
    }
    else
    {
      const double nc = hierarchy.level(l + 1).n;
      c.cycle_flops = (sweeps + 1) * c.matvec_flops  // smoothing and residual products
                      + sweeps * 4.0 * n + n          // Jacobi updates and residual
                      + 5.0 * nc + 6.0 * nc;          // restriction and interpolation
    }
    out.flops_per_cycle += c.cycle_flops;
    out.storage += c.stored;
    out.levels.push_back(c);
  }
  out.finest_storage = out.levels.front().stored;
  return out;
}

double loglog_slope(std::span<const double> x, std::span<const double> y)
{
  if (x.size() != y.size() || x.size() < 2)
    throw InvalidArgument("slope needs at least two matching points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double m = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
  {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw InvalidArgument("log-log slope needs positive data");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = m * sxx - sx * sx;
  if (den == 0.0)
    throw InvalidArgument("slope needs distinct abscissae");
  return (m * sxy - sx * sy) / den;
}

}  // namespace nlmg
