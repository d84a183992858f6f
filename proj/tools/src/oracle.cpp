// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg_bench/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "nlmg/band_matrix.hpp"
#include "nlmg/error.hpp"
#include "nlmg/stencil.hpp"
#include "nlmg/transfer.hpp"

namespace nlmg::bench
{

namespace
{

void finish(OracleResult &out)
{
  double scale = 0.0;
  for (const auto &r : out.rows)
    scale = std::max(scale, std::abs(r.closed));
  if (scale == 0.0)
    scale = 1.0;
  for (auto &r : out.rows)
  {
    r.rel_diff = std::abs(r.closed - r.oracle) / scale;
    out.max_rel_diff = std::max(out.max_rel_diff, r.rel_diff);
  }
}

}  // namespace

OracleResult stencil_oracle(double R, double tolerance)
{
  if (!(R > 0.0))
    throw InvalidArgument("R must be positive");
  const Stencil closed = closed_form_stencil(1.0, R);
  const Stencil quad = quadrature_stencil(1.0, R, Kernel::constant());
  OracleResult out;
  out.title = fmt::format("stencil R={} (h=1): closed form vs quadrature", R);
  out.tolerance = tolerance;
  const int width = std::max(closed.halfwidth(), quad.halfwidth());
  for (int k = 0; k <= width; ++k)
    out.rows.push_back({k, closed[k], quad[k], 0.0});
  finish(out);
  return out;
}

OracleResult coarsen_oracle(std::span<const double> band, int k, double tolerance)
{
  if (band.empty())
    throw InvalidArgument("band must contain the diagonal");
  if (k < 1 || k > 8)
    throw InvalidArgument("coarsening depth must lie in [1, 8]");
  const std::vector<double> closed = closed_form_coarsen(band, k);

  // Large enough that the middle row never sees the boundary.
  const int s = static_cast<int>(band.size()) - 1;
  int m = k + 6;
  while ((1 << m) < 16 * (s + 4) * (1 << k))
    ++m;
  SymBandMatrix a =
    SymBandMatrix::from_toeplitz(SymBandToeplitz((1 << m) - 1, {band.begin(), band.end()}));
  for (int step = 1; step < k; ++step)
    a = galerkin_coarsen(a);
  std::vector<double> row = interior_stencil(a);
  const double scale = std::pow(8.0, k - 1);

  OracleResult out;
  out.title = fmt::format("coarsen k={}: closed form vs 8^(k-1) * Galerkin interior row", k);
  out.tolerance = tolerance;
  const std::size_t width = std::max(closed.size(), row.size());
  for (std::size_t j = 0; j < width; ++j)
  {
    const double c = j < closed.size() ? closed[j] : 0.0;
    const double o = j < row.size() ? scale * row[j] : 0.0;
    out.rows.push_back({static_cast<int>(j), c, o, 0.0});
  }
  finish(out);
  return out;
}

std::string render(const OracleResult &result)
{
  std::string out = result.title + "\n";
  out += fmt::format("{:>4} {:>24} {:>24} {:>12}\n", "k", "closed", "oracle", "rel_diff");
  for (const auto &r : result.rows)
    out += fmt::format("{:>4} {:>24.16e} {:>24.16e} {:>12.3e}\n", r.k, r.closed, r.oracle, r.rel_diff);
  out += fmt::format("max rel diff {:.3e} (tolerance {:.1e}) {}\n", result.max_rel_diff,
                     result.tolerance, result.pass() ? "PASS" : "FAIL");
  return out;
}

}  // namespace nlmg::bench
