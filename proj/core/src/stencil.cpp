// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg/stencil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "nlmg/error.hpp"

namespace nlmg
{

namespace
{

void check_mesh(double h, double delta)
{
  if (!(h > 0.0) || !std::isfinite(h))
    throw InvalidArgument("mesh size must be positive and finite");
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw InvalidArgument("horizon must be positive and finite");
}

// a_0 = -2 sum_{k>=1} a_k, summed from the smallest entries upward.
void close_row_sum(std::vector<double> &a)
{
  double s = 0.0;
  for (std::size_t k = a.size() - 1; k >= 1; --k)
    s += a[k];
  a[0] = -2.0 * s;
}

}  // namespace

HorizonRatio horizon_ratio(double delta, double h)
{
  check_mesh(h, delta);
  double R = delta / h;
  const double nearest = std::round(R);
  if (std::abs(R - nearest) <= 8.0 * std::numeric_limits<double>::epsilon() * R)
    R = nearest;
  if (R > static_cast<double>(std::numeric_limits<int>::max() / 2))
    throw InvalidArgument("horizon is too large relative to the mesh size");
  return {R, static_cast<int>(std::floor(R))};
}

Stencil closed_form_stencil(double h, double delta)
{
  const auto [R, r] = horizon_ratio(delta, h);
  Stencil st;
  st.h = h;
  st.delta = delta;
  st.R = R;
  st.r = r;
  const double h2 = h * h;

  if (R <= 1.0)
  {
    // Reduces to the local three-point Laplacian.
    st.coeffs.assign(static_cast<std::size_t>(r) + 2, 0.0);
    st.coeffs[0] = 2.0 / h2;
    st.coeffs[1] = -1.0 / h2;
    return st;
  }

  const double R3 = R * R * R;
  const double rd = r;
  const double frac = R - rd;
  st.coeffs.assign(static_cast<std::size_t>(r) + 2, 0.0);
  for (int p = 1; p < r; ++p)
    st.coeffs[p] = -3.0 / (h2 * R3);
  st.coeffs[r] = -(3.0 * rd - 1.0 + frac * (rd * rd + rd * R - 2.0 * R * R + 3.0 * rd + 3.0 * R)) /
                 (2.0 * h2 * R3 * rd);
  st.coeffs[r + 1] = frac == 0.0 ? 0.0
                                 : -frac * (2.0 * R * R - rd * R - rd * rd) /
                                     (2.0 * h2 * R3 * (rd + 1.0));
  close_row_sum(st.coeffs);
  return st;
}

Stencil quadrature_stencil(double h, double delta, const Kernel &kernel, double tol)
{
  const auto [R, r] = horizon_ratio(delta, h);
  if (!(tol > 0.0))
    throw InvalidArgument("quadrature tolerance must be positive");

  Stencil st;
  st.h = h;
  st.delta = delta;
  st.R = R;
  st.r = r;
  st.coeffs.assign(static_cast<std::size_t>(r) + 2, 0.0);

  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  auto cell = [&](double lo, double hi, auto &&phi)
  {
    if (!(hi > lo))
      return 0.0;
    double err = 0.0;
    double l1 = 0.0;
    const double v = Rule::integrate([&](double s) { return phi(s) * s * kernel(s, delta); },
                                     lo, hi, 20, tol, &err, &l1);
    if (!std::isfinite(v) || !(err <= tol * std::max(l1, std::numeric_limits<double>::min())))
      throw NumericalFailure("stencil quadrature did not reach the requested tolerance", err);
    return v;
  };

  // Hat function centred at p h, integrated over the part of its support
  // that lies inside the horizon.
  for (int p = 1; p <= r + 1; ++p)
  {
    const double centre = p * h;
    const double lo = (p - 1) * h;
    const double hi = std::min((p + 1) * h, delta);
    const double rise =
      cell(lo, std::min(centre, hi), [&](double s) { return (s - lo) / h; });
    const double fall =
      cell(centre, hi, [&](double s) { return ((p + 1) * h - s) / h; });
    st.coeffs[p] = -(rise + fall) / centre;
  }
  close_row_sum(st.coeffs);
  return st;
}

Stencil make_stencil(double h, double delta, const Kernel &kernel)
{
  if (kernel.is_constant())
    return closed_form_stencil(h, delta);
  return quadrature_stencil(h, delta, kernel);
}

}  // namespace nlmg
