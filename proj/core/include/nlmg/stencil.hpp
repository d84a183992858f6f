// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_STENCIL_HPP
#define NLMG_STENCIL_HPP

#include <cstddef>
#include <vector>

#include "nlmg/horizon.hpp"

namespace nlmg
{

struct HorizonRatio
{
  double R = 0.0;  // delta / h
  int r = 0;       // floor(R)
};

// R is snapped to the nearest integer when it is within a few ulps of one,
// so that delta = 5h does not turn into floor(4.999...) = 4.
HorizonRatio horizon_ratio(double delta, double h);

// Symmetric stencil a_0, a_1, ..., a_{r+1} of the discrete operator. Row i of
// the stiffness matrix is sum_k a_|k| u_{i+k}.
struct Stencil
{
  double h = 0.0;
  double delta = 0.0;
  double R = 0.0;
  int r = 0;
  std::vector<double> coeffs;

  int halfwidth() const { return static_cast<int>(coeffs.size()) - 1; }
  double operator[](std::size_t k) const { return k < coeffs.size() ? coeffs[k] : 0.0; }
};

// Closed form for the constant kernel.
Stencil closed_form_stencil(double h, double delta);

// Hat-function quadrature of the weak form for an arbitrary kernel. Each
// cell integral is computed by adaptive Gauss-Kronrod to relative accuracy tol.
Stencil quadrature_stencil(double h, double delta, const Kernel &kernel, double tol = 1e-12);

// Closed form for the constant kernel, quadrature otherwise.
Stencil make_stencil(double h, double delta, const Kernel &kernel);

}  // namespace nlmg

#endif  // NLMG_STENCIL_HPP
