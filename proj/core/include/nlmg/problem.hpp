// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_PROBLEM_HPP
#define NLMG_PROBLEM_HPP

#include <functional>
#include <span>
#include <vector>

#include "nlmg/horizon.hpp"
#include "nlmg/stencil.hpp"

namespace nlmg
{

// Volume-constrained problem L u = f on (0, b) with u = g on the collar of
// width delta on either side.
struct ProblemSpec
{
  double b = 4.0;
  HorizonSpec horizon;
  Kernel kernel = Kernel::constant();
  std::function<double(double x, double delta)> load;
  std::function<double(double x)> boundary;
  std::function<double(double x)> exact;  // optional

  void validate() const;
};

// Uniform grid x_i = i h, i = 1..n, with h = b / (n + 1). Ghost values are
// stored in increasing x: ghost_left holds x_{-r}..x_0 and ghost_right holds
// x_{n+1}..x_{n+r+1}.
struct AssembledSystem
{
  Stencil stencil;
  int n = 0;
  double b = 0.0;
  double h = 0.0;
  double delta = 0.0;
  std::vector<double> rhs;
  std::vector<double> ghost_left;
  std::vector<double> ghost_right;

  double node(int i) const { return i * h; }  // 1-based
};

// Contribution of the prescribed collar values to the right-hand side,
// F_i = -sum_{ghost j} a_|i-j| g_j.
std::vector<double> boundary_vector(const Stencil &stencil, std::span<const double> ghost_left,
                                    std::span<const double> ghost_right, int n);

AssembledSystem assemble_system(const ProblemSpec &problem, int n);

// Manufactured solution u = x^2 (b - x)^2 for the constant kernel, with the
// matching load and collar data.
ProblemSpec manufactured_example(double b, HorizonSpec horizon);

// max_i |u_i - exact(x_i)|
double max_nodal_error(const AssembledSystem &sys, std::span<const double> u,
                       const std::function<double(double)> &exact);

}  // namespace nlmg

#endif  // NLMG_PROBLEM_HPP
