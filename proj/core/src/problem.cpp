// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg/problem.hpp"

#include <algorithm>
#include <cmath>

#include "nlmg/error.hpp"

namespace nlmg
{

void ProblemSpec::validate() const
{
  if (!(b > 0.0) || !std::isfinite(b))
    throw InvalidArgument("domain length must be positive and finite");
  horizon.validate();
  if (!load)
    throw InvalidArgument("problem has no load function");
  if (!boundary)
    throw InvalidArgument("problem has no collar data");
}

std::vector<double> boundary_vector(const Stencil &stencil, std::span<const double> ghost_left,
                                    std::span<const double> ghost_right, int n)
{
  if (n < 1)
    throw InvalidArgument("number of unknowns must be positive");
  const int width = stencil.halfwidth();
  if (static_cast<int>(ghost_left.size()) != width || static_cast<int>(ghost_right.size()) != width)
    throw InvalidArgument("ghost vectors must hold r + 1 values on each side");

  std::vector<double> F(static_cast<std::size_t>(n), 0.0);
  // ghost_left[g] sits at x_{g - width + 1}; ghost_right[g] at x_{n + 1 + g}.
  for (int i = 1; i <= n; ++i)
  {
    double acc = 0.0;
    for (int g = 0; g < width; ++g)
    {
      const int j = g - width + 1;
      const int dist = i - j;
      if (dist <= width)
        acc += stencil[dist] * ghost_left[g];
    }
    for (int g = 0; g < width; ++g)
    {
      const int dist = n + 1 + g - i;
      if (dist <= width)
        acc += stencil[dist] * ghost_right[g];
    }
    F[i - 1] = -acc;
  }
  return F;
}

AssembledSystem assemble_system(const ProblemSpec &problem, int n)
{
  problem.validate();
  if (n < 1)
    throw InvalidArgument("number of unknowns must be positive");

  AssembledSystem sys;
  sys.n = n;
  sys.b = problem.b;
  sys.h = problem.b / (n + 1);
  sys.delta = problem.horizon.delta(sys.h);
  if (sys.delta >= problem.b)
    throw InvalidArgument("horizon must be smaller than the domain length");
  sys.stencil = make_stencil(sys.h, sys.delta, problem.kernel);

  const int width = sys.stencil.halfwidth();
  sys.ghost_left.resize(width);
  sys.ghost_right.resize(width);
  for (int g = 0; g < width; ++g)
  {
    sys.ghost_left[g] = problem.boundary(sys.node(g - width + 1));
    sys.ghost_right[g] = problem.boundary(sys.node(n + 1 + g));
  }

  sys.rhs = boundary_vector(sys.stencil, sys.ghost_left, sys.ghost_right, n);
  for (int i = 1; i <= n; ++i)
    sys.rhs[i - 1] += problem.load(sys.node(i), sys.delta);
  return sys;
}

ProblemSpec manufactured_example(double b, HorizonSpec horizon)
{
  ProblemSpec p;
  p.b = b;
  p.horizon = horizon;
  p.kernel = Kernel::constant();
  auto u = [b](double x) { return x * x * (b - x) * (b - x); };
  p.exact = u;
  p.boundary = u;
  p.load = [b](double x, double delta)
  { return -12.0 * x * x + 12.0 * b * x - 2.0 * b * b - 1.2 * delta * delta; };
  return p;
}

double max_nodal_error(const AssembledSystem &sys, std::span<const double> u,
                       const std::function<double(double)> &exact)
{
  if (static_cast<int>(u.size()) != sys.n)
    throw InvalidArgument("solution length does not match the system");
  if (!exact)
    throw InvalidArgument("no exact solution supplied");
  double e = 0.0;
  for (int i = 1; i <= sys.n; ++i)
    e = std::max(e, std::abs(u[i - 1] - exact(sys.node(i))));
  return e;
}

}  // namespace nlmg
