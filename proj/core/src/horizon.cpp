// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg/horizon.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "nlmg/error.hpp"

namespace nlmg
{

double HorizonSpec::delta(double h) const
{
  validate();
  if (!(h > 0.0) || !std::isfinite(h))
    throw InvalidArgument("mesh size must be positive and finite");
  // Keep the common cases bit exact so that delta/h lands on integers.
  if (beta == 0.0)
    return c;
  if (beta == 1.0)
    return c * h;
  return c * std::pow(h, beta);
}

void HorizonSpec::validate() const
{
  if (!(c > 0.0) || !std::isfinite(c))
    throw InvalidArgument("horizon coefficient must be positive and finite");
  if (!(beta >= 0.0) || !(beta <= 1.0))
    throw InvalidArgument("horizon exponent must lie in [0, 1]");
}

std::string HorizonSpec::describe() const
{
  std::ostringstream os;
  os.precision(10);
  os << "c=" << c << " beta=" << beta;
  return os.str();
}

Kernel::Kernel(std::string name, Function gamma, bool constant)
  : name_(std::move(name)), gamma_(std::move(gamma)), constant_(constant)
{
}

Kernel Kernel::constant()
{
  return Kernel("constant",
                [](double s, double delta)
                {
                  if (s <= 0.0 || s >= delta)
                    return 0.0;
                  return 3.0 / (delta * delta * delta);
                },
                true);
}

Kernel Kernel::custom(std::string name, Function gamma)
{
  if (!gamma)
    throw InvalidArgument("kernel function is empty");
  return Kernel(std::move(name), std::move(gamma), false);
}

double Kernel::operator()(double s, double delta) const
{
  if (s <= 0.0 || s >= delta)
    return 0.0;
  return gamma_(s, delta);
}

double Kernel::second_moment(double delta) const
{
  if (!(delta > 0.0))
    throw InvalidArgument("horizon must be positive");
  if (constant_)
    return 1.0;
  double err = 0.0;
  const double m = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
    [&](double s) { return s * s * gamma_(s, delta); }, 0.0, delta, 15, 1e-13, &err);
  if (err > 1e-10 * std::max(1.0, std::abs(m)))
    throw NumericalFailure("kernel second moment did not converge", err);
  return m;
}

}  // namespace nlmg
