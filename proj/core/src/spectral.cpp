// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlmg/error.hpp"

namespace nlmg
{

GeneratingFunction::GeneratingFunction(std::vector<double> coeffs) : coeffs_(std::move(coeffs))
{
  if (coeffs_.empty())
    throw InvalidArgument("generating function needs at least one coefficient");
}

double GeneratingFunction::operator()(double x) const
{
  double acc = 0.0;
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k)
    acc += coeffs_[k] * std::cos(static_cast<double>(k) * x);
  return coeffs_[0] + 2.0 * acc;
}

GeneratingFunction generating_function(const SymBandToeplitz &a)
{
  auto band = a.band();
  return GeneratingFunction(std::vector<double>(band.begin(), band.end()));
}

SymbolRange gs_bounds(const SymBandToeplitz &a, int samples)
{
  if (samples < 2)
    throw InvalidArgument("symbol sampling needs at least two points");
  const GeneratingFunction f = generating_function(a);
  const int m = std::max(samples, 4 * a.halfwidth());
  SymbolRange out{f(0.0), f(0.0)};
  for (int k = 1; k < m; ++k)
  {
    const double v = f(std::numbers::pi * k / (m - 1));
    out.f_min = std::min(out.f_min, v);
    out.f_max = std::max(out.f_max, v);
  }
  return out;
}

SymBandMatrix lj_matrix(int n, int j)
{
  if (n < 1)
    throw InvalidArgument("matrix order must be positive");
  if (j < 1)
    throw InvalidArgument("dilation must be at least one");
  SymBandMatrix a(n, j);
  for (int i = 0; i < n; ++i)
  {
    a.upper(i, 0) = 2.0;
    if (j < n && i + j < n)
      a.upper(i, j) = -1.0;
  }
  return a;
}

LjSpectrum lj_eigenvalues(int n, int j)
{
  if (n < 1)
    throw InvalidArgument("matrix order must be positive");
  if (j < 1)
    throw InvalidArgument("dilation must be at least one");
  const double pi = std::numbers::pi;
  LjSpectrum out;
  const int blocks = (n + j - 1) / j;
  const double s1 = std::sin(pi / (2.0 * (blocks + 1)));
  out.lambda1_lower_bound = 4.0 * s1 * s1;
  if (n % j != 0)
    return out;

  // L_j is a permutation of j copies of the order n/j second difference.
  out.exact = true;
  out.multiplicity = j;
  const int m = n / j;
  out.values.resize(m);
  for (int k = 1; k <= m; ++k)
  {
    const double s = std::sin(k * pi / (2.0 * (m + 1)));
    out.values[k - 1] = 4.0 * s * s;
  }
  return out;
}

SymBandMatrix LaplacianDecomposition::materialize(int n) const
{
  const int s = static_cast<int>(weights.size());
  SymBandMatrix a(n, std::max(s, 0));
  for (int j = 1; j <= s; ++j)
  {
    const double w = weights[j - 1];
    for (int i = 0; i < n; ++i)
    {
      a.upper(i, 0) += 2.0 * w;
      if (j <= a.halfwidth() && i + j < n)
        a.upper(i, j) -= w;
    }
  }
  return a;
}

LaplacianDecomposition laplacian_decomposition(const Stencil &stencil)
{
  LaplacianDecomposition d;
  const int s = stencil.halfwidth();
  d.weights.resize(std::max(s, 0));
  for (int j = 1; j <= s; ++j)
  {
    const double w = -stencil[j];
    if (w < 0.0)
      throw InvalidArgument("stencil has a positive off-diagonal entry");
    d.weights[j - 1] = w;
  }
  return d;
}

}  // namespace nlmg
