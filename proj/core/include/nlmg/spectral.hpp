// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_SPECTRAL_HPP
#define NLMG_SPECTRAL_HPP

#include <vector>

#include "nlmg/band_matrix.hpp"
#include "nlmg/stencil.hpp"

namespace nlmg
{

// f(x) = t_0 + 2 sum_k t_k cos(k x), the symbol of a symmetric Toeplitz band.
class GeneratingFunction
{
public:
  explicit GeneratingFunction(std::vector<double> coeffs);

  double operator()(double x) const;
  const std::vector<double> &coeffs() const { return coeffs_; }

private:
  std::vector<double> coeffs_;
};

GeneratingFunction generating_function(const SymBandToeplitz &a);

// Sampled range of the symbol on [0, pi]. Every eigenvalue of the matrix
// lies in [f_min, f_max].
struct SymbolRange
{
  double f_min = 0.0;
  double f_max = 0.0;
};

// Uses max(samples, 4 s) equispaced points including both end points.
SymbolRange gs_bounds(const SymBandToeplitz &a, int samples = 8192);

// Dilated second-difference matrix: 2 on the diagonal, -1 on the j-th
// off-diagonals.
SymBandMatrix lj_matrix(int n, int j);

struct LjSpectrum
{
  bool exact = false;               // true when j divides n
  std::vector<double> values;       // distinct eigenvalues, ascending
  int multiplicity = 0;             // j when exact
  double lambda1_lower_bound = 0.0; // 4 sin^2(pi / (2 (ceil(n/j) + 1)))
};

LjSpectrum lj_eigenvalues(int n, int j);

// Writes a zero-row-sum stencil as a non-negative combination of dilated
// second differences, A = sum_j w_j L_j with w_j = -a_j.
struct LaplacianDecomposition
{
  std::vector<double> weights;  // weights[j - 1] multiplies L_j

  SymBandMatrix materialize(int n) const;
};

LaplacianDecomposition laplacian_decomposition(const Stencil &stencil);

}  // namespace nlmg

#endif  // NLMG_SPECTRAL_HPP
