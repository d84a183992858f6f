// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_DENSE_HPP
#define NLMG_DENSE_HPP

#include <vector>

#include <Eigen/Dense>

#include "nlmg/band_matrix.hpp"

namespace nlmg
{

// Largest order accepted by the dense eigen and operator-norm routines.
inline constexpr int kDenseCap = 4096;

struct EigenPairs
{
  std::vector<double> values;  // ascending
  Eigen::MatrixXd vectors;     // column k pairs with values[k]
};

// Eigenvalues of a symmetric band matrix in ascending order. Narrow bands go
// through the banded LAPACK driver, wide ones through the dense one.
std::vector<double> dense_spectrum(const SymBandMatrix &a, int cap = kDenseCap);
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd &a, int cap = kDenseCap);
EigenPairs dense_eigenpairs(const SymBandMatrix &a, int cap = kDenseCap);

// Largest eigenvalue of a symmetric matrix.
double largest_eigenvalue(const Eigen::MatrixXd &a, int cap = kDenseCap);

}  // namespace nlmg

#endif  // NLMG_DENSE_HPP
