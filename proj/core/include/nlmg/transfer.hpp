// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_TRANSFER_HPP
#define NLMG_TRANSFER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "nlmg/band_matrix.hpp"

namespace nlmg
{

// Grids hold n = 2^m - 1 interior points; coarse point I sits on fine point
// 2I + 1 (0-based).
bool is_nested_grid_size(int n);
int coarse_size(int n_fine);

// Full weighting (1/4)(1, 2, 1).
std::vector<double> restrict_vector(std::span<const double> fine);
// Linear interpolation, the transpose of restriction scaled by 2.
std::vector<double> prolong_vector(std::span<const double> coarse, int n_fine);

Eigen::MatrixXd restriction_matrix(int n_fine);
Eigen::MatrixXd prolongation_matrix(int n_fine);

// R A P. The result has halfwidth at most floor((s + 2) / 2).
SymBandMatrix galerkin_coarsen(const SymBandMatrix &fine);

// Interior stencil A(c, c..c+s) taken from the middle row.
std::vector<double> interior_stencil(const SymBandMatrix &a);

// k - 1 applications of the unscaled coarsening L A L^T (L with rows 1 2 1)
// to the infinite symmetric Toeplitz stencil a_0..a_s, in closed form. This
// equals 8^(k-1) times the Galerkin interior stencil. Integer input stays
// exact.
std::vector<std::int64_t> closed_form_coarsen(std::span<const std::int64_t> band, int k);
std::vector<double> closed_form_coarsen(std::span<const double> band, int k);

// Same map by repeated convolution, used as a cross-check.
std::vector<double> coarsen_by_convolution(std::span<const double> band, int k);

}  // namespace nlmg

#endif  // NLMG_TRANSFER_HPP
