// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "nlmg/band_matrix.hpp"
#include "nlmg/error.hpp"
#include "nlmg/transfer.hpp"
#include "oracles.hpp"

namespace
{

TEST(GridSizes, Nesting)
{
  EXPECT_TRUE(nlmg::is_nested_grid_size(1));
  EXPECT_TRUE(nlmg::is_nested_grid_size(1023));
  EXPECT_FALSE(nlmg::is_nested_grid_size(1024));
  EXPECT_FALSE(nlmg::is_nested_grid_size(0));
  EXPECT_EQ(nlmg::coarse_size(1023), 511);
  EXPECT_THROW(nlmg::coarse_size(1), nlmg::InvalidArgument);
}

TEST(TransferOperators, MatricesMatchOracle)
{
  for (int n : {3, 7, 15})
  {
    EXPECT_TRUE(nlmg::restriction_matrix(n).isApprox(oracle::full_weighting(n)));
    EXPECT_TRUE(nlmg::prolongation_matrix(n).isApprox(oracle::interpolation(n)));
    EXPECT_TRUE(
        nlmg::prolongation_matrix(n).isApprox(2.0 * nlmg::restriction_matrix(n).transpose()));
  }
}

TEST(TransferOperators, VectorsMatchMatrices)
{
  std::mt19937_64 rng(5);
  const int n = 31;
  const auto fine = oracle::random_vector(rng, n);
  const auto coarse = oracle::random_vector(rng, 15);
  const auto rf = nlmg::restrict_vector(fine);
  const auto pc = nlmg::prolong_vector(coarse, n);
  const Eigen::VectorXd rf_ref =
      oracle::full_weighting(n) * Eigen::Map<const Eigen::VectorXd>(fine.data(), n);
  const Eigen::VectorXd pc_ref =
      oracle::interpolation(n) * Eigen::Map<const Eigen::VectorXd>(coarse.data(), 15);
  for (int i = 0; i < 15; ++i)
    EXPECT_NEAR(rf[i], rf_ref(i), 1e-15);
  for (int i = 0; i < n; ++i)
    EXPECT_NEAR(pc[i], pc_ref(i), 1e-15);
}

TEST(GalerkinCoarsen, MatchesDenseTripleProduct)
{
  std::mt19937_64 rng(9);
  for (int s : {1, 2, 3, 6})
    for (int n : {7, 31, 63})
    {
      const auto band = oracle::random_mmatrix_band(rng, s);
      const Eigen::MatrixXd A = oracle::toeplitz(n, band);
      const nlmg::SymBandMatrix fine = nlmg::SymBandMatrix::from_dense(A, s);
      const nlmg::SymBandMatrix coarse = nlmg::galerkin_coarsen(fine);
      const Eigen::MatrixXd ref = oracle::galerkin(A);
      EXPECT_LE((coarse.to_dense() - ref).cwiseAbs().maxCoeff(), 1e-13 * band[0])
          << "s=" << s << " n=" << n;
      EXPECT_LE(coarse.halfwidth(), (s + 2) / 2);
    }
}

TEST(GalerkinCoarsen, RepeatedCoarseningOfNonToeplitzInput)
{
  std::mt19937_64 rng(13);
  const int n = 63;
  const auto v = oracle::random_vector(rng, n, 0.5, 1.5);
  Eigen::MatrixXd A = oracle::toeplitz(n, {2.0, -1.0});
  A += Eigen::MatrixXd(Eigen::Map<const Eigen::VectorXd>(v.data(), n).asDiagonal());
  nlmg::SymBandMatrix B = nlmg::SymBandMatrix::from_dense(A, 1);
  Eigen::MatrixXd ref = A;
  while (B.size() > 1)
  {
    B = nlmg::galerkin_coarsen(B);
    ref = oracle::galerkin(ref);
    EXPECT_LE((B.to_dense() - ref).cwiseAbs().maxCoeff(), 1e-13);
  }
}

class ClosedFormCoarsen : public ::testing::TestWithParam<int>
{
};

TEST_P(ClosedFormCoarsen, EqualsUnscaledTripleProduct)
{
  const int s = GetParam();
  std::mt19937_64 rng(100 + s);
  for (int k = 1; k <= 4; ++k)
  {
    const auto band = oracle::random_mmatrix_band(rng, s);
    const auto closed = nlmg::closed_form_coarsen(std::span<const double>(band), k);
    const auto ref = oracle::coarsened_interior(band, k);
    double scale = 0.0;
    for (double x : ref)
      scale = std::max(scale, std::abs(x));
    for (std::size_t j = 0; j < std::max(closed.size(), ref.size()); ++j)
    {
      const double c = j < closed.size() ? closed[j] : 0.0;
      const double o = j < ref.size() ? ref[j] : 0.0;
      EXPECT_LE(std::abs(c - o), 1e-12 * scale) << "s=" << s << " k=" << k << " j=" << j;
    }
    const auto conv = nlmg::coarsen_by_convolution(band, k);
    for (std::size_t j = 0; j < closed.size(); ++j)
      EXPECT_NEAR(conv[j], closed[j], 1e-12 * scale);
  }
}

INSTANTIATE_TEST_SUITE_P(Halfwidths, ClosedFormCoarsen, ::testing::Values(1, 2, 3, 5));

TEST(ClosedFormCoarsen, IntegerPathIsExact)
{
  const std::vector<std::int64_t> band = {6, -1, -1, -1};
  for (int k = 1; k <= 5; ++k)
  {
    const auto exact = nlmg::closed_form_coarsen(std::span<const std::int64_t>(band), k);
    const std::vector<double> bd(band.begin(), band.end());
    const auto ref = oracle::coarsened_interior(bd, k);
    for (std::size_t j = 0; j < exact.size(); ++j)
      EXPECT_EQ(static_cast<double>(exact[j]), std::round(j < ref.size() ? ref[j] : 0.0));
  }
}

TEST(ClosedFormCoarsen, LaplacianCombinationStructure)
{
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> dist(0.1, 2.0);
  for (int trial = 0; trial < 3; ++trial)
  {
    const double c1 = dist(rng), c2 = dist(rng), c3 = dist(rng);
    const std::vector<double> band = {2.0 * (c1 + c2 + c3), -c1, -c2, -c3};
    for (int k = 2; k <= 6; ++k)
    {
      const auto coarse = nlmg::closed_form_coarsen(std::span<const double>(band), k);
      const double p = std::ldexp(1.0, k);
      const double d1 = p, d2 = 4.0 * p - 6.0, d3 = 9.0 * p - 24.0;
      const double sigma1 = c1 * d1 / 2.0 + c2 * (d2 - 2.0) / 2.0 + c3 * (d3 - 8.0) / 2.0;
      const double sigma2 = c2 + 4.0 * c3;
      const double scale = std::abs(coarse[0]);
      EXPECT_NEAR(coarse[1], -sigma1, 1e-12 * scale);
      EXPECT_NEAR(coarse[2], -sigma2, 1e-12 * scale);
      EXPECT_NEAR(coarse[0], 2.0 * (sigma1 + sigma2), 1e-12 * scale);
      for (std::size_t j = 3; j < coarse.size(); ++j)
        EXPECT_NEAR(coarse[j], 0.0, 1e-12 * scale);
    }
  }
}

}  // namespace
