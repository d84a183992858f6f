// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "nlmg/error.hpp"
#include "nlmg/hierarchy.hpp"
#include "nlmg/multigrid.hpp"
#include "nlmg/problem.hpp"
#include "oracles.hpp"

namespace
{

nlmg::AssembledSystem model_system(int J, nlmg::HorizonSpec horizon)
{
  const auto p = nlmg::manufactured_example(4.0, horizon);
  return nlmg::assemble_system(p, (1 << J) - 1);
}

TEST(Hierarchy, GalerkinLevelsMatchRepeatedTripleProduct)
{
  const auto sys = model_system(5, nlmg::HorizonSpec::proportional(3.0));
  const auto hier = nlmg::Hierarchy::build(sys, nlmg::Kernel::constant());
  ASSERT_EQ(hier.depth(), 5u);
  EXPECT_EQ(hier.coarsest().n, 1);
  Eigen::MatrixXd ref = oracle::toeplitz(sys.n, sys.stencil.coeffs);
  for (std::size_t l = 0; l < hier.depth(); ++l)
  {
    const auto &level = hier.level(l);
    EXPECT_EQ(level.m, static_cast<int>(hier.depth() - l));
    EXPECT_NEAR(level.h, sys.h * std::ldexp(1.0, static_cast<int>(l)), 1e-15);
    EXPECT_LE((level.op.to_dense() - ref).cwiseAbs().maxCoeff(), 1e-10 * ref(0, 0));
    if (l + 1 < hier.depth())
      ref = oracle::galerkin(ref);
  }
}

TEST(Hierarchy, RediscretizedLevelsKeepTheHorizon)
{
  const auto sys = model_system(6, nlmg::HorizonSpec::fixed(1.0));
  nlmg::HierarchyOptions opts;
  opts.strategy = nlmg::Coarsening::rediscretize;
  const auto hier = nlmg::Hierarchy::build(sys, nlmg::Kernel::constant(), opts);
  for (std::size_t l = 0; l < hier.depth(); ++l)
  {
    const auto &level = hier.level(l);
    EXPECT_TRUE(level.op.is_toeplitz());
    const auto st = nlmg::closed_form_stencil(level.h, 1.0);
    EXPECT_NEAR(level.op.to_dense()(0, 0), st[0], 1e-12 * st[0]);
  }
}

TEST(Hierarchy, CoarsestSizeStopsEarly)
{
  const auto sys = model_system(6, nlmg::HorizonSpec::fixed(1.0));
  nlmg::HierarchyOptions opts;
  opts.coarsest_size = 7;
  const auto hier = nlmg::Hierarchy::build(sys, nlmg::Kernel::constant(), opts);
  EXPECT_EQ(hier.coarsest().n, 7);
  opts.coarsest_size = 0;
  EXPECT_THROW(nlmg::Hierarchy::build(sys, nlmg::Kernel::constant(), opts),
               nlmg::InvalidArgument);
}

TEST(Hierarchy, FftPathMatchesDirect)
{
  const auto sys = model_system(9, nlmg::HorizonSpec::fixed(1.0));
  nlmg::HierarchyOptions opts;
  opts.strategy = nlmg::Coarsening::rediscretize;
  opts.matvec = nlmg::MatvecPath::fft;
  const auto fast = nlmg::Hierarchy::build(sys, nlmg::Kernel::constant(), opts);
  opts.matvec = nlmg::MatvecPath::direct;
  const auto slow = nlmg::Hierarchy::build(sys, nlmg::Kernel::constant(), opts);
  EXPECT_TRUE(fast.finest().op.uses_fft());
  std::mt19937_64 rng(4);
  const auto x = oracle::random_vector(rng, sys.n);
  std::vector<double> a(sys.n), b(sys.n);
  fast.finest().op.multiply(x, a);
  slow.finest().op.multiply(x, b);
  for (int i = 0; i < sys.n; ++i)
    EXPECT_NEAR(a[i], b[i], 1e-11 * sys.stencil[0]);
}

TEST(Smoother, RejectsInvalidWeights)
{
  nlmg::SmootherParams p;
  p.omega_post = 0.0;
  EXPECT_THROW(p.validate(), nlmg::InvalidArgument);
  p.omega_post = 2.0;
  EXPECT_THROW(p.validate(), nlmg::InvalidArgument);
  p.omega_post = 0.5;
  p.pre_sweeps = -1;
  EXPECT_THROW(p.validate(), nlmg::InvalidArgument);
}

TEST(Smoother, JacobiSweepMatchesFormula)
{
  const auto sys = model_system(4, nlmg::HorizonSpec::proportional(2.5));
  const auto hier = nlmg::Hierarchy::build(sys, nlmg::Kernel::constant());
  std::mt19937_64 rng(8);
  auto v = oracle::random_vector(rng, sys.n);
  const Eigen::VectorXd v0 = Eigen::Map<Eigen::VectorXd>(v.data(), sys.n);
  const Eigen::VectorXd f = Eigen::Map<const Eigen::VectorXd>(sys.rhs.data(), sys.n);
  const Eigen::MatrixXd A = oracle::toeplitz(sys.n, sys.stencil.coeffs);
  nlmg::jacobi_sweep(hier.finest(), v, sys.rhs, 0.4);
  const Eigen::VectorXd ref = v0 + 0.4 * A.diagonal().cwiseInverse().cwiseProduct(f - A * v0);
  for (int i = 0; i < sys.n; ++i)
    EXPECT_NEAR(v[i], ref(i), 1e-12 * std::abs(ref(i)) + 1e-12);
}

TEST(VCycle, TwoLevelCycleIsTheTwoGridMethod)
{
  const auto sys = model_system(3, nlmg::HorizonSpec::proportional(1.7));
  nlmg::HierarchyOptions opts;
  opts.coarsest_size = 3;
  const auto hier = nlmg::Hierarchy::build(sys, nlmg::Kernel::constant(), opts);
  ASSERT_EQ(hier.depth(), 2u);

  nlmg::SmootherParams params;  // one pre sweep at 1, two post sweeps at 1/3
  const Eigen::MatrixXd A = oracle::toeplitz(sys.n, sys.stencil.coeffs);
  const Eigen::MatrixXd E = oracle::two_grid(A, params.omega_pre, params.pre_sweeps,
                                             params.omega_post, params.post_sweeps);
  std::mt19937_64 rng(12);
  const auto u = oracle::random_vector(rng, sys.n);
  const auto v0 = oracle::random_vector(rng, sys.n);
  const Eigen::VectorXd ue = Eigen::Map<const Eigen::VectorXd>(u.data(), sys.n);
  const Eigen::VectorXd f = A * ue;
  std::vector<double> fv(f.data(), f.data() + sys.n);
  const auto v1 = nlmg::v_cycle(hier, params, fv, v0);
  const Eigen::VectorXd e0 = Eigen::Map<const Eigen::VectorXd>(v0.data(), sys.n) - ue;
  const Eigen::VectorXd e1 = Eigen::Map<const Eigen::VectorXd>(v1.data(), sys.n) - ue;
  EXPECT_LE((e1 - E * e0).norm(), 1e-10 * e0.norm());
}

TEST(Solve, ReachesToleranceAndConvergesToDiscreteSolution)
{
  const auto sys = model_system(8, nlmg::HorizonSpec::proportional(5.0));
  const auto hier = nlmg::Hierarchy::build(sys, nlmg::Kernel::constant());
  nlmg::SolveOptions opts;
  opts.tol = 1e-12;
  const auto result = nlmg::solve(hier, {}, sys.rhs, opts);
  ASSERT_FALSE(result.report.residual_ratios.empty());
  EXPECT_LT(result.report.residual_ratios.back(), 1e-12);
  EXPECT_EQ(static_cast<int>(result.report.residual_ratios.size()), result.report.cycles);

  const Eigen::MatrixXd A = oracle::toeplitz(sys.n, sys.stencil.coeffs);
  const Eigen::VectorXd f = Eigen::Map<const Eigen::VectorXd>(sys.rhs.data(), sys.n);
  const Eigen::VectorXd exact = A.llt().solve(f);
  for (int i = 0; i < sys.n; ++i)
    EXPECT_NEAR(result.u[i], exact(i), 1e-8 * exact.cwiseAbs().maxCoeff());
}

TEST(Solve, ManufacturedErrorIsSecondOrder)
{
  double prev = 0.0;
  for (int J = 6; J <= 8; ++J)
  {
    const auto p = nlmg::manufactured_example(4.0, nlmg::HorizonSpec::fixed(1.0));
    const auto sys = nlmg::assemble_system(p, (1 << J) - 1);
    const auto hier = nlmg::Hierarchy::build(sys, p.kernel);
    nlmg::SolveOptions opts;
    opts.tol = 1e-12;
    const auto result = nlmg::solve(hier, {}, sys.rhs, opts);
    const double err = nlmg::max_nodal_error(sys, result.u, p.exact);
    if (prev > 0.0)
      EXPECT_NEAR(std::log2(prev / err), 2.0, 0.05);
    prev = err;
  }
}

TEST(Solve, ReportsCycleLimit)
{
  const auto sys = model_system(7, nlmg::HorizonSpec::fixed(1.0));
  const auto hier = nlmg::Hierarchy::build(sys, nlmg::Kernel::constant());
  nlmg::SolveOptions opts;
  opts.max_cycles = 2;
  opts.tol = 1e-14;
  EXPECT_THROW(nlmg::solve(hier, {}, sys.rhs, opts), nlmg::NumericalFailure);
  opts.tol = 0.0;
  EXPECT_THROW(nlmg::solve(hier, {}, sys.rhs, opts), nlmg::InvalidArgument);
}

}  // namespace
