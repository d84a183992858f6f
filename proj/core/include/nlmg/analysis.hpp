// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_ANALYSIS_HPP
#define NLMG_ANALYSIS_HPP

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nlmg/band_matrix.hpp"
#include "nlmg/hierarchy.hpp"
#include "nlmg/horizon.hpp"
#include "nlmg/multigrid.hpp"
#include "nlmg/stencil.hpp"

namespace nlmg::analysis
{

// Additive slack applied to every bound comparison.
inline constexpr double kBoundSlack = 1e-10;
// Largest finest-level order for which error operators are materialized.
inline constexpr int kOperatorCap = 1023;

// Constant-kernel model problem on (0, b) with n = 2^J - 1 unknowns.
struct ModelConfig
{
  double b = 4.0;
  HorizonSpec horizon;
  int J = 8;

  int n() const;
  double h() const;
  double delta() const;
  Stencil stencil() const;
  SymBandMatrix matrix() const;
  std::string describe() const;
};

struct SmoothingConstants
{
  double omega = 0.0;
  double eta = 0.0;   // 2 omega (1 - omega)
  double eta0 = 2.0;  // upper bound on lambda_max(D^-1 A)

  static SmoothingConstants for_omega(double omega, double eta0 = 2.0);
  // eta <= omega (2 - omega eta0)
  bool consistent() const;
};

double smoothing_eta(double omega);
// sqrt(1 - eta / 6): two-grid factor bound for any horizon.
double tgm_bound(double omega);
// sqrt(1 - eta): two-grid factor bound when delta <= h.
double tgm_bound_local(double omega);
// 1 / (2 l omega + 1): V-cycle bound for the three-point case.
double vcycle_bound(int sweeps, double omega);
// a_0 / (-2 a_1), the approximation constant read off the stencil.
double kappa_surrogate(const Stencil &stencil);

struct CheckRecord
{
  std::string check;
  std::string config;
  double measured = 0.0;
  double bound = 0.0;
  std::string relation;  // how measured is compared with bound
  bool pass = false;
};

struct AnalysisReport
{
  std::vector<CheckRecord> records;

  void add(CheckRecord record) { records.push_back(std::move(record)); }
  bool all_pass() const;
};

// ||E||_A = ||A^{1/2} E A^{-1/2}||_2, evaluated as ||L^T E L^{-T}||_2 with
// A = L L^T.
double energy_operator_norm(const Eigen::MatrixXd &A, const Eigen::MatrixXd &E);
double energy_operator_norm(const SymBandMatrix &A, const Eigen::MatrixXd &E);

// K T with T = I - P A_c^{-1} R A and one post-smoothing sweep
// K = I - omega D^{-1} A.
Eigen::MatrixXd two_grid_error_operator(const SymBandMatrix &A, double omega);
double two_grid_factor(const SymBandMatrix &A, double omega, int cap = kOperatorCap);
double measured_tgm_factor(const ModelConfig &config, double omega, int cap = kOperatorCap);
// Two-grid factor of every level of a Galerkin hierarchy against its own
// coarse operator, finest first.
std::vector<double> per_level_tgm_factors(const Hierarchy &hierarchy, double omega,
                                          int cap = kOperatorCap);

struct LambdaMinResult
{
  double lambda_min = 0.0;
  double bound = 0.0;  // 1 / (27 b^2)
  bool pass = false;
};

LambdaMinResult verify_lambda_min(const ModelConfig &config, int cap = 4096);

struct ConditionRow
{
  int n = 0;
  double h = 0.0;
  double delta = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double cond = 0.0;
  double reference = 0.0;  // min(delta^-2, h^-2)
};

struct ConditionScaling
{
  std::vector<ConditionRow> rows;
  double max_ratio = 0.0;  // largest cond(h/2) / cond(h)
  double slope = 0.0;      // least-squares slope of log cond against log h
  double expected_slope = 0.0;
  std::string criterion;
  bool pass = false;
};

// Fixed horizons must keep successive condition numbers within a factor 1.5;
// otherwise the log-log slope must be -2 min(beta, 1) within 0.2.
ConditionScaling verify_condition_scaling(double b, HorizonSpec horizon, std::span<const int> Js,
                                          int cap = 4096);

struct JacobiLevel
{
  int m = 0;
  int n = 0;
  double lambda_max = 0.0;    // of D^-1 A
  double first_offdiag = 0.0; // interior A(i, i+1)
  double bound = 0.0;         // 2 when first_offdiag <= 0, else 3
  bool pass = false;
};

std::vector<JacobiLevel> verify_jacobi_bound(const Hierarchy &hierarchy, int cap = 4096);

struct DilatedSumResult
{
  double lambda_min = 0.0;  // of 2 sum_j L_j - n L_1
  double g_min = 0.0;       // sampled min of cos^2(x/2) - (1/n) sum_k cos(k x)
  bool pass = false;
};

DilatedSumResult verify_dilated_sum(int n, int dim, int samples = 4097);

// I - B A for one V-cycle, built column by column from unit initial errors.
Eigen::MatrixXd vcycle_error_operator(const Hierarchy &hierarchy, const SmootherParams &params);
// Requires delta <= h. Uses l pre and l post sweeps with weight omega.
double measured_vcycle_contraction(const ModelConfig &config, int sweeps, double omega,
                                   int cap = kOperatorCap);

}  // namespace nlmg::analysis

#endif  // NLMG_ANALYSIS_HPP
