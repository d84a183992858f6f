// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "nlmg/cost_model.hpp"
#include "nlmg/dense.hpp"
#include "nlmg/error.hpp"
#include "nlmg/spectral.hpp"
#include "nlmg/transfer.hpp"

namespace nlmg::analysis
{

namespace
{

void check_cap(int n, int cap)
{
  if (n > cap)
    throw ResourceLimit("analysis of order " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(cap));
}

void check_omega(double omega)
{
  if (!(omega > 0.0) || !(omega < 1.0))
    throw InvalidArgument("Jacobi weight must lie in (0, 1)");
}

}  // namespace

int ModelConfig::n() const
{
  if (J < 1 || J > 24)
    throw InvalidArgument("grid exponent must lie in [1, 24]");
  return (1 << J) - 1;
}

double ModelConfig::h() const
{
  n();
  return b / static_cast<double>(1 << J);
}

double ModelConfig::delta() const
{
  const double d = horizon.delta(h());
  if (d >= b)
    throw InvalidArgument("horizon must be smaller than the domain length");
  return d;
}

Stencil ModelConfig::stencil() const
{
  return closed_form_stencil(h(), delta());
}

SymBandMatrix ModelConfig::matrix() const
{
  return SymBandMatrix::from_toeplitz(SymBandToeplitz(n(), stencil().coeffs));
}

std::string ModelConfig::describe() const
{
  std::ostringstream os;
  os.precision(6);
  os << "b=" << b << " " << horizon.describe() << " J=" << J;
  return os.str();
}

SmoothingConstants SmoothingConstants::for_omega(double omega, double eta0)
{
  return {omega, smoothing_eta(omega), eta0};
}

bool SmoothingConstants::consistent() const
{
  return eta <= omega * (2.0 - omega * eta0) + kBoundSlack;
}

double smoothing_eta(double omega)
{
  check_omega(omega);
  return 2.0 * omega * (1.0 - omega);
}

double tgm_bound(double omega)
{
  return std::sqrt(1.0 - smoothing_eta(omega) / 6.0);
}

double tgm_bound_local(double omega)
{
  return std::sqrt(1.0 - smoothing_eta(omega));
}

double vcycle_bound(int sweeps, double omega)
{
  if (sweeps < 1)
    throw InvalidArgument("sweep count must be positive");
  if (!(omega > 0.0) || !(omega <= 0.5))
    throw InvalidArgument("V-cycle bound needs a weight in (0, 1/2]");
  return 1.0 / (2.0 * sweeps * omega + 1.0);
}

double kappa_surrogate(const Stencil &stencil)
{
  if (stencil[1] == 0.0)
    throw InvalidArgument("stencil has no nearest-neighbour coupling");
  return stencil[0] / (-2.0 * stencil[1]);
}

bool AnalysisReport::all_pass() const
{
  return std::all_of(records.begin(), records.end(), [](const CheckRecord &r) { return r.pass; });
}

double energy_operator_norm(const Eigen::MatrixXd &A, const Eigen::MatrixXd &E)
{
  if (A.rows() != A.cols() || E.rows() != A.rows() || E.cols() != A.cols())
    throw InvalidArgument("operator dimensions do not match");
  check_cap(static_cast<int>(A.rows()), kDenseCap);
  const Eigen::LLT<Eigen::MatrixXd> llt(A);
  if (llt.info() != Eigen::Success)
    throw InvalidArgument("energy norm needs a symmetric positive definite matrix");
  const auto U = llt.matrixU();
  const Eigen::MatrixXd Y = U.solve<Eigen::OnTheRight>(E);
  const Eigen::MatrixXd M = U * Y;
  const double top = largest_eigenvalue(M.transpose() * M);
  return std::sqrt(std::max(top, 0.0));
}

double energy_operator_norm(const SymBandMatrix &A, const Eigen::MatrixXd &E)
{
  return energy_operator_norm(A.to_dense(), E);
}

Eigen::MatrixXd two_grid_error_operator(const SymBandMatrix &A, double omega)
{
  const int n = A.size();
  const Eigen::MatrixXd Ad = A.to_dense();
  const Eigen::MatrixXd R = restriction_matrix(n);
  const Eigen::MatrixXd P = 2.0 * R.transpose();
  const Eigen::LLT<Eigen::MatrixXd> coarse(galerkin_coarsen(A).to_dense());
  if (coarse.info() != Eigen::Success)
    throw NumericalFailure("coarse operator is not positive definite");

  Eigen::MatrixXd T = -P * coarse.solve(R * Ad);
  T.diagonal().array() += 1.0;

  const Eigen::VectorXd dinv = Ad.diagonal().cwiseInverse();
  Eigen::MatrixXd K = -omega * dinv.asDiagonal() * Ad;
  K.diagonal().array() += 1.0;
  return K * T;
}

double two_grid_factor(const SymBandMatrix &A, double omega, int cap)
{
  check_omega(omega);
  check_cap(A.size(), cap);
  return energy_operator_norm(A, two_grid_error_operator(A, omega));
}

double measured_tgm_factor(const ModelConfig &config, double omega, int cap)
{
  check_cap(config.n(), cap);
  return two_grid_factor(config.matrix(), omega, cap);
}

std::vector<double> per_level_tgm_factors(const Hierarchy &hierarchy, double omega, int cap)
{
  check_cap(hierarchy.finest().n, cap);
  std::vector<double> out;
  for (std::size_t l = 0; l + 1 < hierarchy.depth(); ++l)
    out.push_back(two_grid_factor(hierarchy.level(l).op.to_band(), omega, cap));
  return out;
}

LambdaMinResult verify_lambda_min(const ModelConfig &config, int cap)
{
  LambdaMinResult out;
  out.lambda_min = dense_spectrum(config.matrix(), cap).front();
  out.bound = 1.0 / (27.0 * config.b * config.b);
  out.pass = out.lambda_min >= out.bound - kBoundSlack;
  return out;
}

ConditionScaling verify_condition_scaling(double b, HorizonSpec horizon, std::span<const int> Js,
                                          int cap)
{
  if (Js.size() < 2)
    throw InvalidArgument("condition scaling needs at least two grids");
  ConditionScaling out;
  std::vector<double> hs;
  std::vector<double> conds;
  for (int J : Js)
  {
    const ModelConfig config{b, horizon, J};
    const auto spectrum = dense_spectrum(config.matrix(), cap);
    ConditionRow row;
    row.n = config.n();
    row.h = config.h();
    row.delta = config.delta();
    row.lambda_min = spectrum.front();
    row.lambda_max = spectrum.back();
    row.cond = row.lambda_max / row.lambda_min;
    row.reference = std::min(1.0 / (row.delta * row.delta), 1.0 / (row.h * row.h));
    out.rows.push_back(row);
    hs.push_back(row.h);
    conds.push_back(row.cond);
  }
  for (std::size_t k = 1; k < out.rows.size(); ++k)
    out.max_ratio = std::max(out.max_ratio, out.rows[k].cond / out.rows[k - 1].cond);
  out.slope = loglog_slope(hs, conds);
  out.expected_slope = -2.0 * std::min(horizon.beta, 1.0);
  if (horizon.beta == 0.0)
  {
    out.criterion = "successive condition ratio <= 1.5";
    out.pass = out.max_ratio <= 1.5;
  }
  else
  {
    out.criterion = "log-log slope within 0.2 of expected";
    out.pass = std::abs(out.slope - out.expected_slope) <= 0.2;
  }
  return out;
}

std::vector<JacobiLevel> verify_jacobi_bound(const Hierarchy &hierarchy, int cap)
{
  std::vector<JacobiLevel> out;
  for (std::size_t l = 0; l < hierarchy.depth(); ++l)
  {
    const Level &level = hierarchy.level(l);
    SymBandMatrix a = level.op.to_band();
    check_cap(a.size(), cap);
    std::vector<double> scale(level.inv_diagonal.size());
    for (std::size_t i = 0; i < scale.size(); ++i)
      scale[i] = std::sqrt(level.inv_diagonal[i]);
    for (int i = 0; i < a.size(); ++i)
      for (int k = 0; k <= a.halfwidth() && i + k < a.size(); ++k)
        a.upper(i, k) *= scale[i] * scale[i + k];

    JacobiLevel row;
    row.m = level.m;
    row.n = level.n;
    row.lambda_max = dense_spectrum(a, cap).back();
    const int c = level.n / 2;
    row.first_offdiag = level.n > 1 ? level.op.to_band()(c, c + 1) : 0.0;
    if (row.first_offdiag <= 0.0)
    {
      row.bound = 2.0;
      row.pass = row.lambda_max >= 1.0 - kBoundSlack && row.lambda_max <= 2.0 + kBoundSlack;
    }
    else
    {
      row.bound = 3.0;
      row.pass = row.lambda_max >= 1.0 - kBoundSlack && row.lambda_max < 3.0;
    }
    out.push_back(row);
  }
  return out;
}

DilatedSumResult verify_dilated_sum(int n, int dim, int samples)
{
  if (n < 1 || dim < 1)
    throw InvalidArgument("term count and dimension must be positive");
  if (samples < 2)
    throw InvalidArgument("need at least two samples");
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);
  for (int j = 1; j <= n; ++j)
    M += 2.0 * lj_matrix(dim, j).to_dense();
  M -= static_cast<double>(n) * lj_matrix(dim, 1).to_dense();

  DilatedSumResult out;
  out.lambda_min = symmetric_eigenvalues(M).front();
  out.g_min = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s)
  {
    const double x = std::numbers::pi * s / (samples - 1);
    const double c = std::cos(0.5 * x);
    double sum = 0.0;
    for (int k = 1; k <= n; ++k)
      sum += std::cos(k * x);
    out.g_min = std::min(out.g_min, c * c - sum / n);
  }
  out.pass = out.lambda_min > 0.0 && out.g_min >= -1e-12;
  return out;
}

Eigen::MatrixXd vcycle_error_operator(const Hierarchy &hierarchy, const SmootherParams &params)
{
  const int n = hierarchy.finest().n;
  check_cap(n, kDenseCap);
  VCycle cycle(hierarchy, params);
  Eigen::MatrixXd E(n, n);
  const std::vector<double> zero(static_cast<std::size_t>(n), 0.0);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
  {
    std::fill(v.begin(), v.end(), 0.0);
    v[j] = 1.0;
    cycle.apply(zero, v);
    for (int i = 0; i < n; ++i)
      E(i, j) = v[i];
  }
  return E;
}

double measured_vcycle_contraction(const ModelConfig &config, int sweeps, double omega, int cap)
{
  if (sweeps < 1)
    throw InvalidArgument("sweep count must be positive");
  check_omega(omega);
  if (horizon_ratio(config.delta(), config.h()).R > 1.0)
    throw InvalidArgument("V-cycle contraction is only defined for delta <= h");
  check_cap(config.n(), cap);
  const SymBandMatrix A = config.matrix();
  const Hierarchy hier = Hierarchy::galerkin(A, config.h());
  const SmootherParams params{omega, omega, sweeps, sweeps};
  return energy_operator_norm(A, vcycle_error_operator(hier, params));
}

}  // namespace nlmg::analysis
