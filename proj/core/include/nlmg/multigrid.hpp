// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_MULTIGRID_HPP
#define NLMG_MULTIGRID_HPP

#include <span>
#include <vector>

#include "nlmg/hierarchy.hpp"

namespace nlmg
{

// Damped Jacobi smoothing around the coarse-grid correction.
struct SmootherParams
{
  double omega_pre = 1.0;
  double omega_post = 1.0 / 3.0;
  int pre_sweeps = 1;
  int post_sweeps = 2;

  void validate() const;
};

// v <- v + omega D^{-1} (f - A v), in place.
void jacobi_sweep(const Level &level, std::span<double> v, std::span<const double> f,
                  double omega);

// Reusable V-cycle with its own scratch space. Not thread-safe; create one
// per thread. The hierarchy must outlive it.
class VCycle
{
public:
  VCycle(const Hierarchy &hierarchy, SmootherParams params);

  // One cycle for A v = f starting from the incoming v.
  void apply(std::span<const double> f, std::span<double> v);

  const Hierarchy &hierarchy() const { return *hierarchy_; }
  const SmootherParams &params() const { return params_; }

private:
  void cycle(std::size_t l, std::span<const double> f, std::span<double> v);

  const Hierarchy *hierarchy_;
  SmootherParams params_;
  std::vector<std::vector<double>> scratch_;
  std::vector<std::vector<double>> coarse_rhs_;
  std::vector<std::vector<double>> coarse_sol_;
};

std::vector<double> v_cycle(const Hierarchy &hierarchy, const SmootherParams &params,
                            std::span<const double> f, std::span<const double> v0);

struct SolveOptions
{
  double tol = 1e-8;  // on ||r||_2 / ||r_0||_2
  int max_cycles = 500;
};

struct SolveReport
{
  int cycles = 0;
  std::vector<double> residual_ratios;  // after each cycle
  double cpu_seconds = 0.0;
};

struct SolveResult
{
  std::vector<double> u;
  SolveReport report;
};

// Repeated V-cycles from a zero initial guess. Throws NumericalFailure when
// the tolerance is not met within max_cycles.
SolveResult solve(const Hierarchy &hierarchy, const SmootherParams &params,
                  std::span<const double> f, const SolveOptions &options = {});

}  // namespace nlmg

#endif  // NLMG_MULTIGRID_HPP
