// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_HIERARCHY_HPP
#define NLMG_HIERARCHY_HPP

#include <functional>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "nlmg/band_matrix.hpp"
#include "nlmg/fft_toeplitz.hpp"
#include "nlmg/horizon.hpp"
#include "nlmg/problem.hpp"
#include "nlmg/stencil.hpp"

namespace nlmg
{

enum class Coarsening
{
  galerkin,      // A_{m-1} = R A_m P
  rediscretize,  // assemble the stencil again on the coarser mesh
};

// Only Toeplitz levels can use the FFT product.
enum class MatvecPath
{
  direct,
  fft,
  automatic,  // FFT when its flop estimate beats the banded product
};

const char *to_string(Coarsening c);
const char *to_string(MatvecPath p);

class LevelOperator
{
public:
  explicit LevelOperator(SymBandMatrix a);
  LevelOperator(SymBandToeplitz a, MatvecPath path);

  int size() const;
  int halfwidth() const;
  bool is_toeplitz() const { return std::holds_alternative<SymBandToeplitz>(op_); }
  bool uses_fft() const { return fft_ != nullptr; }

  void multiply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> diagonal() const;
  SymBandMatrix to_band() const;
  Eigen::MatrixXd to_dense() const;

  std::size_t stored_coefficients() const;
  double matvec_flops() const;

private:
  std::variant<SymBandMatrix, SymBandToeplitz> op_;
  std::shared_ptr<const ToeplitzFftOperator> fft_;
};

struct Level
{
  int m = 0;  // level index; the coarsest level is 1
  int n = 0;
  double h = 0.0;
  LevelOperator op;
  std::vector<double> inv_diagonal;
};

struct HierarchyOptions
{
  Coarsening strategy = Coarsening::galerkin;
  // Stop coarsening once a level has at most this many unknowns.
  int coarsest_size = 1;
  MatvecPath matvec = MatvecPath::direct;
};

using StencilFactory = std::function<Stencil(double h)>;

// Immutable grid hierarchy, finest level first. Safe to share between
// concurrent solves.
class Hierarchy
{
public:
  static Hierarchy galerkin(const SymBandMatrix &finest, double h, HierarchyOptions options = {});
  static Hierarchy rediscretized(const StencilFactory &make, double h, int n,
                                 HierarchyOptions options = {});
  // Dispatches on options.strategy. Coarse stencils keep the horizon of the
  // assembled system.
  static Hierarchy build(const AssembledSystem &sys, const Kernel &kernel,
                         HierarchyOptions options = {});

  std::size_t depth() const { return levels_.size(); }
  const Level &level(std::size_t i) const { return levels_.at(i); }
  const Level &finest() const { return levels_.front(); }
  const Level &coarsest() const { return levels_.back(); }
  const HierarchyOptions &options() const { return options_; }

  // Exact solve on the coarsest level.
  void coarse_solve(std::span<const double> f, std::span<double> v) const;

  std::size_t stored_coefficients() const;

private:
  Hierarchy() = default;
  void push_level(int n, double h, LevelOperator op);
  void finalize();

  std::vector<Level> levels_;
  HierarchyOptions options_;
  std::shared_ptr<const Eigen::LLT<Eigen::MatrixXd>> coarse_factor_;
};

}  // namespace nlmg

#endif  // NLMG_HIERARCHY_HPP
