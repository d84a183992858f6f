// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg/hierarchy.hpp"

#include <cmath>

#include "nlmg/error.hpp"
#include "nlmg/transfer.hpp"

namespace nlmg
{

const char *to_string(Coarsening c)
{
  return c == Coarsening::galerkin ? "galerkin" : "rediscretize";
}

const char *to_string(MatvecPath p)
{
  switch (p)
  {
  case MatvecPath::direct:
    return "direct";
  case MatvecPath::fft:
    return "fft";
  case MatvecPath::automatic:
    return "auto";
  }
  return "direct";
}

LevelOperator::LevelOperator(SymBandMatrix a) : op_(std::move(a)) {}

LevelOperator::LevelOperator(SymBandToeplitz a, MatvecPath path) : op_(std::move(a))
{
  const auto &t = std::get<SymBandToeplitz>(op_);
  const double direct = static_cast<double>(t.size()) * (2.0 * t.halfwidth() + 1.0);
  const bool want = path == MatvecPath::fft ||
                    (path == MatvecPath::automatic && fft_matvec_flops(t.size()) < direct);
  if (want)
    fft_ = std::make_shared<const ToeplitzFftOperator>(t);
}

int LevelOperator::size() const
{
  return std::visit([](const auto &a) { return a.size(); }, op_);
}

int LevelOperator::halfwidth() const
{
  return std::visit([](const auto &a) { return a.halfwidth(); }, op_);
}

void LevelOperator::multiply(std::span<const double> x, std::span<double> y) const
{
  if (fft_)
    fft_->multiply(x, y);
  else
    std::visit([&](const auto &a) { a.multiply(x, y); }, op_);
}

std::vector<double> LevelOperator::diagonal() const
{
  if (const auto *t = std::get_if<SymBandToeplitz>(&op_))
    return std::vector<double>(static_cast<std::size_t>(t->size()), t->coefficient(0));
  return std::get<SymBandMatrix>(op_).diagonal();
}

SymBandMatrix LevelOperator::to_band() const
{
  if (const auto *t = std::get_if<SymBandToeplitz>(&op_))
    return SymBandMatrix::from_toeplitz(*t);
  return std::get<SymBandMatrix>(op_);
}

Eigen::MatrixXd LevelOperator::to_dense() const
{
  return std::visit([](const auto &a) { return a.to_dense(); }, op_);
}

std::size_t LevelOperator::stored_coefficients() const
{
  return std::visit([](const auto &a) { return a.stored_coefficients(); }, op_);
}

double LevelOperator::matvec_flops() const
{
  if (fft_)
    return fft_matvec_flops(size());
  return 2.0 * size() * (2.0 * halfwidth() + 1.0);
}

void Hierarchy::push_level(int n, double h, LevelOperator op)
{
  Level lvl{0, n, h, std::move(op), {}};
  lvl.inv_diagonal = lvl.op.diagonal();
  for (double &d : lvl.inv_diagonal)
  {
    if (!(d > 0.0))
      throw NumericalFailure("level operator has a non-positive diagonal entry");
    d = 1.0 / d;
  }
  levels_.push_back(std::move(lvl));
}

void Hierarchy::finalize()
{
  const int depth = static_cast<int>(levels_.size());
  for (int i = 0; i < depth; ++i)
    levels_[i].m = depth - i;

  auto factor = std::make_shared<Eigen::LLT<Eigen::MatrixXd>>(coarsest().op.to_dense());
  if (factor->info() != Eigen::Success)
    throw NumericalFailure("coarsest operator is not positive definite");
  coarse_factor_ = std::move(factor);
}

namespace
{

bool keep_coarsening(int n, const HierarchyOptions &options)
{
  return n > std::max(options.coarsest_size, 1) && n >= 3 && is_nested_grid_size(n);
}

void check_options(const HierarchyOptions &options)
{
  if (options.coarsest_size < 1)
    throw InvalidArgument("coarsest level size must be at least one");
}

}  // namespace

Hierarchy Hierarchy::galerkin(const SymBandMatrix &finest, double h, HierarchyOptions options)
{
  check_options(options);
  options.strategy = Coarsening::galerkin;
  Hierarchy hier;
  hier.options_ = options;
  SymBandMatrix a = finest;
  hier.push_level(a.size(), h, LevelOperator(a));
  while (keep_coarsening(a.size(), options))
  {
    a = galerkin_coarsen(a);
    h *= 2.0;
    hier.push_level(a.size(), h, LevelOperator(a));
  }
  hier.finalize();
  return hier;
}

Hierarchy Hierarchy::rediscretized(const StencilFactory &make, double h, int n,
                                   HierarchyOptions options)
{
  check_options(options);
  if (!make)
    throw InvalidArgument("stencil factory is empty");
  options.strategy = Coarsening::rediscretize;
  Hierarchy hier;
  hier.options_ = options;
  for (;;)
  {
    const Stencil st = make(h);
    hier.push_level(n, h, LevelOperator(SymBandToeplitz(n, st.coeffs), options.matvec));
    if (!keep_coarsening(n, options))
      break;
    n = coarse_size(n);
    h *= 2.0;
  }
  hier.finalize();
  return hier;
}

Hierarchy Hierarchy::build(const AssembledSystem &sys, const Kernel &kernel,
                           HierarchyOptions options)
{
  if (options.strategy == Coarsening::galerkin)
    return galerkin(SymBandMatrix::from_toeplitz(SymBandToeplitz(sys.n, sys.stencil.coeffs)),
                    sys.h, options);
  const double delta = sys.delta;
  const Stencil finest = sys.stencil;
  const double h0 = sys.h;
  return rediscretized(
    [&](double h) { return h == h0 ? finest : make_stencil(h, delta, kernel); }, sys.h, sys.n,
    options);
}

void Hierarchy::coarse_solve(std::span<const double> f, std::span<double> v) const
{
  const int n = coarsest().n;
  if (static_cast<int>(f.size()) != n || static_cast<int>(v.size()) != n)
    throw InvalidArgument("coarse vector length does not match the coarsest level");
  Eigen::Map<const Eigen::VectorXd> rhs(f.data(), n);
  Eigen::Map<Eigen::VectorXd> out(v.data(), n);
  out = coarse_factor_->solve(rhs);
}

std::size_t Hierarchy::stored_coefficients() const
{
  std::size_t total = 0;
  for (const auto &l : levels_)
    total += l.op.stored_coefficients();
  return total;
}

}  // namespace nlmg
