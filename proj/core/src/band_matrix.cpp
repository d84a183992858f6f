// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg/band_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "nlmg/error.hpp"

namespace nlmg
{

namespace
{

void check_lengths(int n, std::size_t x, std::size_t y)
{
  if (x != static_cast<std::size_t>(n) || y != static_cast<std::size_t>(n))
    throw InvalidArgument("vector length does not match matrix order");
}

}  // namespace

SymBandToeplitz::SymBandToeplitz(int n, std::vector<double> band) : n_(n), band_(std::move(band))
{
  if (n < 1)
    throw InvalidArgument("matrix order must be positive");
  if (band_.empty())
    throw InvalidArgument("band must contain the diagonal");
  for (double v : band_)
    if (!std::isfinite(v))
      throw InvalidArgument("band contains a non-finite value");
  if (band_.size() > static_cast<std::size_t>(n))
    band_.resize(static_cast<std::size_t>(n));
}

double SymBandToeplitz::coefficient(int k) const
{
  k = std::abs(k);
  return k < static_cast<int>(band_.size()) ? band_[k] : 0.0;
}

double SymBandToeplitz::operator()(int i, int j) const
{
  return coefficient(i - j);
}

void SymBandToeplitz::multiply(std::span<const double> x, std::span<double> y) const
{
  check_lengths(n_, x.size(), y.size());
  const int s = halfwidth();
  const double *t = band_.data();
  for (int i = 0; i < n_; ++i)
  {
    const int lo = std::min(s, i);
    const int hi = std::min(s, n_ - 1 - i);
    double acc = t[0] * x[i];
    for (int k = 1; k <= lo; ++k)
      acc += t[k] * x[i - k];
    for (int k = 1; k <= hi; ++k)
      acc += t[k] * x[i + k];
    y[i] = acc;
  }
}

Eigen::MatrixXd SymBandToeplitz::to_dense() const
{
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = std::max(0, i - halfwidth()); j <= std::min(n_ - 1, i + halfwidth()); ++j)
      a(i, j) = coefficient(i - j);
  return a;
}

SymBandMatrix::SymBandMatrix(int n, int halfwidth) : n_(n), s_(halfwidth)
{
  if (n < 1)
    throw InvalidArgument("matrix order must be positive");
  if (halfwidth < 0)
    throw InvalidArgument("halfwidth must be non-negative");
  s_ = std::min(halfwidth, n - 1);
  data_.assign(static_cast<std::size_t>(n_) * (s_ + 1), 0.0);
}

SymBandMatrix SymBandMatrix::from_toeplitz(const SymBandToeplitz &t)
{
  SymBandMatrix a(t.size(), t.halfwidth());
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k <= a.s_ && i + k < a.n_; ++k)
      a.upper(i, k) = t.coefficient(k);
  return a;
}

SymBandMatrix SymBandMatrix::from_dense(const Eigen::MatrixXd &d, int halfwidth)
{
  if (d.rows() != d.cols())
    throw InvalidArgument("matrix must be square");
  SymBandMatrix a(static_cast<int>(d.rows()), halfwidth);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k <= a.s_ && i + k < a.n_; ++k)
      a.upper(i, k) = d(i, i + k);
  return a;
}

double SymBandMatrix::operator()(int i, int j) const
{
  if (i > j)
    std::swap(i, j);
  const int k = j - i;
  if (i < 0 || j >= n_ || k > s_)
    return 0.0;
  return upper(i, k);
}

std::vector<double> SymBandMatrix::diagonal() const
{
  std::vector<double> d(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    d[i] = upper(i, 0);
  return d;
}

void SymBandMatrix::multiply(std::span<const double> x, std::span<double> y) const
{
  check_lengths(n_, x.size(), y.size());
  std::fill(y.begin(), y.end(), 0.0);
  // Each stored row is used twice: as a dot product for the upper part and
  // as an axpy for the mirrored lower part. Both walk memory contiguously.
  for (int i = 0; i < n_; ++i)
  {
    const double *row = data_.data() + static_cast<std::size_t>(i) * (s_ + 1);
    const int hi = std::min(s_, n_ - 1 - i);
    const double xi = x[i];
    double acc = row[0] * xi;
    for (int k = 1; k <= hi; ++k)
    {
      acc += row[k] * x[i + k];
      y[i + k] += row[k] * xi;
    }
    y[i] += acc;
  }
}

void SymBandMatrix::trim()
{
  int s = s_;
  while (s > 0)
  {
    bool zero = true;
    for (int i = 0; i + s < n_ && zero; ++i)
      zero = upper(i, s) == 0.0;
    if (!zero)
      break;
    --s;
  }
  if (s == s_)
    return;
  std::vector<double> packed(static_cast<std::size_t>(n_) * (s + 1));
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k <= s; ++k)
      packed[static_cast<std::size_t>(i) * (s + 1) + k] = upper(i, k);
  data_ = std::move(packed);
  s_ = s;
}

Eigen::MatrixXd SymBandMatrix::to_dense() const
{
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k <= s_ && i + k < n_; ++k)
    {
      a(i, i + k) = upper(i, k);
      a(i + k, i) = upper(i, k);
    }
  return a;
}

std::vector<double> matvec_direct(const SymBandToeplitz &a, std::span<const double> x)
{
  std::vector<double> y(x.size());
  a.multiply(x, y);
  return y;
}

std::vector<double> matvec_direct(const SymBandMatrix &a, std::span<const double> x)
{
  std::vector<double> y(x.size());
  a.multiply(x, y);
  return y;
}

}  // namespace nlmg
