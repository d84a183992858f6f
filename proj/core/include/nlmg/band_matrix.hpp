// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_BAND_MATRIX_HPP
#define NLMG_BAND_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace nlmg
{

// Symmetric banded Toeplitz matrix of order n given by its first column
// t_0..t_s. Entries past n - 1 are dropped on construction.
class SymBandToeplitz
{
public:
  SymBandToeplitz() = default;
  SymBandToeplitz(int n, std::vector<double> band);

  int size() const { return n_; }
  int halfwidth() const { return static_cast<int>(band_.size()) - 1; }
  std::span<const double> band() const { return band_; }
  double coefficient(int k) const;
  double operator()(int i, int j) const;

  // y = A x with a fixed left-to-right accumulation order.
  void multiply(std::span<const double> x, std::span<double> y) const;

  std::size_t stored_coefficients() const { return band_.size(); }
  Eigen::MatrixXd to_dense() const;

private:
  int n_ = 0;
  std::vector<double> band_;
};

// General symmetric band matrix. Row i stores A(i, i + k) for k = 0..s.
class SymBandMatrix
{
public:
  SymBandMatrix() = default;
  SymBandMatrix(int n, int halfwidth);

  static SymBandMatrix from_toeplitz(const SymBandToeplitz &t);
  static SymBandMatrix from_dense(const Eigen::MatrixXd &a, int halfwidth);

  int size() const { return n_; }
  int halfwidth() const { return s_; }
  double operator()(int i, int j) const;

  double &upper(int i, int k) { return data_[static_cast<std::size_t>(i) * (s_ + 1) + k]; }
  double upper(int i, int k) const { return data_[static_cast<std::size_t>(i) * (s_ + 1) + k]; }

  std::vector<double> diagonal() const;
  void multiply(std::span<const double> x, std::span<double> y) const;

  // Removes trailing diagonals that are identically zero.
  void trim();

  std::size_t stored_coefficients() const { return data_.size(); }
  Eigen::MatrixXd to_dense() const;

private:
  int n_ = 0;
  int s_ = 0;
  std::vector<double> data_;
};

std::vector<double> matvec_direct(const SymBandToeplitz &a, std::span<const double> x);
std::vector<double> matvec_direct(const SymBandMatrix &a, std::span<const double> x);

}  // namespace nlmg

#endif  // NLMG_BAND_MATRIX_HPP
