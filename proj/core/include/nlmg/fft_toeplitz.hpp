// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_FFT_TOEPLITZ_HPP
#define NLMG_FFT_TOEPLITZ_HPP

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "nlmg/band_matrix.hpp"

namespace nlmg
{

// Toeplitz matrix-vector product through a circulant embedding of length
// L = next power of two >= 2n. The embedded symbol is computed once; each
// multiply owns its scratch buffers so concurrent calls are safe.
class ToeplitzFftOperator
{
public:
  explicit ToeplitzFftOperator(const SymBandToeplitz &a);
  ~ToeplitzFftOperator();

  ToeplitzFftOperator(const ToeplitzFftOperator &) = delete;
  ToeplitzFftOperator &operator=(const ToeplitzFftOperator &) = delete;

  int size() const { return n_; }
  std::size_t transform_size() const { return L_; }

  void multiply(std::span<const double> x, std::span<double> y) const;

private:
  struct Plans;

  int n_;
  std::size_t L_;
  std::unique_ptr<Plans> plans_;
  std::vector<std::complex<double>> symbol_;
};

std::vector<double> matvec_fft(const SymBandToeplitz &a, std::span<const double> x);

// Flop estimate of one FFT product of order n.
double fft_matvec_flops(int n);

}  // namespace nlmg

#endif  // NLMG_FFT_TOEPLITZ_HPP
