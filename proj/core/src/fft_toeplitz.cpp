// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg/fft_toeplitz.hpp"

#include <cmath>
#include <cstring>
#include <mutex>

#include <fftw3.h>

#include "nlmg/error.hpp"

namespace nlmg
{

namespace
{

// The FFTW planner is not reentrant; plan execution is.
std::mutex &planner_mutex()
{
  static std::mutex m;
  return m;
}

std::size_t embedding_length(int n)
{
  std::size_t L = 1;
  while (L < 2 * static_cast<std::size_t>(n))
    L <<= 1;
  return L;
}

struct FftwDeleter
{
  void operator()(void *p) const { fftw_free(p); }
};

template <class T>
using FftwBuffer = std::unique_ptr<T[], FftwDeleter>;

template <class T>
FftwBuffer<T> fftw_buffer(std::size_t count)
{
  auto *p = static_cast<T *>(fftw_malloc(sizeof(T) * count));
  if (p == nullptr)
    throw ResourceLimit("FFT workspace allocation failed");
  return FftwBuffer<T>(p);
}

}  // namespace

struct ToeplitzFftOperator::Plans
{
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  explicit Plans(std::size_t L)
  {
    auto real = fftw_buffer<double>(L);
    auto spec = fftw_buffer<fftw_complex>(L / 2 + 1);
    std::lock_guard lock(planner_mutex());
    const int len = static_cast<int>(L);
    forward = fftw_plan_dft_r2c_1d(len, real.get(), spec.get(), FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(len, spec.get(), real.get(), FFTW_ESTIMATE);
    if (forward == nullptr || backward == nullptr)
      throw NumericalFailure("FFT planning failed");
  }

  ~Plans()
  {
    std::lock_guard lock(planner_mutex());
    if (forward != nullptr)
      fftw_destroy_plan(forward);
    if (backward != nullptr)
      fftw_destroy_plan(backward);
  }
};

ToeplitzFftOperator::ToeplitzFftOperator(const SymBandToeplitz &a)
  : n_(a.size()), L_(embedding_length(a.size()))
{
  plans_ = std::make_unique<Plans>(L_);

  auto column = fftw_buffer<double>(L_);
  auto spec = fftw_buffer<fftw_complex>(L_ / 2 + 1);
  std::memset(column.get(), 0, sizeof(double) * L_);
  for (int k = 0; k <= a.halfwidth(); ++k)
  {
    column[k] = a.coefficient(k);
    if (k > 0)
      column[L_ - k] = a.coefficient(k);
  }
  fftw_execute_dft_r2c(plans_->forward, column.get(), spec.get());

  symbol_.resize(L_ / 2 + 1);
  const double scale = 1.0 / static_cast<double>(L_);
  for (std::size_t k = 0; k < symbol_.size(); ++k)
    symbol_[k] = std::complex<double>(spec[k][0], spec[k][1]) * scale;
}

ToeplitzFftOperator::~ToeplitzFftOperator() = default;

void ToeplitzFftOperator::multiply(std::span<const double> x, std::span<double> y) const
{
  if (x.size() != static_cast<std::size_t>(n_) || y.size() != static_cast<std::size_t>(n_))
    throw InvalidArgument("vector length does not match matrix order");

  auto real = fftw_buffer<double>(L_);
  auto spec = fftw_buffer<fftw_complex>(L_ / 2 + 1);
  std::memcpy(real.get(), x.data(), sizeof(double) * n_);
  std::memset(real.get() + n_, 0, sizeof(double) * (L_ - n_));

  fftw_execute_dft_r2c(plans_->forward, real.get(), spec.get());
  for (std::size_t k = 0; k < symbol_.size(); ++k)
  {
    const std::complex<double> v(spec[k][0], spec[k][1]);
    const std::complex<double> w = v * symbol_[k];
    spec[k][0] = w.real();
    spec[k][1] = w.imag();
  }
  fftw_execute_dft_c2r(plans_->backward, spec.get(), real.get());
  std::memcpy(y.data(), real.get(), sizeof(double) * n_);
}

std::vector<double> matvec_fft(const SymBandToeplitz &a, std::span<const double> x)
{
  ToeplitzFftOperator op(a);
  std::vector<double> y(x.size());
  op.multiply(x, y);
  return y;
}

double fft_matvec_flops(int n)
{
  const double L = static_cast<double>(embedding_length(n));
  // Two real transforms plus the pointwise complex product.
  return 2.0 * 2.5 * L * std::log2(L) + 3.0 * L;
}

}  // namespace nlmg
