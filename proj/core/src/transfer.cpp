// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg/transfer.hpp"

#include <algorithm>
#include <cmath>

#include "nlmg/error.hpp"

namespace nlmg
{

namespace
{

void require_nested(int n_fine)
{
  if (!is_nested_grid_size(n_fine) || n_fine < 3)
    throw InvalidArgument("fine grid size must be 2^m - 1 with m >= 2");
}

constexpr double kWeights[3] = {1.0, 2.0, 1.0};

// Coefficients of the closed-form coarsening, parameterised by the number
// of merged points H = 2^(k-1). All of them are integers.
template <class T>
struct CoarseningWeights
{
  T H;
  T C;

  explicit CoarseningWeights(int k)
  {
    H = T(1) << (k - 1);
    C = (T(1) << (k - 2)) * ((T(1) << (2 * k - 2)) - 1) / 3;
  }

  static T cubic6(T t) { return (t - 1) * t * (t + 1) / 6; }
  static T cubic23(T t) { return 2 * ((t - 1) * t * (t + 1) / 3); }

  T first(T m) const
  {
    if (m >= 1 && m <= H)
      return 8 * C - (m * m - 1) * (2 * H - m);
    if (m >= H && m <= 2 * H - 1)
    {
      const T q = 2 * H - m;
      return (q - 1) * q * (q + 1) / 3;
    }
    return 0;
  }

  T second(T m) const
  {
    if (m >= 1 && m <= H)
      return 2 * C + m * m * H - cubic23(m);
    if (m >= H && m <= 2 * H)
    {
      const T q = 2 * H - m;
      return 2 * C + q * q * H - cubic23(q) - cubic6(m - H);
    }
    if (m >= 2 * H && m <= 3 * H - 1)
      return cubic6(3 * H - m);
    return 0;
  }

  T general(T j, T m) const
  {
    if (m >= (j - 2) * H && m <= (j - 1) * H)
      return cubic6(m - (j - 2) * H);
    if (m >= (j - 1) * H && m <= j * H)
    {
      const T t = m - (j - 1) * H;
      return 2 * C + t * t * H - cubic6(j * H - m) - cubic23(t);
    }
    if (m >= j * H && m <= (j + 1) * H)
    {
      const T q = (j + 1) * H - m;
      return 2 * C + q * q * H - cubic6(m - j * H) - cubic23(q);
    }
    if (m >= (j + 1) * H && m <= (j + 2) * H - 1)
      return cubic6((j + 2) * H - m);
    return 0;
  }
};

template <class V>
std::vector<V> coarsen_closed_form(std::span<const V> band, int k)
{
  if (band.empty())
    throw InvalidArgument("band must contain the diagonal");
  if (k < 1 || k > 20)
    throw InvalidArgument("coarsening depth must lie in [1, 20]");
  if (k == 1)
    return std::vector<V>(band.begin(), band.end());

  using I = std::int64_t;
  const CoarseningWeights<I> w(k);
  const I s = static_cast<I>(band.size()) - 1;
  auto a = [&](I m) { return m <= s ? band[m] : V(0); };

  const I jmax = s / w.H + 2;
  std::vector<V> out(static_cast<std::size_t>(jmax) + 1, V(0));

  V acc = static_cast<V>(4 * w.C + w.H) * a(0);
  for (I m = 1; m <= std::min(s, 2 * w.H - 1); ++m)
    acc += static_cast<V>(w.first(m)) * a(m);
  out[0] = acc;

  acc = static_cast<V>(w.C) * a(0);
  for (I m = 1; m <= std::min(s, 3 * w.H - 1); ++m)
    acc += static_cast<V>(w.second(m)) * a(m);
  out[1] = acc;

  for (I j = 2; j <= jmax; ++j)
  {
    acc = V(0);
    for (I m = (j - 2) * w.H; m <= std::min(s, (j + 2) * w.H - 1); ++m)
      acc += static_cast<V>(w.general(j, m)) * a(m);
    out[j] = acc;
  }
  while (out.size() > 2 && out.back() == V(0))
    out.pop_back();
  return out;
}

}  // namespace

bool is_nested_grid_size(int n)
{
  if (n < 1)
    return false;
  const unsigned v = static_cast<unsigned>(n) + 1u;
  return (v & (v - 1u)) == 0u;
}

int coarse_size(int n_fine)
{
  require_nested(n_fine);
  return (n_fine - 1) / 2;
}

std::vector<double> restrict_vector(std::span<const double> fine)
{
  const int n = static_cast<int>(fine.size());
  const int nc = coarse_size(n);
  std::vector<double> coarse(static_cast<std::size_t>(nc));
  for (int I = 0; I < nc; ++I)
    coarse[I] = 0.25 * fine[2 * I] + 0.5 * fine[2 * I + 1] + 0.25 * fine[2 * I + 2];
  return coarse;
}

std::vector<double> prolong_vector(std::span<const double> coarse, int n_fine)
{
  const int nc = coarse_size(n_fine);
  if (static_cast<int>(coarse.size()) != nc)
    throw InvalidArgument("coarse vector length does not match the fine grid");
  std::vector<double> fine(static_cast<std::size_t>(n_fine), 0.0);
  for (int I = 0; I < nc; ++I)
  {
    fine[2 * I] += 0.5 * coarse[I];
    fine[2 * I + 1] += coarse[I];
    fine[2 * I + 2] += 0.5 * coarse[I];
  }
  return fine;
}

Eigen::MatrixXd restriction_matrix(int n_fine)
{
  const int nc = coarse_size(n_fine);
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(nc, n_fine);
  for (int I = 0; I < nc; ++I)
  {
    r(I, 2 * I) = 0.25;
    r(I, 2 * I + 1) = 0.5;
    r(I, 2 * I + 2) = 0.25;
  }
  return r;
}

Eigen::MatrixXd prolongation_matrix(int n_fine)
{
  return 2.0 * restriction_matrix(n_fine).transpose();
}

SymBandMatrix galerkin_coarsen(const SymBandMatrix &fine)
{
  const int n = fine.size();
  const int nc = coarse_size(n);
  const int s = fine.halfwidth();
  SymBandMatrix coarse(nc, (s + 2) / 2);
  const int sc = coarse.halfwidth();
  for (int I = 0; I < nc; ++I)
    for (int k = 0; k <= sc && I + k < nc; ++k)
    {
      const int J = I + k;
      double acc = 0.0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          acc += kWeights[a] * kWeights[b] * fine(2 * I + a, 2 * J + b);
      coarse.upper(I, k) = acc / 8.0;
    }
  coarse.trim();
  return coarse;
}

std::vector<double> interior_stencil(const SymBandMatrix &a)
{
  const int c = a.size() / 2;
  std::vector<double> row;
  for (int k = 0; k <= a.halfwidth() && c + k < a.size(); ++k)
    row.push_back(a(c, c + k));
  return row;
}

std::vector<std::int64_t> closed_form_coarsen(std::span<const std::int64_t> band, int k)
{
  return coarsen_closed_form<std::int64_t>(band, k);
}

std::vector<double> closed_form_coarsen(std::span<const double> band, int k)
{
  return coarsen_closed_form<double>(band, k);
}

std::vector<double> coarsen_by_convolution(std::span<const double> band, int k)
{
  if (band.empty())
    throw InvalidArgument("band must contain the diagonal");
  if (k < 1)
    throw InvalidArgument("coarsening depth must be at least one");
  std::vector<double> a(band.begin(), band.end());
  for (int step = 1; step < k; ++step)
  {
    const int s = static_cast<int>(a.size()) - 1;
    auto at = [&](int m)
    {
      m = std::abs(m);
      return m <= s ? a[m] : 0.0;
    };
    const int sc = (s + 2) / 2;
    std::vector<double> next(static_cast<std::size_t>(sc) + 1, 0.0);
    for (int j = 0; j <= sc; ++j)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
          next[j] += kWeights[p] * kWeights[q] * at(2 * j + p - q);
    while (next.size() > 2 && next.back() == 0.0)
      next.pop_back();
    a = std::move(next);
  }
  return a;
}

}  // namespace nlmg
