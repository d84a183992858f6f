// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg/dense.hpp"

#include <lapacke.h>

#include <string>

#include "nlmg/error.hpp"

namespace nlmg
{

namespace
{

void check_cap(Eigen::Index n, int cap)
{
  if (n > cap)
    throw ResourceLimit("dense eigenproblem of order " + std::to_string(n) +
                        " exceeds the cap of " + std::to_string(cap));
  if (n < 1)
    throw InvalidArgument("matrix must be non-empty");
}

void check_info(lapack_int info, const char *routine)
{
  if (info != 0)
    throw NumericalFailure(std::string(routine) + " failed with info " + std::to_string(info));
}

}  // namespace

std::vector<double> dense_spectrum(const SymBandMatrix &a, int cap)
{
  const int n = a.size();
  check_cap(n, cap);
  const int s = a.halfwidth();
  if (4 * s >= n)
    return symmetric_eigenvalues(a.to_dense(), cap);

  // Upper band storage, column major: ab(s + i - j, j) = A(i, j).
  const lapack_int ldab = s + 1;
  std::vector<double> ab(static_cast<std::size_t>(ldab) * n, 0.0);
  for (int j = 0; j < n; ++j)
    for (int i = std::max(0, j - s); i <= j; ++i)
      ab[static_cast<std::size_t>(j) * ldab + (s + i - j)] = a(i, j);
  std::vector<double> w(n);
  const lapack_int info =
    LAPACKE_dsbev(LAPACK_COL_MAJOR, 'N', 'U', n, s, ab.data(), ldab, w.data(), nullptr, 1);
  check_info(info, "dsbev");
  return w;
}

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd &a, int cap)
{
  check_cap(a.rows(), cap);
  if (a.rows() != a.cols())
    throw InvalidArgument("matrix must be square");
  Eigen::MatrixXd work = a;
  const lapack_int n = static_cast<lapack_int>(a.rows());
  std::vector<double> w(n);
  const lapack_int info =
    LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'U', n, work.data(), n, w.data());
  check_info(info, "dsyevd");
  return w;
}

EigenPairs dense_eigenpairs(const SymBandMatrix &a, int cap)
{
  check_cap(a.size(), cap);
  EigenPairs out;
  out.vectors = a.to_dense();
  const lapack_int n = a.size();
  out.values.resize(n);
  const lapack_int info =
    LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', n, out.vectors.data(), n, out.values.data());
  check_info(info, "dsyevd");
  return out;
}

double largest_eigenvalue(const Eigen::MatrixXd &a, int cap)
{
  check_cap(a.rows(), cap);
  if (a.rows() != a.cols())
    throw InvalidArgument("matrix must be square");
  Eigen::MatrixXd work = a;
  const lapack_int n = static_cast<lapack_int>(a.rows());
  lapack_int found = 0;
  double w = 0.0;
  std::vector<lapack_int> isuppz(2);
  const lapack_int info =
    LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'N', 'I', 'U', n, work.data(), n, 0.0, 0.0, n, n, 0.0,
                   &found, &w, nullptr, 1, isuppz.data());
  check_info(info, "dsyevr");
  if (found != 1)
    throw NumericalFailure("dsyevr did not return the requested eigenvalue");
  return w;
}

}  // namespace nlmg
