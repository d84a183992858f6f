// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run. Prints one PASS/FAIL line per criterion, with detail lines
// underneath, and exits non-zero if any criterion fails.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "nlmg/analysis.hpp"
#include "nlmg/band_matrix.hpp"
#include "nlmg/cost_model.hpp"
#include "nlmg/dense.hpp"
#include "nlmg/fft_toeplitz.hpp"
#include "nlmg/hierarchy.hpp"
#include "nlmg/problem.hpp"
#include "nlmg/stencil.hpp"
#include "nlmg/transfer.hpp"
#include "nlmg_bench/experiment.hpp"
#include "nlmg_bench/run_config.hpp"
#include "oracles.hpp"

namespace
{

namespace na = nlmg::analysis;
namespace nb = nlmg::bench;

struct Expected
{
  double err;
  int iters;
};

struct Column
{
  const char *delta;
  std::array<Expected, 4> rows;  // N = 2^10 .. 2^13
};

constexpr std::array<Column, 4> kGalerkinTable{{
  {"const:1", {{{4.0638e-05, 13}, {1.0169e-05, 13}, {2.5461e-06, 12}, {6.3918e-07, 12}}}},
  {"sqrt_h", {{{3.1010e-05, 21}, {7.7246e-06, 21}, {1.9262e-06, 21}, {4.8200e-07, 21}}}},
  {"5h", {{{3.0396e-05, 22}, {7.5840e-06, 23}, {1.8943e-06, 23}, {4.7244e-07, 23}}}},
  {"h", {{{2.4416e-05, 18}, {6.1057e-06, 18}, {1.5310e-06, 18}, {3.8268e-07, 18}}}},
}};

constexpr std::array<Column, 4> kRediscretizedTable{{
  {"const:1", {{{4.0589e-05, 42}, {1.0132e-05, 40}, {2.5229e-06, 39}, {6.2373e-07, 38}}}},
  {"sqrt_h", {{{3.0999e-05, 56}, {7.7139e-06, 54}, {1.9184e-06, 54}, {4.7520e-07, 53}}}},
  {"5h", {{{3.0393e-05, 54}, {7.5819e-06, 54}, {1.8917e-06, 53}, {4.7021e-07, 52}}}},
  {"h", {{{2.4385e-05, 47}, {6.0749e-06, 47}, {1.4982e-06, 47}, {3.7118e-07, 47}}}},
}};

int failures = 0;

void verdict(int id, bool pass, const std::string &what)
{
  std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  if (!pass)
    ++failures;
}

void detail(const std::string &line)
{
  std::printf("        %s\n", line.c_str());
}

double ratio_of(double delta, double h)
{
  return nlmg::horizon_ratio(delta, h).R;
}

// Returns true when every row matches. Error tolerance 1 %, rate 2 +- 0.05.
bool table_check(const std::array<Column, 4> &table, nlmg::Coarsening strategy, int iter_tol,
                 const nlmg::SmootherParams &smoother, bool print)
{
  bool all = true;
  for (const Column &col : table)
  {
    std::vector<nb::TableRow> rows;
    for (int J = 10; J <= 13; ++J)
    {
      nb::RunConfig cfg;
      cfg.J = J;
      cfg.delta = nb::parse_delta_spec(col.delta);
      cfg.strategy = strategy;
      cfg.smoother = smoother;
      rows.push_back(nb::run_solve(cfg));
    }
    nb::fill_rates(rows);
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
      const Expected &e = col.rows[i];
      const double rel = std::abs(rows[i].err_inf - e.err) / e.err;
      const bool err_ok = rel <= 0.01;
      const bool rate_ok = !rows[i].rate || std::abs(*rows[i].rate - 2.0) <= 0.05;
      const bool it_ok = std::abs(rows[i].iters - e.iters) <= iter_tol;
      all = all && err_ok && rate_ok && it_ok;
      if (print)
        detail(fmt::format("{:8} N={:5} err={:.4e} (ref {:.4e}, {:+.2f}%) rate={} iters={} (ref {}) {}",
                           col.delta, rows[i].N, rows[i].err_inf, e.err, 100.0 * (rows[i].err_inf - e.err) / e.err,
                           rows[i].rate ? fmt::format("{:.2f}", *rows[i].rate) : std::string("  - "),
                           rows[i].iters, e.iters,
                           err_ok && rate_ok && it_ok ? "ok" : "MISMATCH"));
    }
  }
  return all;
}

void criterion_tables()
{
  const nlmg::SmootherParams defaults;
  verdict(1, table_check(kGalerkinTable, nlmg::Coarsening::galerkin, 3, defaults, true),
          "Galerkin hierarchy reproduces the reference error/iteration table");
  verdict(2, table_check(kRediscretizedTable, nlmg::Coarsening::rediscretize, 5, defaults, true),
          "mesh-doubling hierarchy reproduces the reference error/iteration table");

  // Not gating: a single post-smoothing sweep at weight 2/3 and no
  // pre-smoothing is the scheme the reference iteration counts correspond to.
  nlmg::SmootherParams alt;
  alt.pre_sweeps = 0;
  alt.post_sweeps = 1;
  alt.omega_post = 2.0 / 3.0;
  const bool g = table_check(kGalerkinTable, nlmg::Coarsening::galerkin, 3, alt, false);
  const bool r = table_check(kRediscretizedTable, nlmg::Coarsening::rediscretize, 5, alt, false);
  std::printf("[NOTE] smoother (pre 0, post 1 at 2/3): Galerkin table %s, mesh-doubling table %s\n",
              g ? "matches" : "does not match", r ? "matches" : "does not match");
}

void criterion_tgm()
{
  const double omega = 1.0 / 3.0;
  const double bound = na::tgm_bound(omega);
  struct Case
  {
    double c;
    double beta;
  };
  const std::array<Case, 5> cases{{{1.0, 0.0}, {1.0, 0.5}, {1.0, 1.0}, {3.0, 1.0}, {5.0, 1.0}}};
  bool pass = true;
  for (const Case &cs : cases)
    for (int J = 8; J <= 10; ++J)
    {
      na::ModelConfig cfg;
      cfg.horizon = nlmg::HorizonSpec{cs.c, cs.beta};
      cfg.J = J;
      const double m = na::measured_tgm_factor(cfg, omega);
      const bool ok = m <= bound + 1e-10;
      pass = pass && ok;
      detail(fmt::format("{:28} factor={:.6f} bound={:.6f} {}", cfg.describe(), m, bound,
                         ok ? "ok" : "EXCEEDS"));
    }
  verdict(3, pass, fmt::format("two-grid energy factor <= sqrt(1 - eta/6) = {:.5f}", bound));
}

void criterion_tgm_local()
{
  const double omega = 1.0 / 3.0;
  const double bound = na::tgm_bound_local(omega);
  bool pass = true;
  for (double c : {1.0, 0.5})
    for (int J = 8; J <= 10; ++J)
    {
      na::ModelConfig cfg;
      cfg.horizon = nlmg::HorizonSpec::proportional(c);
      cfg.J = J;
      const double m = na::measured_tgm_factor(cfg, omega);
      const bool ok = ratio_of(cfg.delta(), cfg.h()) <= 1.0 && m <= bound + 1e-10;
      pass = pass && ok;
      detail(fmt::format("{:28} factor={:.6f} bound={:.6f} {}", cfg.describe(), m, bound,
                         ok ? "ok" : "EXCEEDS"));
    }
  verdict(4, pass, fmt::format("local-horizon two-grid factor <= sqrt(1 - eta) = {:.5f}", bound));
}

void criterion_vcycle()
{
  bool pass = true;
  for (int l : {1, 2})
  {
    const double bound = na::vcycle_bound(l, 0.5);
    for (int J = 5; J <= 9; ++J)
    {
      na::ModelConfig cfg;
      cfg.horizon = nlmg::HorizonSpec::proportional(1.0);
      cfg.J = J;
      const double m = na::measured_vcycle_contraction(cfg, l, 0.5);
      const bool ok = m <= bound + 1e-10;
      pass = pass && ok;
      detail(fmt::format("sweeps={} J={} contraction={:.6f} bound={:.6f} {}", l, J, m, bound,
                         ok ? "ok" : "EXCEEDS"));
    }
  }
  verdict(5, pass, "V-cycle energy contraction <= 1/(2 l omega + 1) for delta = h");
}

void criterion_lambda_min()
{
  const std::array<const char *, 5> deltas{"const:1", "const:0.1", "sqrt_h", "5h", "h"};
  bool pass = true;
  double worst = INFINITY;
  for (const char *d : deltas)
    for (int J : {6, 8, 10, 12})
    {
      na::ModelConfig cfg;
      cfg.horizon = nb::parse_delta_spec(d).horizon;
      cfg.J = J;
      const auto r = na::verify_lambda_min(cfg);
      pass = pass && r.pass;
      worst = std::min(worst, r.lambda_min);
      detail(fmt::format("{:28} lambda_min={:.6e} {}", cfg.describe(), r.lambda_min,
                         r.pass ? "ok" : "BELOW"));
    }
  verdict(6, pass,
          fmt::format("lambda_min(A) >= 1/(27 b^2) = {:.6e} (smallest seen {:.6e})", 1.0 / 432.0,
                      worst));
}

void criterion_jacobi()
{
  const std::array<const char *, 5> deltas{"const:1", "sqrt_h", "5h", "3h", "h"};
  bool pass = true;
  for (const char *d : deltas)
    for (int J : {7, 9})
    {
      const auto p = nlmg::manufactured_example(4.0, nb::parse_delta_spec(d).horizon);
      const auto sys = nlmg::assemble_system(p, (1 << J) - 1);
      const auto hier = nlmg::Hierarchy::build(sys, p.kernel);
      double lo = INFINITY, hi = 0.0;
      bool ok = true;
      for (const auto &lv : na::verify_jacobi_bound(hier))
      {
        lo = std::min(lo, lv.lambda_max);
        hi = std::max(hi, lv.lambda_max);
        ok = ok && lv.pass && lv.lambda_max >= 1.0 - 1e-12 && lv.lambda_max < 3.0;
      }
      pass = pass && ok;
      detail(fmt::format("delta={:8} J={} levels={} lambda_max(D^-1 A) in [{:.6f}, {:.6f}] {}", d,
                         J, hier.depth(), lo, hi, ok ? "ok" : "OUT OF RANGE"));
    }
  verdict(7, pass, "every Galerkin level has lambda_max(D^-1 A) in [1, 3), <= 2 when M-matrix");
}

void criterion_coarsening()
{
  std::mt19937_64 rng(20260415);
  double worst = 0.0;
  for (int s = 1; s <= 3; ++s)
    for (int k = 1; k <= 4; ++k)
    {
      const auto band = oracle::random_mmatrix_band(rng, s);
      const auto closed = nlmg::closed_form_coarsen(std::span<const double>(band), k);
      int n = 8 * (s + 3);
      for (int step = 1; step < k; ++step)
        n = 2 * n + 1;
      Eigen::MatrixXd A = oracle::toeplitz(n, band);
      for (int step = 1; step < k; ++step)
        A = oracle::galerkin(A);
      const int c = static_cast<int>(A.rows()) / 2;
      const double scale8 = std::pow(8.0, k - 1);
      double mx = 0.0, diff = 0.0;
      for (int j = 0; j <= s + 1 && c + j < A.rows(); ++j)
      {
        const double o = scale8 * A(c, c + j);
        const double v = j < static_cast<int>(closed.size()) ? closed[j] : 0.0;
        mx = std::max(mx, std::abs(o));
        diff = std::max(diff, std::abs(v - o));
      }
      worst = std::max(worst, diff / mx);
    }
  detail(fmt::format("closed form vs 8^(k-1) R A P interior, halfwidth 1..3, k 1..4: max rel {:.2e}",
                     worst));

  std::uniform_real_distribution<double> dist(0.1, 2.0);
  double worst_structure = 0.0;
  for (int trial = 0; trial < 3; ++trial)
  {
    const double c1 = dist(rng), c2 = dist(rng), c3 = dist(rng);
    const std::vector<double> band = {2.0 * (c1 + c2 + c3), -c1, -c2, -c3};
    for (int k = 2; k <= 4; ++k)
    {
      const auto coarse = nlmg::closed_form_coarsen(std::span<const double>(band), k);
      const double p = std::ldexp(1.0, k);
      const double sigma1 = c1 * p / 2.0 + c2 * (4.0 * p - 8.0) / 2.0 + c3 * (9.0 * p - 32.0) / 2.0;
      const double sigma2 = c2 + 4.0 * c3;
      const std::vector<double> expect = {2.0 * (sigma1 + sigma2), -sigma1, -sigma2};
      double d = 0.0;
      for (std::size_t j = 0; j < std::max(coarse.size(), expect.size()); ++j)
      {
        const double a = j < coarse.size() ? coarse[j] : 0.0;
        const double e = j < expect.size() ? expect[j] : 0.0;
        d = std::max(d, std::abs(a - e));
      }
      worst_structure = std::max(worst_structure, d / std::abs(expect[0]));
    }
    detail(fmt::format("c = ({:.4f}, {:.4f}, {:.4f}): second weight c2 + 4 c3 = {:.4f}", c1, c2,
                       c3, c2 + 4.0 * c3));
  }
  detail(fmt::format("two-term structure after coarsening: max rel deviation {:.2e}",
                     worst_structure));
  verdict(8, worst <= 1e-12 && worst_structure <= 1e-12,
          "closed-form coarsening equals scaled triple product; three-term input keeps two terms");
}

void criterion_stencil()
{
  double worst = 0.0;
  double worst_simpson = 0.0;
  for (double R : {0.5, 1.0, 1.5, 2.5, 3.0, 16.0, 256.0})
  {
    const double h = 4.0 / 1024.0;
    const double delta = R * h;
    const auto closed = nlmg::closed_form_stencil(h, delta);
    const auto quad = nlmg::quadrature_stencil(h, delta, nlmg::Kernel::constant());
    const auto simpson = oracle::simpson_stencil(
        h, delta, [delta](double) { return 3.0 / (delta * delta * delta); });
    double mx = 0.0, d = 0.0, ds = 0.0;
    for (std::size_t k = 0; k < closed.coeffs.size(); ++k)
    {
      mx = std::max(mx, std::abs(closed.coeffs[k]));
      d = std::max(d, std::abs(quad[k] - closed.coeffs[k]));
      ds = std::max(ds, std::abs(simpson[k] - closed.coeffs[k]));
    }
    worst = std::max(worst, d / mx);
    worst_simpson = std::max(worst_simpson, ds / mx);
    detail(fmt::format("R={:6g} halfwidth={:4} quadrature rel={:.2e} simpson rel={:.2e}", R,
                       closed.halfwidth(), d / mx, ds / mx));
  }
  verdict(9, worst <= 1e-10 && worst_simpson <= 1e-10,
          "quadrature stencil equals closed form within 1e-10");
}

void criterion_fft()
{
  std::mt19937_64 rng(99);
  double worst = 0.0;
  for (int e = 1; e <= 14; ++e)
    for (int n : {(1 << e) - 1, 1 << e})
    {
      const double h = 4.0 / (n + 1);
      for (double R : {1.0, 5.0, 40.5})
      {
        const auto st = nlmg::closed_form_stencil(h, R * h);
        const nlmg::SymBandToeplitz A(n, st.coeffs);
        const auto x = oracle::random_vector(rng, n);
        const auto a = nlmg::matvec_direct(A, x);
        const auto b = nlmg::matvec_fft(A, x);
        double num = 0.0, den = 0.0;
        for (int i = 0; i < n; ++i)
        {
          num = std::max(num, std::abs(a[i] - b[i]));
          den = std::max(den, std::abs(a[i]));
        }
        worst = std::max(worst, den > 0.0 ? num / den : num);
      }
    }
  detail(fmt::format("n = 1 .. 16384, three bandwidths: max rel difference {:.2e}", worst));
  verdict(10, worst <= 1e-12, "FFT Toeplitz product equals direct product within 1e-12");
}

void criterion_dilated()
{
  bool pass = true;
  double min_lambda = INFINITY, min_g = INFINITY, worst_diff = 0.0;
  for (int n = 1; n <= 16; ++n)
    for (int dim : {8, 32, 128})
    {
      const auto r = na::verify_dilated_sum(n, dim);
      // Independent assembly: diagonal 2n, first off-diagonal n - 2, others -2.
      std::vector<double> band(static_cast<std::size_t>(std::min(n, dim - 1) + 1), -2.0);
      band[0] = 2.0 * n;
      if (band.size() > 1)
        band[1] = n - 2.0;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle::toeplitz(dim, band));
      worst_diff = std::max(worst_diff, std::abs(es.eigenvalues()(0) - r.lambda_min));
      pass = pass && r.pass && es.eigenvalues()(0) > 0.0;
      min_lambda = std::min(min_lambda, r.lambda_min);
      min_g = std::min(min_g, r.g_min);
    }
  detail(fmt::format("smallest eigenvalue {:.4e}, smallest sampled symbol {:.4e}, oracle diff {:.1e}",
                     min_lambda, min_g, worst_diff));
  verdict(11, pass && worst_diff <= 1e-10,
          "2 sum L_j - n L_1 is positive definite and its symbol is non-negative");
}

void criterion_cost()
{
  std::vector<double> N, work;
  double worst_storage = 0.0;
  for (int J = 10; J <= 13; ++J)
  {
    const auto p = nlmg::manufactured_example(4.0, nlmg::HorizonSpec::proportional(5.0));
    const auto sys = nlmg::assemble_system(p, (1 << J) - 1);
    const auto hier = nlmg::Hierarchy::build(sys, p.kernel);
    const auto cost = nlmg::estimate_cycle_cost(hier, {});
    N.push_back(std::ldexp(1.0, J));
    work.push_back(cost.flops_per_cycle);
    worst_storage = std::max(worst_storage, cost.storage_ratio());
    detail(fmt::format("N={:5} flops/cycle={:.4e} storage ratio={:.4f}", 1 << J,
                       cost.flops_per_cycle, cost.storage_ratio()));
  }
  const double slope = nlmg::loglog_slope(N, work);
  detail(fmt::format("log-log slope {:.4f}", slope));
  verdict(12, std::abs(slope - 1.0) <= 0.15 && worst_storage <= 2.0,
          "work per cycle is linear in N and hierarchy storage <= 2x finest level");
}

}  // namespace

int main()
{
  criterion_tables();
  criterion_tgm();
  criterion_tgm_local();
  criterion_vcycle();
  criterion_lambda_min();
  criterion_jacobi();
  criterion_coarsening();
  criterion_stencil();
  criterion_fft();
  criterion_dilated();
  criterion_cost();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
