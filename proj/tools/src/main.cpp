// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "nlmg/error.hpp"
#include "nlmg_bench/checks.hpp"
#include "nlmg_bench/experiment.hpp"
#include "nlmg_bench/oracle.hpp"
#include "nlmg_bench/report.hpp"
#include "nlmg_bench/run_config.hpp"

namespace
{

using namespace nlmg::bench;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RawRunOptions
{
  RunConfig config;
  long N = 0;
  std::string delta = "const:1";
  std::string strategy = "galerkin";
  std::string matvec = "direct";
  std::string format = "csv";
  std::string out;
};

void add_solver_options(CLI::App *cmd, RawRunOptions &raw)
{
  RunConfig &c = raw.config;
  cmd->add_option("--b", c.b, "Domain length")->capture_default_str();
  cmd->add_option("--m1", c.smoother.pre_sweeps, "Pre-smoothing sweeps")->capture_default_str();
  cmd->add_option("--m2", c.smoother.post_sweeps, "Post-smoothing sweeps")->capture_default_str();
  cmd->add_option("--omega-pre", c.smoother.omega_pre, "Pre-smoothing Jacobi weight")
    ->capture_default_str();
  cmd->add_option("--omega-post", c.smoother.omega_post, "Post-smoothing Jacobi weight")
    ->capture_default_str();
  cmd->add_option("--tol", c.tol, "Relative residual tolerance")->capture_default_str();
  cmd->add_option("--max-cycles", c.max_cycles, "V-cycle limit")->capture_default_str();
  cmd->add_option("--coarsest", c.coarsest_size, "Largest coarsest-level size")
    ->capture_default_str();
  cmd->add_option("--matvec", raw.matvec, "Toeplitz product: direct, fft or auto")
    ->capture_default_str();
  cmd->add_option("--format", raw.format, "csv or json")->capture_default_str();
  cmd->add_option("--out", raw.out, "Write output to this file instead of stdout");
}

void finish_run_options(RawRunOptions &raw)
{
  if (raw.N != 0)
    raw.config.J = exponent_from_intervals(raw.N);
  raw.config.delta = parse_delta_spec(raw.delta);
  raw.config.strategy = parse_strategy(raw.strategy);
  raw.config.matvec = parse_matvec(raw.matvec);
  raw.config.format = parse_format(raw.format);
  raw.config.validate();
}

void emit(const std::string &text, const std::string &path)
{
  if (path.empty())
  {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os)
    throw UsageError(fmt::format("cannot open '{}' for writing", path));
  os << text;
}

std::vector<double> parse_band(const std::string &text)
{
  std::vector<double> band;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
  {
    try
    {
      std::size_t used = 0;
      band.push_back(std::stod(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    }
    catch (const std::exception &)
    {
      throw UsageError(fmt::format("invalid band entry '{}'", item));
    }
  }
  if (band.empty())
    throw UsageError("band must not be empty");
  return band;
}

int run(int argc, char **argv)
{
  CLI::App app{"Multigrid solver and analysis driver for 1D nonlocal diffusion"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML or INI file with option defaults");

  RawRunOptions solve_raw;
  auto *solve_cmd = app.add_subcommand("solve", "Solve the manufactured problem once");
  auto *J_opt = solve_cmd->add_option("--J", solve_raw.config.J, "Grid exponent, N = 2^J")
                  ->capture_default_str();
  solve_cmd->add_option("--N", solve_raw.N, "Number of intervals (power of two)")->excludes(J_opt);
  solve_cmd->add_option("--delta", solve_raw.delta, "const:<c>, scale:<c>,<beta>, sqrt_h or <k>h")
    ->capture_default_str();
  solve_cmd->add_option("--strategy", solve_raw.strategy, "galerkin or rediscretize")
    ->capture_default_str();
  add_solver_options(solve_cmd, solve_raw);

  RawRunOptions table_raw;
  std::string which = "galerkin";
  int J_min = 10;
  int J_max = 13;
  auto *table_cmd = app.add_subcommand("table", "Run a reference table and compare");
  table_cmd->add_option("--which", which, "galerkin (alias 5.1) or rediscretize (alias 5.2)")
    ->capture_default_str();
  table_cmd->add_option("--J-min", J_min, "Smallest grid exponent")->capture_default_str();
  table_cmd->add_option("--J-max", J_max, "Largest grid exponent")->capture_default_str();
  add_solver_options(table_cmd, table_raw);

  CheckOptions check_options;
  std::vector<std::string> checks;
  std::string check_delta;
  std::string analyze_out;
  auto *analyze_cmd = app.add_subcommand("analyze", "Run spectral and convergence checks");
  analyze_cmd->add_option("--check", checks, "tgm, vcycle, lambda_min, cond, jacobi_bound, "
                                             "dilated_sum (alias lemma310), cost")
    ->required()
    ->delimiter(',');
  analyze_cmd->add_option("--b", check_options.b, "Domain length")->capture_default_str();
  analyze_cmd->add_option("--omega", check_options.omega, "Jacobi weight");
  analyze_cmd->add_option("--J", check_options.J, "Grid exponent");
  analyze_cmd->add_option("--delta", check_delta, "Horizon spec");
  analyze_cmd->add_option("--l", check_options.sweeps, "V-cycle sweeps");
  analyze_cmd->add_option("--n", check_options.terms, "Number of dilated Laplacians");
  analyze_cmd->add_option("--dim", check_options.dim, "Matrix order");
  analyze_cmd->add_option("--out", analyze_out, "Write JSON to this file");

  bool oracle_stencil = false;
  bool oracle_coarsen = false;
  double oracle_R = 3.0;
  std::string oracle_band = "2,-1";
  int oracle_k = 2;
  auto *oracle_cmd = app.add_subcommand("oracle", "Compare closed forms with brute force");
  auto *st_flag = oracle_cmd->add_flag("--stencil", oracle_stencil, "Stencil coefficients");
  auto *co_flag = oracle_cmd->add_flag("--coarsen", oracle_coarsen, "Coarsened Toeplitz band");
  st_flag->excludes(co_flag);
  oracle_cmd->add_option("--R", oracle_R, "delta / h")->capture_default_str();
  oracle_cmd->add_option("--band", oracle_band, "Comma separated a_0,a_1,...")
    ->capture_default_str();
  oracle_cmd->add_option("--k", oracle_k, "Coarsening depth")->capture_default_str();

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp &e)
  {
    return app.exit(e);
  }
  catch (const CLI::ParseError &e)
  {
    app.exit(e);
    return kExitUsage;
  }

  if (solve_cmd->parsed())
  {
    finish_run_options(solve_raw);
    const TableRow row = run_solve(solve_raw.config);
    if (solve_raw.config.format == OutputFormat::json)
      emit(to_json(row).dump(2) + "\n", solve_raw.out);
    else
      emit(to_csv(std::span<const TableRow>(&row, 1)), solve_raw.out);
    return kExitPass;
  }

  if (table_cmd->parsed())
  {
    finish_run_options(table_raw);
    const TableRun result = run_table(which, table_raw.config, J_min, J_max);
    if (table_raw.config.format == OutputFormat::json)
      emit(to_json(result).dump(2) + "\n", table_raw.out);
    else
      emit(to_csv(result.rows), table_raw.out);
    std::cerr << verdict_summary(result);
    return result.pass() ? kExitPass : kExitFail;
  }

  if (analyze_cmd->parsed())
  {
    if (!check_delta.empty())
      check_options.delta = parse_delta_spec(check_delta);
    nlmg::analysis::AnalysisReport report;
    for (const auto &name : checks)
      run_check(name, check_options, report);
    emit(to_json(report).dump(2) + "\n", analyze_out);
    return report.all_pass() ? kExitPass : kExitFail;
  }

  if (oracle_cmd->parsed())
  {
    if (!oracle_stencil && !oracle_coarsen)
      throw UsageError("oracle needs --stencil or --coarsen");
    const OracleResult result = oracle_stencil ? stencil_oracle(oracle_R)
                                               : coarsen_oracle(parse_band(oracle_band), oracle_k);
    std::cout << render(result);
    return result.pass() ? kExitPass : kExitFail;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char **argv)
{
  try
  {
    return run(argc, argv);
  }
  catch (const UsageError &e)
  {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  catch (const nlmg::InvalidArgument &e)
  {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  }
  catch (const nlmg::ResourceLimit &e)
  {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  }
  catch (const nlmg::NumericalFailure &e)
  {
    std::cerr << "numerical failure: " << e.what() << " (achieved " << e.achieved_error()
              << ")\n";
    return kExitFail;
  }
  catch (const std::exception &e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
