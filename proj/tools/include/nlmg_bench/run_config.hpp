// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_BENCH_RUN_CONFIG_HPP
#define NLMG_BENCH_RUN_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "nlmg/hierarchy.hpp"
#include "nlmg/horizon.hpp"
#include "nlmg/multigrid.hpp"

namespace nlmg::bench
{

// Bad command line input; maps to exit status 2.
class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat
{
  csv,
  json,
};

// Horizon given on the command line:
//   const:<c>          delta = c
//   scale:<c>,<beta>   delta = c h^beta
//   sqrt_h             delta = h^(1/2)
//   <k>h or h          delta = k h
struct DeltaSpec
{
  HorizonSpec horizon;
  std::string text;
};

DeltaSpec parse_delta_spec(std::string_view text);
Coarsening parse_strategy(std::string_view text);
MatvecPath parse_matvec(std::string_view text);
OutputFormat parse_format(std::string_view text);

struct RunConfig
{
  double b = 4.0;
  int J = 10;  // N = 2^J intervals, 2^J - 1 unknowns
  DeltaSpec delta = parse_delta_spec("const:1");
  Coarsening strategy = Coarsening::galerkin;
  SmootherParams smoother;
  double tol = 1e-8;
  int max_cycles = 500;
  int coarsest_size = 1;
  MatvecPath matvec = MatvecPath::direct;
  OutputFormat format = OutputFormat::csv;

  long N() const { return 1L << J; }
  void validate() const;
};

// Accepts N as a power of two and returns its exponent.
int exponent_from_intervals(long N);

}  // namespace nlmg::bench

#endif  // NLMG_BENCH_RUN_CONFIG_HPP
