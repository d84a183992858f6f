// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg_bench/run_config.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>

#include "nlmg/error.hpp"

namespace nlmg::bench
{

namespace
{

double parse_number(std::string_view text, std::string_view whole)
{
  double v = 0.0;
  const char *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v))
    throw UsageError(fmt::format("invalid number '{}' in delta spec '{}'", text, whole));
  return v;
}

}  // namespace

DeltaSpec parse_delta_spec(std::string_view text)
{
  DeltaSpec out;
  out.text = std::string(text);
  if (text == "sqrt_h")
    out.horizon = {1.0, 0.5};
  else if (text.starts_with("const:"))
    out.horizon = {parse_number(text.substr(6), text), 0.0};
  else if (text.starts_with("scale:"))
  {
    const auto rest = text.substr(6);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos)
      throw UsageError(fmt::format("delta spec '{}' needs scale:<c>,<beta>", text));
    out.horizon = {parse_number(rest.substr(0, comma), text),
                   parse_number(rest.substr(comma + 1), text)};
  }
  else if (text.ends_with('h'))
  {
    const auto k = text.substr(0, text.size() - 1);
    out.horizon = {k.empty() ? 1.0 : parse_number(k, text), 1.0};
  }
  else
    throw UsageError(fmt::format("unrecognised delta spec '{}'", text));

  try
  {
    out.horizon.validate();
  }
  catch (const InvalidArgument &e)
  {
    throw UsageError(fmt::format("delta spec '{}': {}", text, e.what()));
  }
  return out;
}

Coarsening parse_strategy(std::string_view text)
{
  if (text == "galerkin")
    return Coarsening::galerkin;
  if (text == "rediscretize")
    return Coarsening::rediscretize;
  throw UsageError(fmt::format("unknown strategy '{}'", text));
}

MatvecPath parse_matvec(std::string_view text)
{
  if (text == "direct")
    return MatvecPath::direct;
  if (text == "fft")
    return MatvecPath::fft;
  if (text == "auto")
    return MatvecPath::automatic;
  throw UsageError(fmt::format("unknown matvec path '{}'", text));
}

OutputFormat parse_format(std::string_view text)
{
  if (text == "csv")
    return OutputFormat::csv;
  if (text == "json")
    return OutputFormat::json;
  throw UsageError(fmt::format("unknown output format '{}'", text));
}

void RunConfig::validate() const
{
  if (!(b > 0.0) || !std::isfinite(b))
    throw UsageError("domain length must be positive");
  if (J < 2 || J > 24)
    throw UsageError("grid exponent must lie in [2, 24]");
  if (!(tol > 0.0))
    throw UsageError("tolerance must be positive");
  if (max_cycles < 1)
    throw UsageError("cycle limit must be positive");
  if (coarsest_size < 1)
    throw UsageError("coarsest level size must be positive");
  try
  {
    smoother.validate();
  }
  catch (const InvalidArgument &e)
  {
    throw UsageError(e.what());
  }
}

int exponent_from_intervals(long N)
{
  if (N < 4 || (N & (N - 1)) != 0)
    throw UsageError(fmt::format("N = {} is not a power of two >= 4", N));
  int J = 0;
  while ((1L << J) < N)
    ++J;
  return J;
}

}  // namespace nlmg::bench
