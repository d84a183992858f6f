// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NLMG_BENCH_REPORT_HPP
#define NLMG_BENCH_REPORT_HPP

#include <span>
#include <string>

#include <json.hpp>

#include "nlmg/analysis.hpp"
#include "nlmg_bench/experiment.hpp"

namespace nlmg::bench
{

inline constexpr const char *kCsvHeader = "N,h,delta,strategy,err_inf,rate,iters,cpu_s";

std::string csv_line(const TableRow &row);
std::string to_csv(std::span<const TableRow> rows);

nlohmann::json to_json(const TableRow &row);
TableRow row_from_json(const nlohmann::json &j);
nlohmann::json to_json(const TableRun &run);
nlohmann::json to_json(const analysis::AnalysisReport &report);

// One human-readable line per row comparing against the reference values.
std::string verdict_summary(const TableRun &run);

}  // namespace nlmg::bench

#endif  // NLMG_BENCH_REPORT_HPP
