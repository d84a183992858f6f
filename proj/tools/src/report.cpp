// Copyright 2026 The nlmg Authors
// SPDX-License-Identifier: Apache-2.0

#include "nlmg_bench/report.hpp"

#include <fmt/format.h>

namespace nlmg::bench
{

std::string csv_line(const TableRow &row)
{
  const std::string rate = row.rate ? fmt::format("{:.2f}", *row.rate) : std::string();
  return fmt::format("{},{:.10g},{:.10g},{},{:.4e},{},{},{:.3f}", row.N, row.h, row.delta,
                     row.strategy, row.err_inf, rate, row.iters, row.cpu_s);
}

std::string to_csv(std::span<const TableRow> rows)
{
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto &row : rows)
    out += csv_line(row) + "\n";
  return out;
}

nlohmann::json to_json(const TableRow &row)
{
  nlohmann::json j;
  j["N"] = row.N;
  j["h"] = row.h;
  j["delta"] = row.delta;
  j["delta_spec"] = row.delta_spec;
  j["strategy"] = row.strategy;
  j["err_inf"] = row.err_inf;
  j["rate"] = row.rate ? nlohmann::json(*row.rate) : nlohmann::json(nullptr);
  j["iters"] = row.iters;
  j["cpu_s"] = row.cpu_s;
  return j;
}

TableRow row_from_json(const nlohmann::json &j)
{
  TableRow row;
  row.N = j.at("N").get<long>();
  row.h = j.at("h").get<double>();
  row.delta = j.at("delta").get<double>();
  row.delta_spec = j.at("delta_spec").get<std::string>();
  row.strategy = j.at("strategy").get<std::string>();
  row.err_inf = j.at("err_inf").get<double>();
  if (!j.at("rate").is_null())
    row.rate = j.at("rate").get<double>();
  row.iters = j.at("iters").get<int>();
  row.cpu_s = j.at("cpu_s").get<double>();
  return row;
}

nlohmann::json to_json(const TableRun &run)
{
  nlohmann::json j;
  j["table"] = run.reference->name;
  j["strategy"] = to_string(run.reference->strategy);
  j["rows"] = nlohmann::json::array();
  for (std::size_t i = 0; i < run.rows.size(); ++i)
  {
    nlohmann::json r = to_json(run.rows[i]);
    const RowVerdict &v = run.verdicts[i];
    r["reference"] = {{"err_inf", v.expected.err}, {"iters", v.expected.iters}};
    r["err_rel"] = v.err_rel;
    r["checks"] = {{"err", v.err_ok}, {"rate", v.rate_ok}, {"iters", v.iters_ok}};
    r["pass"] = v.pass();
    j["rows"].push_back(r);
  }
  j["pass"] = run.pass();
  return j;
}

nlohmann::json to_json(const analysis::AnalysisReport &report)
{
  nlohmann::json j;
  j["checks"] = nlohmann::json::array();
  for (const auto &r : report.records)
    j["checks"].push_back({{"check", r.check},
                           {"config", r.config},
                           {"measured", r.measured},
                           {"bound", r.bound},
                           {"relation", r.relation},
                           {"pass", r.pass}});
  j["pass"] = report.all_pass();
  return j;
}

std::string verdict_summary(const TableRun &run)
{
  std::string out;
  for (std::size_t i = 0; i < run.rows.size(); ++i)
  {
    const TableRow &row = run.rows[i];
    const RowVerdict &v = run.verdicts[i];
    out += fmt::format("{} {:>8} N={:<5} err {:.4e} (ref {:.4e}, {:+.2f}%) iters {:>3} (ref {:>2}) "
                       "rate {:>5} {}\n",
                       run.reference->name, row.delta_spec, row.N, row.err_inf, v.expected.err,
                       100.0 * (row.err_inf - v.expected.err) / v.expected.err, row.iters,
                       v.expected.iters, row.rate ? fmt::format("{:.2f}", *row.rate) : "-",
                       v.pass() ? "PASS" : "FAIL");
  }
  return out;
}

}  // namespace nlmg::bench
