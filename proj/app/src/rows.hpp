#pragma once

#include <chrono>
#include <functional>
#include <string>

#include "tube/app/pool.hpp"
#include "tube/app/report.hpp"
#include "tube/error.hpp"

namespace tube::app::detail {

// Runs fill(row); engine errors fail the row instead of aborting the report.
inline Row run_row(const std::string& name, const std::function<void(Row&)>& fill) {
  Row row;
  row.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    fill(row);
  } catch (const Error& e) {
    row.error = e.what();
    row.pass = false;
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

inline void run_rows(Report& report, const std::vector<std::pair<std::string, std::function<void(Row&)>>>& rows) {
  std::vector<std::function<Row()>> jobs;
  for (const auto& [name, fill] : rows) jobs.push_back([&name, &fill] { return run_row(name, fill); });
  for (auto& r : run_pool(jobs, report.config.threads)) report.rows.push_back(std::move(r));
}

}  // namespace tube::app::detail
