#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tube/linalg/field.hpp"

namespace tube::app {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv };

struct RunConfig {
  std::uint64_t seed = 1;
  std::uint32_t p1 = linalg::kPrime1;
  std::uint32_t p2 = linalg::kPrime2;
  std::size_t stability_window = 3;
  std::size_t holdout = 5;
  std::size_t max_samples = 200;
  bool certify_rational = false;
  bool large = false;
  std::size_t threads = 0;  // 0: hardware concurrency; never changes results
  bool timing = true;       // wall-clock fields; off for byte-identical output
  Format format = Format::kJson;
};

Json to_json(const RunConfig& c);
RunConfig config_from_json(const Json& j);

struct Row {
  std::string name;
  std::vector<std::size_t> dims;  // [dim aut, dim aut^(1), ...] where they apply
  Json observed;                  // the compared quantity
  Json expected;                  // null when there is no expectation
  std::string anchor;
  bool pass = false;
  std::string error;              // engine error, if any (the row then fails)
  Json details = Json::object();
  double wall_ms = 0;
};

struct Report {
  std::vector<std::string> command;
  RunConfig config;
  std::vector<Row> rows;

  bool all_pass() const;
  std::size_t passed() const;
};

// Verdict for a computed value against an optional expectation.
void set_verdict(Row& row, const Json& observed, const Json& expected, std::string anchor);

Json to_json(const Report& r);
Report report_from_json(const Json& j);
std::string render(const Report& r, Format f);

}  // namespace tube::app
