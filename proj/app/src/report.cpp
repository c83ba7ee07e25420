#include "tube/app/report.hpp"

#include <sstream>

#include "tube/error.hpp"

namespace tube::app {

Json to_json(const RunConfig& c) {
  return Json{{"seed", c.seed},
              {"primes", {c.p1, c.p2}},
              {"stability_window", c.stability_window},
              {"holdout", c.holdout},
              {"max_samples", c.max_samples},
              {"certify_rational", c.certify_rational},
              {"large", c.large},
              {"timing", c.timing},
              {"output_format", c.format == Format::kJson ? "json" : "csv"}};
}

RunConfig config_from_json(const Json& j) {
  RunConfig c;
  c.seed = j.at("seed").get<std::uint64_t>();
  c.p1 = j.at("primes").at(0).get<std::uint32_t>();
  c.p2 = j.at("primes").at(1).get<std::uint32_t>();
  c.stability_window = j.at("stability_window").get<std::size_t>();
  c.holdout = j.at("holdout").get<std::size_t>();
  c.max_samples = j.at("max_samples").get<std::size_t>();
  c.certify_rational = j.at("certify_rational").get<bool>();
  c.large = j.at("large").get<bool>();
  c.timing = j.at("timing").get<bool>();
  c.format = j.at("output_format").get<std::string>() == "csv" ? Format::kCsv : Format::kJson;
  return c;
}

bool Report::all_pass() const { return passed() == rows.size(); }

std::size_t Report::passed() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.pass ? 1 : 0;
  return n;
}

void set_verdict(Row& row, const Json& observed, const Json& expected, std::string anchor) {
  row.observed = observed;
  row.expected = expected;
  row.anchor = std::move(anchor);
  row.pass = row.error.empty() && (expected.is_null() || observed == expected);
}

Json to_json(const Report& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j{{"name", row.name}, {"dims", row.dims}, {"observed", row.observed}};
    if (!row.expected.is_null()) j["expected"] = Json{{"value", row.expected}, {"anchor", row.anchor}};
    j["verdict"] = row.pass ? "PASS" : "FAIL";
    if (!row.error.empty()) j["error"] = row.error;
    if (!row.details.empty()) j["details"] = row.details;
    if (r.config.timing) j["wall_ms"] = row.wall_ms;
    rows.push_back(std::move(j));
  }
  return Json{{"schema", 1},
              {"tool", "tubelab"},
              {"command", r.command},
              {"config", to_json(r.config)},
              {"rows", std::move(rows)},
              {"summary", {{"rows", r.rows.size()}, {"pass", r.passed()}, {"fail", r.rows.size() - r.passed()}}}};
}

Report report_from_json(const Json& j) {
  if (j.value("schema", 0) != 1) throw Error("unsupported report schema");
  Report r;
  r.command = j.at("command").get<std::vector<std::string>>();
  r.config = config_from_json(j.at("config"));
  for (const auto& jr : j.at("rows")) {
    Row row;
    row.name = jr.at("name").get<std::string>();
    row.dims = jr.at("dims").get<std::vector<std::size_t>>();
    row.observed = jr.at("observed");
    if (jr.contains("expected")) {
      row.expected = jr["expected"].at("value");
      row.anchor = jr["expected"].at("anchor").get<std::string>();
    }
    row.pass = jr.at("verdict").get<std::string>() == "PASS";
    row.error = jr.value("error", "");
    row.details = jr.value("details", Json::object());
    row.wall_ms = jr.value("wall_ms", 0.0);
    r.rows.push_back(std::move(row));
  }
  return r;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string flat(const Json& j) {
  if (j.is_null()) return "";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

}  // namespace

std::string render(const Report& r, Format f) {
  if (f == Format::kJson) return to_json(r).dump(2) + "\n";
  std::ostringstream out;
  out << "name,dims,observed,expected,anchor,verdict,error";
  if (r.config.timing) out << ",wall_ms";
  out << "\n";
  for (const auto& row : r.rows) {
    std::string dims;
    for (std::size_t i = 0; i < row.dims.size(); ++i) dims += (i ? " " : "") + std::to_string(row.dims[i]);
    out << csv_field(row.name) << ',' << dims << ',' << csv_field(flat(row.observed)) << ','
        << csv_field(flat(row.expected)) << ',' << csv_field(row.anchor) << ',' << (row.pass ? "PASS" : "FAIL") << ','
        << csv_field(row.error);
    if (r.config.timing) out << ',' << row.wall_ms;
    out << "\n";
  }
  return out.str();
}

}  // namespace tube::app
