#include "tube/app/commands.hpp"

#include <algorithm>
#include <set>

#include "rows.hpp"
#include "tube/app/spec_parser.hpp"
#include "tube/random.hpp"
#include "tube/roots/bb.hpp"

namespace tube::app {

using detail::run_rows;
using RowFn = std::function<void(Row&)>;

aut::ProlongConfig prolong_config(const RunConfig& cfg, const std::string& row_name) {
  aut::ProlongConfig pc;
  pc.aut.window = cfg.stability_window;
  pc.aut.holdout = cfg.holdout;
  pc.aut.max_samples = cfg.max_samples;
  pc.aut.seed = derive_seed(cfg.seed, row_name);
  pc.p1 = cfg.p1;
  pc.p2 = cfg.p2;
  pc.certify = cfg.certify_rational;
  return pc;
}

namespace {

void fill_prolong(Row& row, const std::string& spec, int order, const RunConfig& cfg) {
  auto parsed = parse_spec(spec, derive_seed(cfg.seed, spec + "/secant"));
  auto rep = aut::prolong_k(parsed.variety, order, prolong_config(cfg, spec));
  row.dims = rep.dims;
  row.details["ambient_dim"] = parsed.variety.ambient_dim;
  row.details["certified_rational"] = rep.certified_rational;
  row.details["primes_disagreed"] = rep.primes_disagreed;
  Json runs = Json::array();
  for (const auto& r : rep.runs) runs.push_back(Json{{"prime", r.prime}, {"dims", r.dims}});
  row.details["runs"] = runs;
  Json observed = rep.dims.size() > 1 ? Json(rep.dims[1]) : Json(nullptr);
  Json expected = order >= 1 && parsed.expected ? Json(*parsed.expected) : Json(nullptr);
  set_verdict(row, observed, expected, parsed.anchor);
}

}  // namespace

Report cmd_prolong(const std::string& spec, int order, const RunConfig& cfg) {
  Report report{{}, cfg, {}};
  if (order < 0) throw BadDimension("order must be >= 0");
  run_rows(report, {{spec, [&](Row& row) { fill_prolong(row, spec, order, cfg); }}});
  return report;
}

Report cmd_aut(const std::string& spec, const RunConfig& cfg) {
  Report report{{}, cfg, {}};
  run_rows(report, {{spec, [&](Row& row) {
                       auto parsed = parse_spec(spec, derive_seed(cfg.seed, spec + "/secant"));
                       auto pc = prolong_config(cfg, spec);
                       linalg::PrimeField f(cfg.p1);
                       auto g = aut::aut_from_samples(f, parsed.variety, pc.aut);
                       bool closed = aut::is_bracket_closed(g);
                       row.dims = {g.dim()};
                       row.details["samples"] = g.samples;
                       row.details["dim_trace"] = g.dim_trace;
                       Json observed{{"bracket_closed", closed}};
                       Json expected{{"bracket_closed", true}};
                       if (!parsed.variety.quadrics.empty()) {
                         auto gq = aut::aut_from_quadrics(f, parsed.variety);
                         row.details["dim_from_quadrics"] = gq.dim();
                         observed["routes_agree"] = gq.basis == g.basis;
                         expected["routes_agree"] = true;
                       }
                       if (cfg.certify_rational) {
                         auto gr = aut::aut_from_samples(parsed.variety, pc.aut);
                         observed["rational_dim_agrees"] = gr.dim() == g.dim();
                         expected["rational_dim_agrees"] = true;
                       }
                       set_verdict(row, observed, expected, "aut of a cone is a Lie subalgebra of gl(V)");
                     }}});
  return report;
}

std::vector<std::string> identity_table_specs(bool large) {
  std::vector<std::string> out = {"quadric:3",  "quadric:4",  "quadric:5",  "quadric:6",  "segre:2x2",
                                  "segre:2x3",  "segre:3x3",  "veronese:2", "veronese:3", "veronese:4",
                                  "pluecker:4", "pluecker:5", "pluecker:6"};
  if (large) {
    out.push_back("spinor:5");
    out.push_back("severi");
  }
  return out;
}

Report cmd_identity_table(const RunConfig& cfg) {
  Report report{{}, cfg, {}};
  std::vector<std::pair<std::string, RowFn>> rows;
  for (const auto& spec : identity_table_specs(cfg.large))
    rows.emplace_back(spec, [spec, &cfg](Row& row) { fill_prolong(row, spec, 1, cfg); });
  run_rows(report, rows);
  return report;
}

std::string tube_family(char type, int rank, int node) {
  if ((type == 'B' || type == 'D') && node == 1) return "quadric";
  if (type == 'A' && rank % 2 == 1 && node == (rank + 1) / 2) return "grassmannian";
  if (type == 'C' && node == rank) return "lagrangian";
  if (type == 'D' && rank % 2 == 0 && (node == rank || node == rank - 1)) return "spinor";
  if (type == 'E' && rank == 7 && node == 7) return "e7";
  return "";
}

namespace {

Json fixed_point_table(const roots::RootSystem& rs, int node, const std::vector<int>& sigma) {
  Json table = Json::array();
  for (const auto& fp : roots::bb_fixed_points(rs, node, sigma)) {
    std::map<int, int> hist;
    for (int w : fp.tangent_weights) ++hist[w];
    Json weights = Json::object();
    for (auto [w, c] : hist) weights[std::to_string(w)] = c;
    table.push_back(Json{{"weight", fp.weight}, {"tangent_weights", weights}});
  }
  return table;
}

void fill_classify(Row& row, const roots::RootSystem& rs, int node, std::optional<int> beta) {
  bool ihss = roots::is_ihss(rs, node);
  bool tube = roots::is_tube_type(rs, node);
  int b = beta.value_or(node);
  auto sigma = roots::node_grading(rs, b);
  auto action = roots::classify_action(rs, node, b);
  Json grading = Json::object();
  for (auto [k, d] : roots::grading_dims(rs, roots::node_grading(rs, node))) grading[std::to_string(k)] = d;
  row.details["grading_dims"] = grading;
  row.details["cominuscule"] = roots::is_cominuscule(rs, node);
  row.details["opposition_involution"] = roots::opposition_involution(rs);
  row.details["beta"] = b;
  row.details["equalized"] = action.equalized;
  row.details["euler_sources"] = action.euler_sources.size();
  row.details["euler_sinks"] = action.euler_sinks.size();
  row.details["fixed_points"] = fixed_point_table(rs, node, sigma);
  row.dims = {rs.roots.size(), static_cast<std::size_t>(grading.value("1", 0))};
  Json observed{{"ihss", ihss}, {"tube", tube}};
  Json expected{{"ihss", ihss}, {"tube", !tube_family(rs.type, rs.rank, node).empty()}};
  set_verdict(row, observed, expected, "tube-type IHSS: Q^n, Gr(n,2n), Lag(n,2n), S_2n, E7/P7");
}

}  // namespace

Report cmd_classify(const std::string& type, std::optional<int> node, std::optional<int> beta, const RunConfig& cfg) {
  Report report{{}, cfg, {}};
  auto rs = roots::build(type);
  if (node && (*node < 1 || *node > rs.rank)) throw BadType("node out of range for " + type);
  if (beta && (*beta < 1 || *beta > rs.rank)) throw BadType("beta out of range for " + type);
  std::vector<std::pair<std::string, RowFn>> rows;
  for (int v = 1; v <= rs.rank; ++v) {
    if (node && v != *node) continue;
    rows.emplace_back(rs.name() + "/" + std::to_string(v), [&rs, v, beta](Row& row) { fill_classify(row, rs, v, beta); });
  }
  run_rows(report, rows);
  return report;
}

Report cmd_tube_types(int max_rank, const RunConfig& cfg) {
  Report report{{}, cfg, {}};
  if (max_rank < 1) throw BadType("max rank must be positive");
  std::vector<roots::MarkedDiagram> found;
  auto row = detail::run_row("families", [&](Row& r) {
    found = roots::equalized_euler_diagrams(max_rank);
    std::set<std::string> fams;
    for (const auto& d : found) {
      auto f = tube_family(d.type, d.rank, d.node);
      fams.insert(f.empty() ? "unexpected:" + d.name() : f);
    }
    r.dims = {found.size()};
    set_verdict(r, Json(fams), Json(std::set<std::string>{"e7", "grassmannian", "lagrangian", "quadric", "spinor"}),
                "five families of tube-type IHSS");
  });
  report.rows.push_back(row);
  std::set<roots::MarkedDiagram> found_set(found.begin(), found.end());
  // One row per cominuscule marked diagram: found by the weight test iff in a family.
  for (auto [type, rank] : roots::enumerate_types(max_rank)) {
    auto rs = roots::build(type, rank);
    for (int node = 1; node <= rank; ++node) {
      if (!roots::is_ihss(rs, node)) continue;
      roots::MarkedDiagram d{type, rank, node};
      report.rows.push_back(detail::run_row(d.name(), [&](Row& r) {
        bool in_family = !tube_family(type, rank, node).empty();
        set_verdict(r, Json(found_set.count(d) > 0), Json(in_family),
                    in_family ? "tube-type IHSS" : "IHSS not of tube type");
      }));
    }
  }
  return report;
}

namespace {

struct GridResult {
  std::size_t tuples = 0;
  std::size_t violations = 0;
  std::size_t identity_mismatches = 0;
  std::size_t transposed_form_mismatches = 0;
};

long tri(long x) { return x * (x + 1) / 2; }

GridResult grid(GridFamily family, int bound) {
  GridResult g;
  auto check = [&](long gap, long closed, bool strict_extra = true) {
    ++g.tuples;
    if (gap != closed) ++g.identity_mismatches;
    if (!(closed > 0) || !strict_extra) ++g.violations;
  };
  if (family == GridFamily::kSympl) {
    for (long k = 2; k <= bound; ++k)
      for (long m = 1; m <= bound; ++m)
        for (long t = 0; t < k; ++t) {
          long dim_u = tri(k) + k * m;
          long gap = dim_u - (tri(t) + t * m) - tri(k - t);
          check(gap, (m + t) * (k - t), tri(k) < dim_u);
        }
  } else if (family == GridFamily::kSegre) {
    for (long a = 3; a <= bound; ++a)
      for (long b = 3; b <= a; ++b)
        for (long s = 0; s < a; ++s)
          for (long t = 0; t < b; ++t) {
            long gap = a * b - (a - s) * t - (b - t) * s;
            long printed = (a - t) * (b - t) + s * t;
            check(gap, (a - s) * (b - t) + s * t, printed > 0);
            if (gap != printed) ++g.transposed_form_mismatches;
          }
  } else if (family == GridFamily::kPluecker) {
    for (long n = 6; n <= std::max(bound, 6); ++n)
      for (long t = 1; t < n; ++t) {
        long gap = n * (n - 1) / 2 - t * (t - 1) / 2 - (n - t) * (n - t - 1) / 2;
        check(gap, t * (n - t));
      }
  } else {
    for (long n = 3; n <= bound; ++n)
      for (long r = 1; r < n; ++r) {
        long gap = tri(n) - tri(r) - tri(n - r);
        check(gap, r * (n - r));
      }
  }
  return g;
}

std::string grid_anchor(GridFamily family) {
  switch (family) {
    case GridFamily::kSympl: return "symplectic VMRT projections: (m+t)(k-t) > 0";
    case GridFamily::kSegre: return "Segre projections: ab - (a-s)t - (b-t)s = (a-s)(b-t) + st > 0";
    case GridFamily::kPluecker: return "Pluecker projections: t(n-t) > 0";
    default: return "Veronese projections: r(n-r) > 0";
  }
}

std::string vec(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<int> mat_diag(int n, const std::vector<int>& d) {
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = d[i];
  return m;
}

std::vector<int> sym_diag(int n, const std::vector<int>& d) {
  std::vector<int> m;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.push_back(i == j ? d[i] : 0);
  return m;
}

// e1^e2 + e3^e4 + ... up to rank r.
std::vector<int> skew_rank(int n, int r) {
  std::vector<int> m;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.push_back(j == i + 1 && i % 2 == 0 && j < r ? 1 : 0);
  return m;
}

}  // namespace

std::string family_name(GridFamily family) {
  switch (family) {
    case GridFamily::kSympl: return "sympl";
    case GridFamily::kSegre: return "segre";
    case GridFamily::kPluecker: return "pluecker";
    default: return "veronese";
  }
}

GridFamily parse_family(const std::string& text) {
  static const std::vector<std::pair<std::string, GridFamily>> names{
      {"sympl", GridFamily::kSympl},       {"segre", GridFamily::kSegre},       {"pluecker", GridFamily::kPluecker},
      {"veronese", GridFamily::kVeronese}, {"10", GridFamily::kSympl},          {"11", GridFamily::kSegre},
      {"12", GridFamily::kPluecker},       {"13", GridFamily::kVeronese}};
  for (const auto& [name, family] : names)
    if (name == text) return family;
  throw BadDimension("unknown grid family '" + text + "'");
}

std::vector<std::string> projection_instances(GridFamily family) {
  auto proj = [](const std::string& base, const std::vector<std::vector<int>>& gens) {
    std::string s = "project(" + base;
    for (const auto& g : gens) s += "; " + vec(g);
    return s + ")";
  };
  switch (family) {
    case GridFamily::kSympl:
      return {"sympl:2,1", "sympl:2,2", "sympl:3,1", proj("sympl:3,1", {{1, 0, 0, 1, 0, 0, 0, 0, 0}}),
              proj("sympl:3,1", {{1, 0, 0, 1, 0, 1, 0, 0, 0}}), proj("sympl:3,1", {{1, 0, 0, 0, 0, 0, 0, 1, 0}})};
    case GridFamily::kSegre: {
      std::vector<int> r3(20, 0);
      r3[0] = r3[5] = r3[10] = 1;
      return {proj("segre:3x3", {mat_diag(3, {1, 1, 1})}), proj("segre:4x4", {mat_diag(4, {1, 1, 1, 0})}),
              proj("segre:4x4", {mat_diag(4, {1, 1, 1, 1})}),
              proj("segre:4x4", {mat_diag(4, {1, 1, 1, 1}), mat_diag(4, {1, 2, 3, 4})}), proj("segre:5x4", {r3})};
    }
    case GridFamily::kPluecker:
      return {proj("pluecker:6", {skew_rank(6, 6)}), proj("pluecker:7", {skew_rank(7, 6)}),
              proj("pluecker:8", {skew_rank(8, 6)})};
    default:
      return {proj("veronese:3", {sym_diag(3, {1, 1, 1})}), proj("veronese:4", {sym_diag(4, {1, 1, 1, 0})}),
              proj("veronese:5", {sym_diag(5, {1, 1, 1, 0, 0})}),
              proj("veronese:4", {sym_diag(4, {1, 1, 1, 1}), sym_diag(4, {1, 2, 3, 4})})};
  }
}

Report cmd_inequality_grid(const std::vector<GridFamily>& families, int bound, bool instances, const RunConfig& cfg) {
  Report report{{}, cfg, {}};
  std::vector<std::pair<std::string, RowFn>> rows;
  for (GridFamily family : families) {
    rows.emplace_back("grid:" + family_name(family), [family, bound](Row& row) {
      auto g = grid(family, bound);
      row.details["tuples"] = g.tuples;
      row.details["identity_mismatches"] = g.identity_mismatches;
      if (family == GridFamily::kSegre) row.details["transposed_form_mismatches"] = g.transposed_form_mismatches;
      Json observed{{"violations", g.violations}, {"identity_mismatches", g.identity_mismatches}};
      set_verdict(row, observed, Json{{"violations", 0}, {"identity_mismatches", 0}}, grid_anchor(family));
      if (g.tuples == 0) {
        row.pass = false;
        row.error = "empty grid";
      }
    });
    if (!instances) continue;
    for (const auto& spec : projection_instances(family))
      rows.emplace_back(spec, [spec, &cfg](Row& row) { fill_prolong(row, spec, 1, cfg); });
  }
  run_rows(report, rows);
  return report;
}

}  // namespace tube::app
