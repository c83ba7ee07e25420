#include <cctype>

#include "rows.hpp"
#include "tube/app/commands.hpp"
#include "tube/aut/aut.hpp"
#include "tube/euler/structure.hpp"
#include "tube/random.hpp"

namespace tube::app {

using detail::run_rows;

euler::SymbolSystem parse_system(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw BadDimension("symbol system needs the form kind:n, got '" + text + "'");
  std::string kind = text.substr(0, colon), arg = text.substr(colon + 1);
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw BadDimension("bad size '" + s + "' in '" + text + "'");
    return std::stoul(s);
  };
  if (kind == "minors") {
    auto x = arg.find('x');
    if (x == std::string::npos) return euler::minors(number(arg));
    return euler::minors(number(arg.substr(0, x)), number(arg.substr(x + 1)));
  }
  if (kind == "sym-minors") return euler::sym_minors(number(arg));
  if (kind == "pfaffian") return euler::pfaffian(number(arg));
  if (kind == "quadric") return euler::quadric(number(arg));
  if (kind == "linear") return euler::linear(number(arg));
  throw BadDimension("unknown symbol system '" + kind + "'");
}

namespace {

// Entries of "generic" points; small ranges hit determinantal loci too often.
constexpr long kGenericRange = 1000000000;

QVector random_vector(Rng& rng, std::size_t n, long range) {
  QVector v(n);
  for (auto& x : v) x = rng.uniform(-range, range);
  return v;
}

std::vector<std::size_t> v_dims(const euler::GradedModel& m) {
  std::vector<std::size_t> d;
  for (std::size_t k = 0; k + 1 < m.offset.size(); ++k) d.push_back(m.offset[k + 1] - m.offset[k]);
  return d;
}

QVector add(const QVector& a, const QVector& b) {
  QVector o = a;
  for (std::size_t i = 0; i < o.size(); ++i) o[i] += b[i];
  return o;
}

// Coefficient of t in the matrix polynomial t -> rho_x(t u), by interpolation
// at t = 0, ..., r.
linalg::QMatrix linear_coefficient(const euler::GradedModel& m, const QVector& u) {
  const int r = m.rank();
  std::vector<linalg::QMatrix> values;
  for (int t = 0; t <= r; ++t) {
    QVector tu = u;
    for (auto& x : tu) x *= t;
    values.push_back(euler::rho_x(m, tu));
  }
  // d/dt of the Lagrange basis polynomial L_j at 0.
  linalg::QMatrix out(m.dim(), m.dim());
  for (int j = 0; j <= r; ++j) {
    Rat deriv = 0;
    for (int i = 0; i <= r; ++i) {
      if (i == j) continue;
      Rat term = Rat(1) / (j - i);
      for (int l = 0; l <= r; ++l)
        if (l != i && l != j) term *= Rat(-l) / (j - l);
      deriv += term;
    }
    out = out + deriv * values[j];
  }
  return out;
}

}  // namespace

Report cmd_symbol_check(const std::string& system, const RunConfig& cfg) {
  Report report{{}, cfg, {}};
  run_rows(report, {{system, [&](Row& row) {
                       auto s = parse_system(system);
                       euler::validate(s);
                       auto m = euler::build_model(s, derive_seed(cfg.seed, system));
                       const std::size_t n = s.w_dim;
                       bool commute = true, raises = true;
                       for (std::size_t i = 0; i < n; ++i) {
                         const auto& gi = m.gamma_basis[i];
                         for (std::size_t j = i + 1; j < n; ++j)
                           commute = commute && linalg::is_zero(linalg::commutator(gi, m.gamma_basis[j]));
                         for (std::size_t a = 0; a < gi.rows(); ++a)
                           for (std::size_t b = 0; b < gi.cols(); ++b)
                             if (sgn(gi(a, b)) != 0 && m.block_of(a) != m.block_of(b) + 1) raises = false;
                       }
                       row.dims = v_dims(m);
                       row.details["rank"] = s.rank();
                       row.details["tube_model"] = m.j.has_value();
                       row.details["projective_space"] = m.is_projective_space();
                       if (s.rank() >= 2) row.details["base_locus_degree"] = euler::base_locus(m).l0;
                       Json observed{{"symbol_system", true}, {"gamma_commute", commute}, {"gamma_raises_degree", raises}};
                       set_verdict(row, observed, Json{{"symbol_system", true}, {"gamma_commute", true}, {"gamma_raises_degree", true}},
                                   "contraction-closed graded system with abelian Gamma");
                     }}});
  return report;
}

Report cmd_symbol_embed(const std::string& system, const std::string& point, const RunConfig& cfg) {
  Report report{{}, cfg, {}};
  run_rows(report, {{system, [&](Row& row) {
                       auto s = parse_system(system);
                       auto m = euler::build_model(s, derive_seed(cfg.seed, system));
                       QVector u;
                       std::size_t start = 0;
                       while (start <= point.size()) {
                         auto comma = point.find(',', start);
                         if (comma == std::string::npos) comma = point.size();
                         u.push_back(parse_rat(point.substr(start, comma - start)));
                         start = comma + 1;
                       }
                       if (u.size() != s.w_dim)
                         throw DimensionMismatch("point needs " + std::to_string(s.w_dim) + " coordinates");
                       auto f = euler::embed(m, u);
                       Json out = Json::array();
                       for (const auto& x : f) out.push_back(to_string(x));
                       row.dims = v_dims(m);
                       set_verdict(row, out, nullptr, "");
                     }}});
  return report;
}

Report cmd_symbol_rho(const std::string& system, std::size_t points, const RunConfig& cfg) {
  Report report{{}, cfg, {}};
  run_rows(report, {{system, [&](Row& row) {
                       auto s = parse_system(system);
                       auto m = euler::build_model(s, derive_seed(cfg.seed, system));
                       Rng rng(derive_seed(cfg.seed, system + "/points"));
                       const std::size_t n = s.w_dim;
                       bool hom = true, translation = true, slicewise = true;
                       bool lowering = true, kills_v0 = true, preserves = true;
                       for (std::size_t i = 0; i < points; ++i) {
                         QVector u = random_vector(rng, n, 4), v = random_vector(rng, n, 4);
                         hom = hom && euler::rho_x(m, u) * euler::rho_x(m, v) == euler::rho_x(m, add(u, v));
                         QVector moved = euler::rho_x(m, v) * std::span<const Rat>(euler::embed(m, u));
                         translation = translation && moved == euler::embed(m, add(u, v));
                         auto d = linear_coefficient(m, u);
                         auto g = euler::gamma(m, u);
                         for (int k = 0; k < m.rank(); ++k)
                           slicewise = slicewise && euler::block(m, d, k + 1, k) == Rat(k + 1) * euler::block(m, g, k + 1, k);
                         slicewise = slicewise && d == euler::d_rho_x(m, u);
                         if (!m.j) continue;
                         auto dy = euler::d_rho_y(m, u);
                         for (std::size_t a = 0; a < dy.rows(); ++a)
                           for (std::size_t b = 0; b < dy.cols(); ++b)
                             if (sgn(dy(a, b)) != 0 && m.block_of(a) + 1 != m.block_of(b)) lowering = false;
                         kills_v0 = kills_v0 && is_zero(dy.col_vector(0));
                         QVector p = euler::rho_y(m, v) * std::span<const Rat>(euler::embed(m, u));
                         preserves = preserves && euler::model_tangent_space(m, p).has_value();
                       }
                       row.dims = v_dims(m);
                       row.details["points"] = points;
                       Json observed{{"rho_x_homomorphism", hom}, {"translation", translation}, {"d_rho_x_slicewise", slicewise}};
                       Json expected{{"rho_x_homomorphism", true}, {"translation", true}, {"d_rho_x_slicewise", true}};
                       if (m.j) {
                         observed["d_rho_y_lowers_degree"] = lowering;
                         observed["d_rho_y_kills_v0"] = kills_v0;
                         observed["rho_y_preserves_model"] = preserves;
                         expected["d_rho_y_lowers_degree"] = true;
                         expected["d_rho_y_kills_v0"] = true;
                         expected["rho_y_preserves_model"] = true;
                       }
                       set_verdict(row, observed, expected, "vector group actions rho_x, rho_y on the Euler-symmetric model");
                     }}});
  return report;
}

Report cmd_symbol_lambda(const std::string& system, const RunConfig& cfg) {
  Report report{{}, cfg, {}};
  run_rows(report, {{system, [&](Row& row) {
                       auto s = parse_system(system);
                       auto m = euler::build_model(s, derive_seed(cfg.seed, system));
                       auto lam = euler::lambda_map(m);
                       auto vmrt = euler::vmrt_of(s);
                       auto pc = prolong_config(cfg, system);
                       auto g = aut::aut_from_samples(vmrt, pc.aut);
                       auto p = aut::prolong(g);
                       row.dims = {lam.rank, p.dim()};
                       row.details["vmrt"] = vmrt.name;
                       Json observed{{"symmetric", lam.symmetric}, {"injective", lam.injective()},
                                     {"equals_prolongation", lam.image == p.tensors}};
                       set_verdict(row, observed, Json{{"symmetric", true}, {"injective", true}, {"equals_prolongation", true}},
                                   "lambda is an isomorphism onto aut^(1) of the VMRT cone");
                     }}});
  return report;
}

Report cmd_symbol_bracket(const std::string& system, const RunConfig& cfg) {
  Report report{{}, cfg, {}};
  run_rows(report, {{system, [&](Row& row) {
                       auto s = parse_system(system);
                       auto m = euler::build_model(s, derive_seed(cfg.seed, system));
                       const std::size_t n = s.w_dim;
                       std::size_t failures = 0;
                       for (std::size_t i = 0; i < n; ++i)
                         for (std::size_t j = 0; j < n; ++j) {
                           auto c = euler::bracket_fixed_check(m, unit_vector(n, i), unit_vector(n, j), 3,
                                                               derive_seed(cfg.seed, system + std::to_string(i * n + j)));
                           if (!c.ok()) ++failures;
                         }
                       row.dims = v_dims(m);
                       row.details["pairs"] = n * n;
                       set_verdict(row, Json(failures), Json(0), "gamma = [g_1, g_-1] preserves V_k and acts through Df");
                     }}});
  return report;
}

Report cmd_symbol_base_locus(const std::string& system, std::size_t samples, const RunConfig& cfg) {
  Report report{{}, cfg, {}};
  run_rows(report, {{system, [&](Row& row) {
                       auto s = parse_system(system);
                       auto m = euler::build_model(s, derive_seed(cfg.seed, system));
                       auto bl = euler::base_locus(m, 32, derive_seed(cfg.seed, system + "/probes"));
                       auto vmrt = euler::vmrt_of(s);
                       Rng rng(derive_seed(cfg.seed, system + "/samples"));
                       std::size_t in = 0, out = 0;
                       for (std::size_t i = 0; i < samples; ++i) {
                         if (bl.contains(zoo::sample_point(vmrt, rng).point)) ++in;
                         if (!bl.contains(random_vector(rng, s.w_dim, kGenericRange))) ++out;
                       }
                       row.dims = {static_cast<std::size_t>(bl.l0)};
                       row.details["vmrt"] = vmrt.name;
                       Json observed{{"vmrt_points_inside", in}, {"generic_points_outside", out}};
                       set_verdict(row, observed, Json{{"vmrt_points_inside", samples}, {"generic_points_outside", samples}},
                                   "base locus of the fundamental forms is the VMRT");
                     }}});
  return report;
}

Report cmd_symbol_pair(const std::string& system, const RunConfig& cfg) {
  Report report{{}, cfg, {}};
  run_rows(report, {{system, [&](Row& row) {
                       auto s = parse_system(system);
                       auto m = euler::build_model(s, derive_seed(cfg.seed, system));
                       Rng rng(derive_seed(cfg.seed, system + "/pair"));
                       std::size_t attempts = 0;
                       for (;;) {
                         ++attempts;
                         try {
                           auto pa = euler::pair_action(m, random_vector(rng, s.w_dim, 3), random_vector(rng, s.w_dim, 3));
                           row.details["attempts"] = attempts;
                           row.dims = v_dims(m);
                           set_verdict(row, Json{{"euler_source", pa.source_euler}, {"euler_sink", pa.sink_euler}},
                                       Json{{"euler_source", true}, {"euler_sink", true}},
                                       "conjugated grading action has an Euler source and sink");
                           return;
                         } catch (const DegeneratePair&) {
                           if (attempts == 8) throw;
                         }
                       }
                     }}});
  return report;
}

}  // namespace tube::app
