#include "tube/euler/structure.hpp"

#include "tube/error.hpp"
#include "tube/random.hpp"

namespace tube::euler {

namespace {

// Row-wise nonzeros of a rational matrix, for repeated matrix-vector products.
struct SparseQ {
  std::vector<std::vector<std::pair<std::size_t, Rat>>> rows;
  explicit SparseQ(const QMatrix& a) : rows(a.rows()) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (sgn(a(i, j)) != 0) rows[i].emplace_back(j, a(i, j));
  }
  QVector operator*(const QVector& v) const {
    QVector out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [j, x] : rows[i])
        if (sgn(v[j]) != 0) out[i] += x * v[j];
    return out;
  }
};

QVector axpy(const QVector& a, const QVector& b, int sign) {
  QVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (sign > 0) out[i] += b[i];
    else out[i] -= b[i];
  }
  return out;
}

std::optional<linalg::Subspace> chart_tangent(const GradedModel& m, std::span<const Rat> p) {
  if (sgn(p[0]) == 0) return std::nullopt;
  const std::size_t n = m.w_dim();
  QVector w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = p[m.offset[1] + i] / p[0];
  auto f = embed(m, w);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] * p[0] != p[i]) return std::nullopt;
  std::vector<QVector> gens{f};
  for (std::size_t i = 0; i < n; ++i) gens.push_back(embed_derivative(m, w, unit_vector(n, i)));
  return linalg::span_q(m.dim(), gens);
}

}  // namespace

bool BaseLocus::contains(std::span<const Rat> w) const {
  for (const auto& f : forms)
    if (sgn(f(w)) != 0) return false;
  return true;
}

BaseLocus base_locus(const GradedModel& m, std::size_t random_probes, std::uint64_t seed) {
  const auto& s = m.system;
  const std::size_t n = s.w_dim;
  const int r = s.rank();
  std::vector<QVector> probes;
  for (std::size_t i = 0; i < n; ++i) probes.push_back(unit_vector(n, i));
  Rng rng(seed);
  for (std::size_t i = 0; i < random_probes; ++i) {
    QVector v(n);
    for (auto& x : v) x = rng.uniform(-5, 5);
    if (!is_zero(v)) probes.push_back(std::move(v));
  }
  auto in_bs = [&](const QVector& w, int k) {
    if (k > r) return true;
    for (const auto& f : s.forms[k])
      if (sgn(f(w)) != 0) return false;
    return true;
  };
  BaseLocus out;
  out.l0 = r + 1;
  for (int k = 2; k <= r; ++k) {
    bool hit = false;
    for (const auto& p : probes) hit = hit || in_bs(p, k);
    if (hit) {
      out.l0 = k;
      break;
    }
  }
  for (const auto& p : probes)
    for (int k = 2; k <= r; ++k)
      if (in_bs(p, k) && !in_bs(p, k + 1))
        throw InvalidSymbolSystem(s.name + ": base loci are not nested");
  if (out.l0 <= r) out.forms = s.forms[out.l0];
  return out;
}

LambdaMap lambda_map(const GradedModel& m) {
  if (!m.j) throw NotTubeModel(m.system.name + " carries no duality");
  const std::size_t n = m.w_dim(), dv = m.dim();
  std::vector<SparseQ> x, y;
  for (std::size_t i = 0; i < n; ++i) {
    x.emplace_back(d_rho_x(m, unit_vector(n, i)));
    y.emplace_back(d_rho_y(m, unit_vector(n, i)));
  }
  QVector e0 = unit_vector(dv, 0);
  std::vector<QVector> xe0;
  for (std::size_t c = 0; c < n; ++c) xe0.push_back(x[c] * e0);

  tensors::MultisetIndex ms2(n, 2);
  LambdaMap out;
  out.symmetric = true;
  std::vector<QVector> tensors_list;
  for (std::size_t b = 0; b < n; ++b) {
    QVector ye0 = y[b] * e0;
    // values[a][c] = [[Y, X_a], X_c] e0 read in V_1
    std::vector<std::vector<QVector>> values(n, std::vector<QVector>(n));
    for (std::size_t a = 0; a < n; ++a) {
      QVector xa_ye0 = x[a] * ye0;
      QVector bracket_e0 = axpy(y[b] * xe0[a], xa_ye0, -1);  // [Y, X_a] e0
      for (std::size_t c = 0; c < n; ++c) {
        QVector t1 = axpy(y[b] * (x[a] * xe0[c]), x[a] * (y[b] * xe0[c]), -1);  // [Y, X_a] X_c e0
        QVector v = axpy(t1, x[c] * bracket_e0, -1);
        values[a][c] = QVector(v.begin() + m.offset[1], v.begin() + m.offset[2]);
      }
    }
    QVector t(n * ms2.size());
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = a; c < n; ++c) {
        if (values[a][c] != values[c][a]) out.symmetric = false;
        std::size_t s = ms2.index_of({static_cast<int>(a), static_cast<int>(c)});
        for (std::size_t l = 0; l < n; ++l) t[l * ms2.size() + s] = values[a][c][l];
      }
    out.images.push_back(tensors::VValuedSymMap::from_tensor(n, 2, n, t));
    tensors_list.push_back(std::move(t));
  }
  out.image = linalg::span_q(n * ms2.size(), tensors_list);
  out.rank = out.image.dim();
  return out;
}

BracketCheck bracket_fixed_check(const GradedModel& m, std::span<const Rat> a, std::span<const Rat> b,
                                 std::size_t samples, std::uint64_t seed) {
  QMatrix g = linalg::commutator(d_rho_x(m, a), d_rho_y(m, b));
  BracketCheck out;
  out.block_diagonal = true;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (sgn(g(i, j)) != 0 && m.block_of(i) != m.block_of(j)) out.block_diagonal = false;
  out.c = g(0, 0);
  const std::size_t n = m.w_dim();
  QMatrix gw = block(m, g, 1, 1);
  for (std::size_t i = 0; i < n; ++i) gw(i, i) -= out.c;
  Rng rng(seed);
  out.identity_holds = true;
  for (std::size_t s = 0; s < samples && out.identity_holds; ++s) {
    QVector w(n);
    for (auto& v : w) v = rng.uniform(-6, 6);
    QVector f = embed(m, w);
    QVector lhs = g * std::span<const Rat>(f);
    QVector dir = gw * std::span<const Rat>(w);
    QVector rhs = embed_derivative(m, w, dir);
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += out.c * f[i];
    if (lhs != rhs) out.identity_holds = false;
  }
  return out;
}

std::optional<linalg::Subspace> model_tangent_space(const GradedModel& m, std::span<const Rat> p) {
  if (p.size() != m.dim()) throw DimensionMismatch("model_tangent_space: wrong length");
  if (auto t = chart_tangent(m, p)) return t;
  if (!m.j) return std::nullopt;
  QVector q = *m.j_inv * p;
  auto t = chart_tangent(m, q);
  if (!t) return std::nullopt;
  std::vector<QVector> gens;
  for (std::size_t i = 0; i < t->dim(); ++i) gens.push_back(*m.j * t->basis().row(i));
  return linalg::span_q(m.dim(), gens);
}

PairAction pair_action(const GradedModel& m, std::span<const Rat> u, std::span<const Rat> w) {
  if (!m.j) throw NotTubeModel(m.system.name + " carries no duality");
  const std::size_t dv = m.dim();
  QVector mu(u.begin(), u.end()), mw(w.begin(), w.end());
  for (auto& v : mu) v = -v;
  for (auto& v : mw) v = -v;
  PairAction out;
  out.g = rho_x(m, u) * rho_y(m, w);
  QMatrix ginv = rho_y(m, mw) * rho_x(m, mu);
  QMatrix h(dv, dv);
  for (std::size_t i = 0; i < dv; ++i) h(i, i) = -static_cast<long>(m.block_of(i));
  out.h = out.g * h * ginv;
  out.source = out.g.col_vector(0);
  out.sink = out.g.col_vector(dv - 1);
  auto ts = model_tangent_space(m, out.source);
  auto tk = model_tangent_space(m, out.sink);
  if (!ts || !tk) throw DegeneratePair("a fixed point of the pair lies outside both charts");
  auto relative = [&](const linalg::Subspace& t, const QVector& p, long shift) {
    auto line = linalg::span_q(dv, {p});
    for (std::size_t i = 0; i < t.dim(); ++i) {
      QVector tau = t.basis().row_vector(i);
      QVector v = out.h * std::span<const Rat>(tau);
      for (std::size_t k = 0; k < dv; ++k) v[k] -= Rat(shift) * tau[k];
      if (!line.contains(v)) return false;
    }
    return true;
  };
  out.source_euler = relative(*ts, out.source, -1);
  out.sink_euler = relative(*tk, out.sink, 1 - m.rank());
  return out;
}

}  // namespace tube::euler
