#include <map>

#include "tube/error.hpp"
#include "tube/linalg/sparse.hpp"
#include "tube/zoo/octonion.hpp"
#include "tube/zoo/spinor_data.hpp"
#include "tube/zoo/variety.hpp"

namespace tube::zoo {

using linalg::QMatrix;
using tensors::Polynomial;
using tensors::SymForm;

namespace {

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

SymForm quad(std::size_t n, const std::vector<std::tuple<long, std::size_t, std::size_t>>& terms) {
  Polynomial p(n);
  for (auto [c, i, j] : terms) p += var(n, i) * var(n, j) * Rat(c);
  return SymForm(n, 2, std::move(p));
}

// Index of the pair (i <= j) or (i < j) in lex order.
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j, bool strict) {
  std::size_t idx = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = strict ? a + 1 : a; b < n; ++b) {
      if (a == i && b == j) return idx;
      ++idx;
    }
  throw DimensionMismatch("pair index out of range");
}

}  // namespace

ParamVariety make_quadric(std::size_t n) {
  if (n < 3) throw BadDimension("quadric needs n >= 3");
  const std::size_t m = n - 1;  // t_1..t_{n-2}, scale s (last)
  const std::size_t s = n - 2;
  std::vector<Polynomial> comps;
  comps.push_back(var(m, s));
  Polynomial q(m);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    comps.push_back(var(m, s) * var(m, i));
    q += var(m, i) * var(m, i);
  }
  comps.push_back(var(m, s) * q);
  std::vector<std::tuple<long, std::size_t, std::size_t>> terms{{1, 0, n - 1}};
  for (std::size_t i = 1; i + 1 < n; ++i) terms.emplace_back(-1, i, i);
  ParamVariety x;
  x.name = "quadric:" + std::to_string(n);
  x.ambient_dim = n;
  x.param_dim = m;
  x.cone_dim = n - 1;
  x.phi = tensors::PolyMap(m, std::move(comps));
  x.quadrics = {quad(n, terms)};
  x.expected_dim_aut1 = n;
  return x;
}

ParamVariety make_segre(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw BadDimension("segre needs a, b >= 1");
  const std::size_t m = a + b, n = a * b;
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) comps.push_back(var(m, i) * var(m, a + j));
  std::vector<SymForm> qs;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t k = i + 1; k < a; ++k)
      for (std::size_t j = 0; j < b; ++j)
        for (std::size_t l = j + 1; l < b; ++l)
          qs.push_back(quad(n, {{1, i * b + j, k * b + l}, {-1, i * b + l, k * b + j}}));
  ParamVariety x;
  x.name = "segre:" + std::to_string(a) + "x" + std::to_string(b);
  x.ambient_dim = n;
  x.param_dim = m;
  x.cone_dim = a + b - 1;
  x.phi = tensors::PolyMap(m, std::move(comps));
  x.quadrics = std::move(qs);
  x.expected_dim_aut1 = n;
  return x;
}

ParamVariety make_veronese2(std::size_t n) {
  if (n < 1) throw BadDimension("veronese needs n >= 1");
  const std::size_t big = n * (n + 1) / 2;
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) comps.push_back(var(n, i) * var(n, j));
  auto x_ = [&](std::size_t i, std::size_t j) { return i <= j ? pair_index(n, i, j, false) : pair_index(n, j, i, false); };
  std::vector<SymForm> minors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = j + 1; l < n; ++l)
          minors.push_back(quad(big, {{1, x_(i, j), x_(k, l)}, {-1, x_(i, l), x_(k, j)}}));
  ParamVariety x;
  x.name = "veronese:" + std::to_string(n);
  x.ambient_dim = big;
  x.param_dim = n;
  x.cone_dim = n;
  x.phi = tensors::PolyMap(n, std::move(comps));
  x.quadrics = independent_subset(minors);
  x.expected_dim_aut1 = big;
  return x;
}

ParamVariety make_pluecker_rank2(std::size_t n) {
  if (n < 2) throw BadDimension("pluecker needs n >= 2");
  const std::size_t m = 2 * n, big = n * (n - 1) / 2;
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      comps.push_back(var(m, i) * var(m, n + j) - var(m, j) * var(m, n + i));
  auto p = [&](std::size_t i, std::size_t j) { return pair_index(n, i, j, true); };
  std::vector<SymForm> qs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          qs.push_back(quad(big, {{1, p(i, j), p(k, l)}, {-1, p(i, k), p(j, l)}, {1, p(i, l), p(j, k)}}));
  ParamVariety x;
  x.name = "pluecker:" + std::to_string(n);
  x.ambient_dim = big;
  x.param_dim = m;
  x.cone_dim = n >= 2 ? 2 * n - 3 : 0;
  x.phi = tensors::PolyMap(m, std::move(comps));
  x.quadrics = std::move(qs);
  x.expected_dim_aut1 = big;
  return x;
}

namespace {

tensors::PolyMap spinor5_phi() {
  const std::size_t m = 11;  // A_ij (i<j, lex) then scale s
  const std::size_t s = 10;
  auto a = [&](std::size_t i, std::size_t j) {
    if (i == j) return Polynomial(m);
    if (i < j) return var(m, pair_index(5, i, j, true));
    return -var(m, pair_index(5, j, i, true));
  };
  std::vector<Polynomial> comps;
  comps.push_back(var(m, s));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) comps.push_back(var(m, s) * a(i, j));
  for (std::size_t l = 0; l < 5; ++l) {
    std::vector<std::size_t> idx;
    for (std::size_t t = 0; t < 5; ++t)
      if (t != l) idx.push_back(t);
    auto [i, j, k, h] = std::tuple{idx[0], idx[1], idx[2], idx[3]};
    Polynomial pf = a(i, j) * a(k, h) - a(i, k) * a(j, h) + a(i, h) * a(j, k);
    comps.push_back(var(m, s) * pf);
  }
  return tensors::PolyMap(m, std::move(comps));
}

}  // namespace

ParamVariety make_spinor5() {
  ParamVariety x;
  x.name = "spinor:5";
  x.ambient_dim = 16;
  x.param_dim = 11;
  x.cone_dim = 11;
  x.phi = spinor5_phi();
  for (const auto& q : spinor5_quadric_table()) x.quadrics.push_back(quad(16, q));
  x.expected_dim_aut1 = 16;
  return x;
}

ParamVariety make_severi_e6() {
  const std::size_t m = 17;  // scale s, then y (8), then z (8)
  using Oct = SplitOctonion<Polynomial>;
  Oct y = Oct::filled(Polynomial(m)), z = Oct::filled(Polynomial(m));
  for (int i = 0; i < 8; ++i) {
    y.c[i] = var(m, 1 + i);
    z.c[i] = var(m, 9 + i);
  }
  JordanElem<Polynomial> e{Polynomial::constant(m, Rat(1)), z.norm(), y.norm(), (y * z).conj(), y, z};
  std::vector<Polynomial> comps;
  for (const auto& c : e.coordinates()) comps.push_back(var(m, 0) * c);

  // Adjugate in the 27 coordinates.
  const std::size_t n = 27;
  JordanElem<Polynomial> g{var(n, 0), var(n, 1), var(n, 2), Oct::filled(Polynomial(n)), Oct::filled(Polynomial(n)),
                           Oct::filled(Polynomial(n))};
  for (int i = 0; i < 8; ++i) {
    g.x.c[i] = var(n, 3 + i);
    g.y.c[i] = var(n, 11 + i);
    g.z.c[i] = var(n, 19 + i);
  }
  ParamVariety x;
  x.name = "severi";
  x.ambient_dim = n;
  x.param_dim = m;
  x.cone_dim = 17;
  x.phi = tensors::PolyMap(m, std::move(comps));
  for (const auto& c : g.sharp().coordinates()) x.quadrics.emplace_back(n, 2, c);
  x.expected_dim_aut1 = n;
  return x;
}

ParamVariety make_sympl(std::size_t k, std::size_t mq) {
  if (k < 1) throw BadDimension("sympl needs k >= 1");
  const std::size_t m = k + mq;
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) comps.push_back(var(m, i) * var(m, j));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t a = 0; a < mq; ++a) comps.push_back(var(m, i) * var(m, k + a));
  ParamVariety x;
  x.name = "sympl:" + std::to_string(k) + "," + std::to_string(mq);
  x.ambient_dim = comps.size();
  x.param_dim = m;
  x.cone_dim = m;
  x.phi = tensors::PolyMap(m, std::move(comps));
  x.expected_dim_aut1 = k * (k + 1) / 2;
  return x;
}

QMatrix quotient_map(const linalg::Subspace& l) {
  const std::size_t n = l.ambient_dim();
  std::vector<bool> pivot(n, false);
  for (auto c : l.pivots()) pivot[c] = true;
  QMatrix pi(n - l.dim(), n);
  std::size_t t = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot[c]) continue;
    pi(t, c) = 1;
    for (std::size_t r = 0; r < l.dim(); ++r)
      if (sgn(l.basis()(r, c)) != 0) pi(t, l.pivots()[r]) = -l.basis()(r, c);
    ++t;
  }
  return pi;
}

ParamVariety project(const ParamVariety& x, const linalg::Subspace& l, const ProjectOptions& opts) {
  if (l.ambient_dim() != x.ambient_dim) throw DimensionMismatch("project: L lives in the wrong space");
  if (l.dim() >= x.ambient_dim) throw BadDimension("project: L must be a proper subspace");
  if (l.dim() == 1 && !x.quadrics.empty()) {
    QVector v = l.basis().row_vector(0);
    bool on_x = true;
    for (const auto& q : x.quadrics) on_x = on_x && sgn(q(v)) == 0;
    if (on_x) throw SecantViolation("L is a point of " + x.name);
  }
  Rng rng(opts.seed);
  for (std::size_t i = 0; i < opts.secant_samples && l.dim() > 0; ++i) {
    auto p1 = sample_point(x, rng).point;
    auto p2 = sample_point(x, rng).point;
    Rat lambda = rng.uniform(-10, 10);
    QVector v(p1.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = p1[j] + lambda * p2[j];
    if (opts.secant && !is_zero(v) && l.contains(v)) throw SecantViolation("L meets the secant variety of " + x.name);
    if (l.contains(p1)) throw SecantViolation("L meets " + x.name);
  }
  ParamVariety y;
  y.name = "project(" + x.name + ")";
  y.ambient_dim = x.ambient_dim - l.dim();
  y.param_dim = x.param_dim;
  y.cone_dim = x.cone_dim;
  y.phi = x.phi.then(quotient_map(l));
  return y;
}

Sample sample_point(const ParamVariety& x, Rng& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    QVector t(x.param_dim);
    for (auto& v : t) v = rng.uniform(-10, 10);
    QVector p = x.phi(t);
    if (!is_zero(p)) return {std::move(t), std::move(p)};
  }
  throw DegenerateParametrization("phi vanished on 100 consecutive samples for " + x.name);
}

Sample sample_point(const ParamVariety& x, std::uint64_t seed) {
  Rng rng(seed);
  return sample_point(x, rng);
}

std::vector<SymForm> derive_quadric_ideal(const tensors::PolyMap& phi) {
  const std::size_t n = phi.target_dim();
  const auto& comps = phi.components();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<tensors::Exponents, std::size_t> monomial_row;
  linalg::QSystem sys(n * (n + 1) / 2);
  std::vector<linalg::QSystem::Row> rows;
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++col) {
      pairs.emplace_back(i, j);
      auto prod = comps[i] * comps[j];
      for (const auto& [e, c] : prod.terms()) {
        auto [it, inserted] = monomial_row.try_emplace(e, rows.size());
        if (inserted) rows.emplace_back();
        rows[it->second].emplace_back(col, c);
      }
    }
  for (auto& r : rows) sys.add_row(std::move(r));
  auto k = linalg::certified_kernel(sys).kernel;
  std::vector<SymForm> out;
  for (std::size_t r = 0; r < k.dim(); ++r) {
    Polynomial p(n);
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      const Rat& v = k.basis()(r, c);
      if (sgn(v) != 0) p += var(n, pairs[c].first) * var(n, pairs[c].second) * v;
    }
    out.emplace_back(n, 2, std::move(p));
  }
  return out;
}

std::vector<SymForm> independent_subset(const std::vector<SymForm>& forms) {
  if (forms.empty()) return {};
  linalg::RowEchelon<linalg::RationalField> ech({}, forms.front().coefficients().size());
  std::vector<SymForm> out;
  for (const auto& f : forms)
    if (ech.insert(f.coefficients())) out.push_back(f);
  return out;
}

QMatrix gram_matrix(const SymForm& q) {
  if (q.degree() != 2) throw BadDimension("gram_matrix needs a quadratic form");
  const std::size_t n = q.dim();
  QMatrix s(n, n);
  for (const auto& [e, c] : q.polynomial().terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) s(idx[0], idx[0]) += c;
    else {
      s(idx[0], idx[1]) += c / 2;
      s(idx[1], idx[0]) += c / 2;
    }
  }
  return s;
}

}  // namespace tube::zoo
