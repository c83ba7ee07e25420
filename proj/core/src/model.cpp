#include "tube/euler/model.hpp"

#include "tube/error.hpp"
#include "tube/linalg/echelon.hpp"
#include "tube/random.hpp"

namespace tube::euler {

using linalg::RationalField;

namespace {

Rat det(QMatrix a) {
  const std::size_t n = a.rows();
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      d = -d;
    }
    d *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Rat f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

Rat pfaffian_value(const QMatrix& a, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return 1;
  Rat out = 0;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    if (sgn(a(idx[0], idx[j])) == 0) continue;
    std::vector<std::size_t> rest;
    for (std::size_t t = 1; t < idx.size(); ++t)
      if (t != j) rest.push_back(idx[t]);
    Rat term = a(idx[0], idx[j]) * pfaffian_value(a, rest);
    if (j % 2) out += term;
    else out -= term;
  }
  return out;
}

QMatrix unpack(const SymbolSystem& s, std::span<const Rat> u) {
  const std::size_t n = s.size;
  QMatrix a(n, s.kind == TubeKind::kMinors ? s.cols : n);
  std::size_t idx = 0;
  switch (s.kind) {
    case TubeKind::kMinors:
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = u[idx++];
      break;
    case TubeKind::kSymMinors:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++idx) a(i, j) = a(j, i) = u[idx];
      break;
    case TubeKind::kPfaffian:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++idx) {
          a(i, j) = u[idx];
          a(j, i) = -u[idx];
        }
      break;
    default:
      throw NotTubeModel(s.name + " is not a matrix model");
  }
  return a;
}

QVector pack(const SymbolSystem& s, const QMatrix& a) {
  QVector u;
  switch (s.kind) {
    case TubeKind::kMinors:
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) u.push_back(a(i, j));
      break;
    case TubeKind::kSymMinors:
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.rows(); ++j) u.push_back(a(i, j));
      break;
    case TubeKind::kPfaffian:
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.rows(); ++j) u.push_back(a(i, j));
      break;
    default:
      throw NotTubeModel(s.name + " is not a matrix model");
  }
  return u;
}

bool has_duality(const SymbolSystem& s) {
  switch (s.kind) {
    case TubeKind::kMinors: return s.size == s.cols;
    case TubeKind::kSymMinors: return true;
    case TubeKind::kPfaffian: return s.size % 2 == 0;
    case TubeKind::kQuadric: return true;
    case TubeKind::kNone: return false;
  }
  return false;
}

Int binomial(int n, int k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

QVector random_vector(Rng& rng, std::size_t n, long bound) {
  QVector v(n);
  for (auto& x : v) x = rng.uniform(-bound, bound);
  return v;
}

}  // namespace

Rat jordan_norm(const SymbolSystem& s, std::span<const Rat> u) {
  if (!has_duality(s)) throw NotTubeModel(s.name + " has no Jordan norm");
  if (u.size() != s.w_dim) throw DimensionMismatch("jordan_norm: wrong length");
  if (s.kind == TubeKind::kQuadric) return s.forms[2][0](u);
  QMatrix a = unpack(s, u);
  if (s.kind == TubeKind::kPfaffian) {
    std::vector<std::size_t> idx(s.size);
    for (std::size_t i = 0; i < s.size; ++i) idx[i] = i;
    return pfaffian_value(a, idx);
  }
  return det(a);
}

std::optional<QVector> jordan_inverse(const SymbolSystem& s, std::span<const Rat> u) {
  Rat norm = jordan_norm(s, u);
  if (sgn(norm) == 0) return std::nullopt;
  if (s.kind == TubeKind::kQuadric) {
    QVector v(u.begin(), u.end());
    for (auto& x : v) x /= norm;
    return v;
  }
  return pack(s, linalg::inverse(RationalField{}, unpack(s, u)));
}

std::size_t GradedModel::block_of(std::size_t index) const {
  for (std::size_t k = 0; k + 1 < offset.size(); ++k)
    if (index < offset[k + 1]) return k;
  throw DimensionMismatch("index outside V");
}

GradedModel build_model(const SymbolSystem& s, std::uint64_t seed) {
  validate(s);
  GradedModel m;
  m.system = s;
  const int r = s.rank();
  const std::size_t n = s.w_dim;
  m.offset.push_back(0);
  for (int k = 0; k <= r; ++k) m.offset.push_back(m.offset.back() + s.dim(k));
  const std::size_t dv = m.dim();
  m.gamma_basis.assign(n, QMatrix(dv, dv));
  const RationalField q;
  for (int k = 0; k < r; ++k) {
    QMatrix lower(s.dim(k), tensors::sym_dim(n, k));
    for (std::size_t i = 0; i < s.dim(k); ++i) {
      auto c = s.forms[k][i].coefficients();
      for (std::size_t t = 0; t < c.size(); ++t) lower(i, t) = c[t];
    }
    for (std::size_t v = 0; v < n; ++v) {
      QMatrix targets(s.dim(k + 1), lower.cols());
      for (std::size_t j = 0; j < s.dim(k + 1); ++j) {
        auto c = tensors::contract(s.forms[k + 1][j], unit_vector(n, v)).coefficients();
        for (std::size_t t = 0; t < c.size(); ++t) targets(j, t) = c[t];
      }
      auto x = linalg::solve_xa_eq_b(q, lower, targets);
      if (!x) throw InvalidSymbolSystem(s.name + ": contraction leaves F^" + std::to_string(k));
      for (std::size_t j = 0; j < s.dim(k + 1); ++j)
        for (std::size_t i = 0; i < s.dim(k); ++i) m.gamma_basis[v](m.offset[k + 1] + j, m.offset[k] + i) = (*x)(j, i);
    }
  }
  if (!has_duality(s)) return m;

  Rng rng(seed);
  auto draw = [&] {
    for (;;) {
      QVector u = random_vector(rng, n, 3);
      if (auto inv = jordan_inverse(s, u)) return std::pair{u, *inv};
    }
  };
  const std::size_t count = dv + 4;
  QMatrix a(dv, count), b(dv, count);
  for (std::size_t c = 0; c < count; ++c) {
    auto [u, inv] = draw();
    Rat norm = jordan_norm(s, u);
    auto fu = embed(m, u), fi = embed(m, inv);
    for (std::size_t i = 0; i < dv; ++i) {
      a(i, c) = fu[i];
      b(i, c) = norm * fi[i];
    }
  }
  auto j = linalg::solve_xa_eq_b(q, a, b);
  if (!j) throw NotTubeModel(s.name + ": no linear map realizes the inversion");
  for (int h = 0; h < 5; ++h) {
    auto [u, inv] = draw();
    Rat norm = jordan_norm(s, u);
    auto lhs = (*j) * std::span<const Rat>(embed(m, u));
    auto rhs = embed(m, inv);
    for (auto& x : rhs) x *= norm;
    if (lhs != rhs) throw NotTubeModel(s.name + ": duality fails on a held-out sample");
  }
  for (std::size_t row = 0; row < dv; ++row)
    for (std::size_t col = 0; col < dv; ++col)
      if (sgn((*j)(row, col)) != 0 && m.block_of(row) != static_cast<std::size_t>(r) - m.block_of(col))
        throw NotTubeModel(s.name + ": duality does not reverse the grading");
  m.j_inv = linalg::inverse(q, *j);
  m.j = std::move(j);
  return m;
}

QVector embed(const GradedModel& m, std::span<const Rat> u) {
  if (u.size() != m.w_dim()) throw DimensionMismatch("embed: wrong length");
  QVector out;
  out.reserve(m.dim());
  for (const auto& level : m.system.forms)
    for (const auto& f : level) out.push_back(f(u));
  return out;
}

QVector embed_derivative(const GradedModel& m, std::span<const Rat> u, std::span<const Rat> v) {
  if (u.size() != m.w_dim() || v.size() != m.w_dim()) throw DimensionMismatch("embed_derivative: wrong length");
  QVector out;
  out.reserve(m.dim());
  for (const auto& level : m.system.forms)
    for (const auto& f : level) {
      Rat d = 0;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) d += v[i] * f.polynomial().derivative(i).evaluate(u);
      out.push_back(d);
    }
  return out;
}

QMatrix gamma(const GradedModel& m, std::span<const Rat> u) {
  if (u.size() != m.w_dim()) throw DimensionMismatch("gamma: wrong length");
  QMatrix g(m.dim(), m.dim());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (sgn(u[i]) != 0) g = g + u[i] * m.gamma_basis[i];
  return g;
}

QMatrix d_rho_x(const GradedModel& m, std::span<const Rat> u) {
  QMatrix g = gamma(m, u);
  for (std::size_t row = 0; row < g.rows(); ++row)
    for (std::size_t col = 0; col < g.cols(); ++col)
      if (sgn(g(row, col)) != 0) g(row, col) *= Rat(static_cast<long>(m.block_of(col) + 1));
  return g;
}

QMatrix rho_x(const GradedModel& m, std::span<const Rat> u) {
  QMatrix g = gamma(m, u);
  QMatrix power = linalg::identity(m.dim());
  QMatrix out(m.dim(), m.dim());
  for (int e = 0; e <= m.rank(); ++e) {
    for (std::size_t row = 0; row < out.rows(); ++row)
      for (std::size_t col = 0; col < out.cols(); ++col) {
        if (sgn(power(row, col)) == 0) continue;
        int l = static_cast<int>(m.block_of(row)), k = static_cast<int>(m.block_of(col));
        out(row, col) += Rat(binomial(l, k)) * power(row, col);
      }
    power = g * power;
  }
  return out;
}

QMatrix d_rho_y(const GradedModel& m, std::span<const Rat> w) {
  if (!m.j) throw NotTubeModel(m.system.name + " carries no duality");
  return *m.j * d_rho_x(m, w) * *m.j_inv;
}

QMatrix rho_y(const GradedModel& m, std::span<const Rat> w) {
  if (!m.j) throw NotTubeModel(m.system.name + " carries no duality");
  return *m.j * rho_x(m, w) * *m.j_inv;
}

QMatrix block(const GradedModel& m, const QMatrix& a, int l, int k) {
  QMatrix b(m.system.dim(l), m.system.dim(k));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = a(m.offset[l] + i, m.offset[k] + j);
  return b;
}

}  // namespace tube::euler
