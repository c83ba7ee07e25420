#include "tube/euler/symbol_system.hpp"

#include <functional>

#include "tube/error.hpp"
#include "tube/linalg/echelon.hpp"

namespace tube::euler {

using tensors::Polynomial;
using tensors::SymForm;

namespace {

using PMatrix = std::vector<std::vector<Polynomial>>;

Polynomial det(const PMatrix& a, std::size_t nvars) {
  const std::size_t k = a.size();
  if (k == 0) return Polynomial::constant(nvars, Rat(1));
  if (k == 1) return a[0][0];
  Polynomial out(nvars);
  for (std::size_t j = 0; j < k; ++j) {
    if (a[0][j].is_zero()) continue;
    PMatrix sub;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.push_back(a[i][c]);
      sub.push_back(std::move(row));
    }
    Polynomial term = a[0][j] * det(sub, nvars);
    if (j % 2) out -= term;
    else out += term;
  }
  return out;
}

Polynomial pf(const PMatrix& a, const std::vector<std::size_t>& idx, std::size_t nvars) {
  if (idx.empty()) return Polynomial::constant(nvars, Rat(1));
  Polynomial out(nvars);
  for (std::size_t j = 1; j < idx.size(); ++j) {
    std::vector<std::size_t> rest;
    for (std::size_t t = 1; t < idx.size(); ++t)
      if (t != j) rest.push_back(idx[t]);
    Polynomial term = a[idx[0]][idx[j]] * pf(a, rest, nvars);
    if (j % 2) out += term;
    else out -= term;
  }
  return out;
}

void subsets(std::size_t n, std::size_t k, std::function<void(const std::vector<std::size_t>&)> fn) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      fn(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::vector<SymForm> base_forms(std::size_t n, int k) {
  if (k == 0) return {SymForm(n, 0, Polynomial::constant(n, Rat(1)))};
  std::vector<SymForm> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(n, 1, Polynomial::variable(n, i));
  return out;
}

std::vector<SymForm> minors_of(const PMatrix& a, std::size_t rows, std::size_t cols, std::size_t nvars, std::size_t k) {
  std::vector<SymForm> out;
  subsets(rows, k, [&](const std::vector<std::size_t>& r) {
    subsets(cols, k, [&](const std::vector<std::size_t>& c) {
      PMatrix sub;
      for (auto i : r) {
        std::vector<Polynomial> row;
        for (auto j : c) row.push_back(a[i][j]);
        sub.push_back(std::move(row));
      }
      out.emplace_back(nvars, static_cast<int>(k), det(sub, nvars));
    });
  });
  return out;
}

}  // namespace

SymbolSystem minors(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw InvalidSymbolSystem("minors needs a positive matrix size");
  const std::size_t n = a * b;
  PMatrix x(a, std::vector<Polynomial>(b, Polynomial(n)));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) x[i][j] = Polynomial::variable(n, i * b + j);
  std::vector<std::vector<SymForm>> gens{base_forms(n, 0), base_forms(n, 1)};
  for (std::size_t k = 2; k <= std::min(a, b); ++k) gens.push_back(minors_of(x, a, b, n, k));
  auto s = from_generators("minors:" + std::to_string(a) + (a == b ? "" : "x" + std::to_string(b)), n, gens);
  s.kind = TubeKind::kMinors;
  s.size = a;
  s.cols = b;
  return s;
}

SymbolSystem sym_minors(std::size_t n) {
  if (n < 1) throw InvalidSymbolSystem("sym_minors needs n >= 1");
  const std::size_t big = n * (n + 1) / 2;
  PMatrix x(n, std::vector<Polynomial>(n, Polynomial(big)));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++idx) x[i][j] = x[j][i] = Polynomial::variable(big, idx);
  std::vector<std::vector<SymForm>> gens{base_forms(big, 0), base_forms(big, 1)};
  for (std::size_t k = 2; k <= n; ++k) gens.push_back(minors_of(x, n, n, big, k));
  auto s = from_generators("sym-minors:" + std::to_string(n), big, gens);
  s.kind = TubeKind::kSymMinors;
  s.size = n;
  return s;
}

SymbolSystem pfaffian(std::size_t m) {
  if (m < 2) throw InvalidSymbolSystem("pfaffian needs m >= 2");
  const std::size_t big = m * (m - 1) / 2;
  PMatrix x(m, std::vector<Polynomial>(m, Polynomial(big)));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j, ++idx) {
      x[i][j] = Polynomial::variable(big, idx);
      x[j][i] = -x[i][j];
    }
  std::vector<std::vector<SymForm>> gens{base_forms(big, 0), base_forms(big, 1)};
  for (std::size_t k = 2; 2 * k <= m; ++k) {
    std::vector<SymForm> level;
    subsets(m, 2 * k, [&](const std::vector<std::size_t>& s) { level.emplace_back(big, static_cast<int>(k), pf(x, s, big)); });
    gens.push_back(std::move(level));
  }
  auto s = from_generators("pfaffian:" + std::to_string(m), big, gens);
  s.kind = TubeKind::kPfaffian;
  s.size = m;
  return s;
}

SymbolSystem quadric(std::size_t n) {
  if (n < 3) throw InvalidSymbolSystem("quadric needs n >= 3");
  Polynomial q = Polynomial::variable(n, 0) * Polynomial::variable(n, n - 1);
  for (std::size_t i = 1; i + 1 < n; ++i) q -= Polynomial::variable(n, i) * Polynomial::variable(n, i);
  auto s = from_generators("quadric:" + std::to_string(n), n, {base_forms(n, 0), base_forms(n, 1), {SymForm(n, 2, q)}});
  s.kind = TubeKind::kQuadric;
  s.size = n;
  return s;
}

SymbolSystem linear(std::size_t n) {
  if (n < 1) throw InvalidSymbolSystem("linear needs n >= 1");
  return from_generators("linear:" + std::to_string(n), n, {base_forms(n, 0), base_forms(n, 1)});
}

SymbolSystem from_generators(std::string name, std::size_t w_dim, const std::vector<std::vector<SymForm>>& gens) {
  SymbolSystem s;
  s.name = std::move(name);
  s.w_dim = w_dim;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (const auto& f : gens[k])
      if (f.dim() != w_dim || f.degree() != static_cast<int>(k))
        throw InvalidSymbolSystem("generator in degree " + std::to_string(k) + " has the wrong shape");
    if (k == 0 && gens[0].empty()) {
      s.forms.push_back(base_forms(w_dim, 0));
      continue;
    }
    s.forms.push_back(zoo::independent_subset(gens[k]));
  }
  while (s.forms.size() > 1 && s.forms.back().empty()) s.forms.pop_back();
  validate(s);
  return s;
}

void validate(const SymbolSystem& s) {
  const std::size_t n = s.w_dim;
  if (s.forms.size() < 2) throw InvalidSymbolSystem("need at least F^0 and F^1");
  if (s.forms[0].size() != 1 || s.forms[0][0].is_zero()) throw InvalidSymbolSystem("F^0 must be the constants");
  for (std::size_t k = 0; k < s.forms.size(); ++k) {
    if (s.forms[k].empty()) throw InvalidSymbolSystem("F^" + std::to_string(k) + " is empty below the top degree");
    for (const auto& f : s.forms[k])
      if (f.dim() != n || f.degree() != static_cast<int>(k))
        throw InvalidSymbolSystem("a form in F^" + std::to_string(k) + " has the wrong shape");
    if (zoo::independent_subset(s.forms[k]).size() != s.forms[k].size())
      throw InvalidSymbolSystem("basis of F^" + std::to_string(k) + " is linearly dependent");
  }
  if (s.forms[1].size() != n) throw InvalidSymbolSystem("F^1 must be all of W^*");
  for (std::size_t k = 2; k < s.forms.size(); ++k) {
    std::vector<QVector> lower;
    for (const auto& f : s.forms[k - 1]) lower.push_back(f.coefficients());
    auto span = linalg::span_q(tensors::sym_dim(n, static_cast<int>(k - 1)), lower);
    for (const auto& f : s.forms[k])
      for (std::size_t i = 0; i < n; ++i)
        if (!span.contains(tensors::contract(f, unit_vector(n, i)).coefficients()))
          throw InvalidSymbolSystem("F^" + std::to_string(k) + " is not closed under contraction into F^" +
                                    std::to_string(k - 1));
  }
}

zoo::ParamVariety vmrt_of(const SymbolSystem& s) {
  switch (s.kind) {
    case TubeKind::kMinors: return zoo::make_segre(s.size, s.cols);
    case TubeKind::kSymMinors: return zoo::make_veronese2(s.size);
    case TubeKind::kPfaffian: return zoo::make_pluecker_rank2(s.size);
    case TubeKind::kQuadric: return zoo::make_quadric(s.size);
    case TubeKind::kNone: break;
  }
  throw NotTubeModel(s.name + " has no shipped tangent variety");
}

}  // namespace tube::euler
