#include "tube/tensors/symform.hpp"

#include <algorithm>

#include "tube/error.hpp"

namespace tube::tensors {

SymForm::SymForm(std::size_t n, int d) : n_(n), d_(d), p_(n) {
  if (d < 0) throw BadDimension("negative form degree");
}

SymForm::SymForm(std::size_t n, int d, Polynomial p) : n_(n), d_(d), p_(std::move(p)) {
  if (d < 0) throw BadDimension("negative form degree");
  if (p_.num_vars() != n) throw BadDimension("form has the wrong number of variables");
  if (!p_.is_homogeneous(d)) throw BadDimension("polynomial is not homogeneous of degree " + std::to_string(d));
}

QVector SymForm::coefficients() const {
  auto basis = monomial_basis(n_, d_);
  QVector c;
  c.reserve(basis.size());
  for (const auto& e : basis) c.push_back(p_.coefficient(e));
  return c;
}

SymForm SymForm::from_coefficients(std::size_t n, int d, std::span<const Rat> c) {
  auto basis = monomial_basis(n, d);
  if (basis.size() != c.size()) throw DimensionMismatch("from_coefficients: wrong coefficient count");
  Polynomial p(n);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], c[i]);
  return SymForm(n, d, std::move(p));
}

SymForm& SymForm::operator+=(const SymForm& o) {
  if (o.n_ != n_ || o.d_ != d_) throw DimensionMismatch("form sum: shapes differ");
  p_ += o.p_;
  return *this;
}

SymForm& SymForm::operator*=(const Rat& s) {
  p_ *= s;
  return *this;
}

Rat polarize_eval(const SymForm& f, const std::vector<QVector>& args) {
  const int d = f.degree();
  if (static_cast<int>(args.size()) != d) throw DimensionMismatch("polarize_eval: need one argument per slot");
  for (const auto& a : args)
    if (a.size() != f.dim()) throw DimensionMismatch("polarize_eval: argument has wrong length");
  if (d == 0) return f.polynomial().coefficient(Exponents(f.dim(), 0));
  Rat total = 0;
  QVector s(f.dim());
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    for (auto& x : s) x = 0;
    int size = 0;
    for (int i = 0; i < d; ++i)
      if (mask & (1u << i)) {
        ++size;
        for (std::size_t j = 0; j < s.size(); ++j) s[j] += args[i][j];
      }
    Rat v = f(s);
    if ((d - size) % 2) total -= v;
    else total += v;
  }
  Int fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  return total / Rat(fact);
}

SymForm contract(const SymForm& f, std::span<const Rat> w) {
  if (w.size() != f.dim()) throw DimensionMismatch("contract: vector has wrong length");
  if (f.degree() == 0) return SymForm(f.dim(), 0);
  Polynomial p(f.dim());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (sgn(w[i]) != 0) p += f.polynomial().derivative(i) * w[i];
  p *= Rat(1, f.degree());
  return SymForm(f.dim(), f.degree() - 1, std::move(p));
}

MultisetIndex::MultisetIndex(std::size_t n, int k) : n_(n), k_(k) {
  for (const auto& e : monomial_basis(n, k)) {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
      for (int c = 0; c < e[i]; ++c) s.push_back(static_cast<int>(i));
    sets_.push_back(std::move(s));
  }
  std::sort(sets_.begin(), sets_.end());
  for (std::size_t i = 0; i < sets_.size(); ++i) lookup_.emplace(sets_[i], i);
}

std::size_t MultisetIndex::index_of(std::vector<int> s) const {
  std::sort(s.begin(), s.end());
  auto it = lookup_.find(s);
  if (it == lookup_.end()) throw DimensionMismatch("multiset not in index");
  return it->second;
}

Int multinomial(const Exponents& e) {
  Int num = 1;
  int total = 0;
  for (int x : e)
    for (int k = 1; k <= x; ++k) {
      ++total;
      num *= total;
      num /= k;
    }
  return num;
}

namespace {
Exponents exponents_of(const std::vector<int>& s, std::size_t n) {
  Exponents e(n, 0);
  for (int i : s) ++e[i];
  return e;
}
}  // namespace

VValuedSymMap::VValuedSymMap(std::size_t n, int d, std::size_t out)
    : n_(n), d_(d), components_(out, SymForm(n, d)) {}

VValuedSymMap::VValuedSymMap(std::vector<SymForm> components) : components_(std::move(components)) {
  if (components_.empty()) throw BadDimension("a vector-valued map needs at least one component");
  n_ = components_.front().dim();
  d_ = components_.front().degree();
  for (const auto& c : components_)
    if (c.dim() != n_ || c.degree() != d_) throw DimensionMismatch("components differ in shape");
}

QVector VValuedSymMap::operator()(const std::vector<QVector>& args) const {
  QVector out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(polarize_eval(c, args));
  return out;
}

QVector VValuedSymMap::diagonal(std::span<const Rat> v) const {
  QVector out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c(v));
  return out;
}

VValuedSymMap VValuedSymMap::contract(std::span<const Rat> w) const {
  std::vector<SymForm> comps;
  comps.reserve(components_.size());
  for (const auto& c : components_) comps.push_back(tensors::contract(c, w));
  VValuedSymMap m;
  m.n_ = n_;
  m.d_ = d_ > 0 ? d_ - 1 : 0;
  m.components_ = std::move(comps);
  return m;
}

QVector VValuedSymMap::to_tensor() const {
  MultisetIndex idx(n_, d_);
  QVector t(components_.size() * idx.size());
  for (std::size_t l = 0; l < components_.size(); ++l)
    for (std::size_t s = 0; s < idx.size(); ++s) {
      auto e = exponents_of(idx.at(s), n_);
      Rat c = components_[l].polynomial().coefficient(e);
      if (sgn(c) != 0) t[l * idx.size() + s] = c / Rat(multinomial(e));
    }
  return t;
}

VValuedSymMap VValuedSymMap::from_tensor(std::size_t n, int d, std::size_t out, std::span<const Rat> t) {
  MultisetIndex idx(n, d);
  if (t.size() != out * idx.size()) throw DimensionMismatch("from_tensor: wrong tensor length");
  std::vector<SymForm> comps;
  for (std::size_t l = 0; l < out; ++l) {
    Polynomial p(n);
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const Rat& v = t[l * idx.size() + s];
      if (sgn(v) == 0) continue;
      auto e = exponents_of(idx.at(s), n);
      p.add_term(e, v * Rat(multinomial(e)));
    }
    comps.emplace_back(n, d, std::move(p));
  }
  VValuedSymMap m(n, d, out);
  m.components_ = std::move(comps);
  return m;
}

PolyMap::PolyMap(std::size_t m, std::vector<Polynomial> components) : m_(m), components_(std::move(components)) {
  for (const auto& c : components_)
    if (c.num_vars() != m) throw DimensionMismatch("PolyMap: component has wrong variable count");
  partials_.resize(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) partials_[i].push_back(components_[i].derivative(j));
}

QVector PolyMap::operator()(std::span<const Rat> t) const {
  QVector out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.evaluate(t));
  return out;
}

linalg::QMatrix PolyMap::jacobian(std::span<const Rat> t) const {
  linalg::QMatrix j(components_.size(), m_);
  for (std::size_t i = 0; i < components_.size(); ++i)
    for (std::size_t k = 0; k < m_; ++k)
      if (!partials_[i][k].is_zero()) j(i, k) = partials_[i][k].evaluate(t);
  return j;
}

PolyMap PolyMap::then(const linalg::QMatrix& l) const {
  if (l.cols() != components_.size()) throw DimensionMismatch("then: linear map has wrong source dimension");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < l.rows(); ++i) {
    Polynomial p(m_);
    for (std::size_t j = 0; j < l.cols(); ++j)
      if (sgn(l(i, j)) != 0) p += components_[j] * l(i, j);
    out.push_back(std::move(p));
  }
  return PolyMap(m_, std::move(out));
}

}  // namespace tube::tensors
