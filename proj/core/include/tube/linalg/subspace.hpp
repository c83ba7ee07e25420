#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tube/linalg/echelon.hpp"

namespace tube::linalg {

// A linear subspace of F^n stored by its canonical RREF basis, so equality
// of subspaces is equality of bases.
template <class F>
class BasicSubspace {
 public:
  using E = typename F::Elem;

  BasicSubspace() = default;
  BasicSubspace(F field, std::size_t ambient)
      : f_(std::move(field)), ambient_(ambient), basis_(0, ambient) {}

  static BasicSubspace span(F field, std::size_t ambient, const std::vector<std::vector<E>>& vecs) {
    Matrix<E> m(vecs.size(), ambient, field.zero());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      if (vecs[i].size() != ambient) throw DimensionMismatch("span: vector length differs from ambient");
      for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vecs[i][j];
    }
    return from_rows(std::move(field), std::move(m));
  }

  static BasicSubspace from_rows(F field, Matrix<E> rows) {
    std::size_t ambient = rows.cols();
    BasicSubspace s(field, ambient);
    auto r = rref(field, std::move(rows));
    s.basis_ = std::move(r.reduced);
    if (s.basis_.rows() == 0) s.basis_ = Matrix<E>(0, ambient);
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  // Trusts that rows already form a canonical RREF with the given pivots.
  static BasicSubspace from_canonical(F field, Matrix<E> rows, std::vector<std::size_t> pivots) {
    BasicSubspace s(field, rows.cols());
    s.basis_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    return s;
  }

  const F& field() const { return f_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  const Matrix<E>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::vector<E>> basis_vectors() const {
    std::vector<std::vector<E>> out;
    for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row_vector(i));
    return out;
  }

  bool contains(std::span<const E> v) const {
    if (v.size() != ambient_) throw DimensionMismatch("contains: vector length differs from ambient");
    std::vector<E> w(v.begin(), v.end());
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      std::size_t c = pivots_[k];
      if (f_.is_zero(w[c])) continue;
      E factor = w[c];
      auto row = basis_.row(k);
      for (std::size_t j = c; j < ambient_; ++j)
        if (!f_.is_zero(row[j])) f_.sub_mul(w[j], factor, row[j]);
    }
    for (const auto& x : w)
      if (!f_.is_zero(x)) return false;
    return true;
  }

  bool contains(const BasicSubspace& other) const {
    check_compatible(other);
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  // Annihilator: covectors vanishing on the subspace, as a subspace of the dual.
  BasicSubspace annihilator() const {
    return from_canonical(f_, kernel_from_rref(f_, basis_, pivots_, ambient_), annihilator_pivots());
  }

  bool operator==(const BasicSubspace& o) const {
    return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
  }

  void check_compatible(const BasicSubspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
    if (!(f_ == o.f_)) throw DimensionMismatch("subspaces live over different fields");
  }

 private:
  std::vector<std::size_t> annihilator_pivots() const {
    auto k = kernel_from_rref(f_, basis_, pivots_, ambient_);
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < k.rows(); ++i) {
      std::size_t c = 0;
      while (f_.is_zero(k(i, c))) ++c;
      p.push_back(c);
    }
    return p;
  }

  F f_{};
  std::size_t ambient_ = 0;
  Matrix<E> basis_;
  std::vector<std::size_t> pivots_;
};

template <class F>
BasicSubspace<F> sum(const BasicSubspace<F>& a, const BasicSubspace<F>& b) {
  a.check_compatible(b);
  auto m = a.basis();
  for (std::size_t i = 0; i < b.basis().rows(); ++i) m.append_row(b.basis().row(i));
  if (m.rows() == 0) return BasicSubspace<F>(a.field(), a.ambient_dim());
  return BasicSubspace<F>::from_rows(a.field(), std::move(m));
}

template <class F>
BasicSubspace<F> intersect(const BasicSubspace<F>& a, const BasicSubspace<F>& b) {
  a.check_compatible(b);
  const auto& f = a.field();
  const std::size_t n = a.ambient_dim(), da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return BasicSubspace<F>(f, n);
  // Pairs (x, y) with x A = y B.
  Matrix<typename F::Elem> m(n, da + db, f.zero());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < n; ++j) m(j, i) = a.basis()(i, j);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < n; ++j) m(j, da + i) = f.neg(b.basis()(i, j));
  auto k = kernel(f, m);
  Matrix<typename F::Elem> vecs(k.rows(), n, f.zero());
  for (std::size_t t = 0; t < k.rows(); ++t)
    for (std::size_t i = 0; i < da; ++i) {
      const auto& coef = k(t, i);
      if (f.is_zero(coef)) continue;
      auto arow = a.basis().row(i);
      for (std::size_t j = 0; j < n; ++j)
        if (!f.is_zero(arow[j])) vecs(t, j) = f.add(vecs(t, j), f.mul(coef, arow[j]));
    }
  if (vecs.rows() == 0) return BasicSubspace<F>(f, n);
  return BasicSubspace<F>::from_rows(f, std::move(vecs));
}

using Subspace = BasicSubspace<RationalField>;

inline Subspace span_q(std::size_t ambient, const std::vector<QVector>& vecs) {
  return Subspace::span(RationalField{}, ambient, vecs);
}

}  // namespace tube::linalg
