#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tube/linalg/matrix.hpp"

namespace tube::linalg {

// Forward elimination only; the first rank rows are in echelon form with
// unit pivots. Returns pivot columns.
template <class F>
std::vector<std::size_t> echelon_inplace(const F& f, Matrix<typename F::Elem>& m) {
  using E = typename F::Elem;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && f.is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    m.swap_rows(p, r);
    E inv = f.inv(m(r, c));
    auto prow = m.row(r);
    for (std::size_t j = c; j < cols; ++j) f.scale(prow[j], inv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (f.is_zero(m(i, c))) continue;
      E factor = m(i, c);
      auto irow = m.row(i);
      for (std::size_t j = c; j < cols; ++j)
        if (!f.is_zero(prow[j])) f.sub_mul(irow[j], factor, prow[j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Clears entries above the pivots of an echelon form.
template <class F>
void back_reduce(const F& f, Matrix<typename F::Elem>& m, const std::vector<std::size_t>& pivots) {
  using E = typename F::Elem;
  for (std::size_t k = pivots.size(); k-- > 0;) {
    std::size_t c = pivots[k];
    auto krow = m.row(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (f.is_zero(m(i, c))) continue;
      E factor = m(i, c);
      auto irow = m.row(i);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!f.is_zero(krow[j])) f.sub_mul(irow[j], factor, krow[j]);
    }
  }
}

template <class F>
struct Rref {
  Matrix<typename F::Elem> reduced;  // rank rows, zero rows dropped
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

template <class F>
Rref<F> rref(const F& f, Matrix<typename F::Elem> m) {
  auto pivots = echelon_inplace(f, m);
  m.truncate_rows(pivots.size());
  back_reduce(f, m, pivots);
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const F& f, Matrix<typename F::Elem> m) {
  return echelon_inplace(f, m).size();
}

// Kernel basis read off an RREF, returned in canonical RREF.
template <class F>
Matrix<typename F::Elem> kernel_from_rref(const F& f, const Matrix<typename F::Elem>& r,
                                          const std::vector<std::size_t>& pivots,
                                          std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<typename F::Elem> k(free_cols.size(), cols, f.zero());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    std::size_t fc = free_cols[t];
    k(t, fc) = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (!f.is_zero(r(i, fc))) k(t, pivots[i]) = f.neg(r(i, fc));
  }
  return rref(f, std::move(k)).reduced;
}

// Rows span the right kernel {x : m x = 0}, in canonical RREF.
template <class F>
Matrix<typename F::Elem> kernel(const F& f, const Matrix<typename F::Elem>& m) {
  auto r = rref(f, m);
  return kernel_from_rref(f, r.reduced, r.pivots, m.cols());
}

// Exact inverse over the field; throws NotInvertible.
template <class F>
Matrix<typename F::Elem> inverse(const F& f, const Matrix<typename F::Elem>& a) {
  using E = typename F::Elem;
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("inverse: not square");
  Matrix<E> aug(n, 2 * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = f.one();
  }
  auto r = rref(f, std::move(aug));
  if (r.rank() < n || r.pivots[n - 1] != n - 1) throw NotInvertible("inverse: singular matrix");
  Matrix<E> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

// Solves X * a = b (X unknown, rows of b are targets). Requires the solution
// to be unique; returns nullopt when inconsistent or underdetermined.
template <class F>
std::optional<Matrix<typename F::Elem>> solve_xa_eq_b(const F& f, const Matrix<typename F::Elem>& a,
                                                      const Matrix<typename F::Elem>& b) {
  using E = typename F::Elem;
  // X a = b  <=>  a^T X^T = b^T.
  if (a.cols() != b.cols()) throw DimensionMismatch("solve: column counts differ");
  const std::size_t n = a.rows(), m = a.cols(), k = b.rows();
  Matrix<E> aug(m, n + k, f.zero());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(j, i);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(j, i);
  }
  auto r = rref(f, std::move(aug));
  if (r.rank() < n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (r.pivots[i] != i) return std::nullopt;
  if (r.rank() > n) return std::nullopt;  // a pivot in the right block: inconsistent
  Matrix<E> x(k, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) x(j, i) = r.reduced(i, n + j);
  return x;
}

// Incrementally maintained RREF of a growing set of rows.
template <class F>
class RowEchelon {
 public:
  using E = typename F::Elem;

  RowEchelon(F field, std::size_t cols) : f_(std::move(field)), cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const F& field() const { return f_; }

  // Returns true if the row increased the rank.
  bool insert(std::vector<E> row) {
    if (row.size() != cols_) throw DimensionMismatch("RowEchelon::insert: wrong length");
    reduce(row);
    std::size_t lead = 0;
    while (lead < cols_ && f_.is_zero(row[lead])) ++lead;
    if (lead == cols_) return false;
    E inv = f_.inv(row[lead]);
    for (std::size_t j = lead; j < cols_; ++j) f_.scale(row[j], inv);
    for (auto& other : rows_) {
      if (f_.is_zero(other[lead])) continue;
      E factor = other[lead];
      for (std::size_t j = lead; j < cols_; ++j)
        if (!f_.is_zero(row[j])) f_.sub_mul(other[j], factor, row[j]);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
  }

  bool contains(std::vector<E> row) const {
    reduce(row);
    for (const auto& x : row)
      if (!f_.is_zero(x)) return false;
    return true;
  }

  Matrix<E> basis() const { return Matrix<E>::from_rows(rows_, cols_); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Matrix<E> kernel() const { return kernel_from_rref(f_, basis(), pivots_, cols_); }

 private:
  void reduce(std::vector<E>& row) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::size_t c = pivots_[k];
      if (f_.is_zero(row[c])) continue;
      E factor = row[c];
      const auto& prow = rows_[k];
      for (std::size_t j = c; j < cols_; ++j)
        if (!f_.is_zero(prow[j])) f_.sub_mul(row[j], factor, prow[j]);
    }
  }

  F f_;
  std::size_t cols_;
  std::vector<std::vector<E>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace tube::linalg
