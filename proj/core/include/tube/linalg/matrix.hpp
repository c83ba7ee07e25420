#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tube/error.hpp"
#include "tube/linalg/field.hpp"
#include "tube/linalg/rational.hpp"

namespace tube::linalg {

// Dense row-major matrix.
template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const E& fill = E{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<E>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("from_rows: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<E>>& rows) {
    return from_rows(rows, rows.empty() ? 0 : rows.front().size());
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  E& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const E& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<E> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const E> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<E> row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }
  std::vector<E> col_vector(std::size_t c) const {
    std::vector<E> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  void append_row(std::span<const E> v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw DimensionMismatch("append_row: wrong length");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  // Keeps the first n rows.
  void truncate_rows(std::size_t n) {
    if (n >= rows_) return;
    rows_ = n;
    data_.resize(rows_ * cols_);
  }

  const std::vector<E>& data() const { return data_; }
  std::vector<E>& data() { return data_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> data_;
};

using QMatrix = Matrix<Rat>;

template <class F>
Matrix<typename F::Elem> identity(const F& f, std::size_t n) {
  Matrix<typename F::Elem> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <class F>
Matrix<typename F::Elem> multiply(const F& f, const Matrix<typename F::Elem>& a,
                                  const Matrix<typename F::Elem>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("multiply: inner dimensions differ");
  Matrix<typename F::Elem> c(a.rows(), b.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      auto crow = c.row(i);
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!f.is_zero(brow[j])) crow[j] = f.add(crow[j], f.mul(aik, brow[j]));
    }
  return c;
}

template <class F>
std::vector<typename F::Elem> apply(const F& f, const Matrix<typename F::Elem>& a,
                                    std::span<const typename F::Elem> v) {
  if (a.cols() != v.size()) throw DimensionMismatch("apply: length differs from cols");
  std::vector<typename F::Elem> out(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!f.is_zero(r[j]) && !f.is_zero(v[j])) out[i] = f.add(out[i], f.mul(r[j], v[j]));
  }
  return out;
}

template <class E>
Matrix<E> transpose(const Matrix<E>& a) {
  Matrix<E> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <class F>
Matrix<typename F::Elem> convert(const F& f, const QMatrix& a) {
  Matrix<typename F::Elem> m(a.rows(), a.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = f.from_rat(a(i, j));
  return m;
}

template <class F>
std::vector<typename F::Elem> convert(const F& f, std::span<const Rat> v) {
  std::vector<typename F::Elem> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(f.from_rat(x));
  return out;
}

// Rational conveniences.
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rat& s, const QMatrix& a);
QVector operator*(const QMatrix& a, std::span<const Rat> v);
QMatrix identity(std::size_t n);
QMatrix commutator(const QMatrix& a, const QMatrix& b);
bool is_zero(const QMatrix& a);
// Matrix with the given vectors as columns.
QMatrix from_columns(const std::vector<QVector>& cols, std::size_t length);
std::string to_string(const QMatrix& a);

}  // namespace tube::linalg
