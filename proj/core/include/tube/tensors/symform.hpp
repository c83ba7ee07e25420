#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "tube/linalg/matrix.hpp"
#include "tube/tensors/polynomial.hpp"

namespace tube::tensors {

// A homogeneous degree-d polynomial on Q^n, read as a symmetric d-linear form.
class SymForm {
 public:
  SymForm() = default;
  SymForm(std::size_t n, int d);  // zero form
  // Throws BadDimension unless p is homogeneous of degree d in n variables.
  SymForm(std::size_t n, int d, Polynomial p);

  std::size_t dim() const { return n_; }
  int degree() const { return d_; }
  const Polynomial& polynomial() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }

  Rat operator()(std::span<const Rat> v) const { return p_.evaluate(v); }
  // Coordinates in monomial_basis(n, d).
  QVector coefficients() const;
  static SymForm from_coefficients(std::size_t n, int d, std::span<const Rat> c);

  SymForm& operator+=(const SymForm& o);
  SymForm& operator*=(const Rat& s);
  friend SymForm operator+(SymForm a, const SymForm& b) { return a += b; }
  friend SymForm operator*(const Rat& s, SymForm a) { return a *= s; }
  bool operator==(const SymForm& o) const { return n_ == o.n_ && d_ == o.d_ && p_ == o.p_; }

 private:
  std::size_t n_ = 0;
  int d_ = 0;
  Polynomial p_;
};

// Value of the polarization of f on (v_1, ..., v_d), by inclusion-exclusion.
Rat polarize_eval(const SymForm& f, const std::vector<QVector>& args);

// iota_w f, the symmetric form with one slot filled by w; degree d-1.
// A degree-0 form contracts to the zero form of degree 0.
SymForm contract(const SymForm& f, std::span<const Rat> w);

// Sorted multisets of size k drawn from {0..n-1}, in lexicographic order.
class MultisetIndex {
 public:
  MultisetIndex(std::size_t n, int k);
  std::size_t n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return sets_.size(); }
  const std::vector<int>& at(std::size_t i) const { return sets_[i]; }
  // Sorts its argument.
  std::size_t index_of(std::vector<int> s) const;

 private:
  std::size_t n_;
  int k_;
  std::vector<std::vector<int>> sets_;
  std::map<std::vector<int>, std::size_t> lookup_;
};

// Multinomial coefficient d! / prod(e_i!) for the multiset with exponents e.
Int multinomial(const Exponents& e);

// A symmetric d-linear map Q^n x ... x Q^n -> Q^out, one form per output.
class VValuedSymMap {
 public:
  VValuedSymMap() = default;
  VValuedSymMap(std::size_t n, int d, std::size_t out);
  explicit VValuedSymMap(std::vector<SymForm> components);

  std::size_t source_dim() const { return n_; }
  int degree() const { return d_; }
  std::size_t target_dim() const { return components_.size(); }
  const std::vector<SymForm>& components() const { return components_; }

  QVector operator()(const std::vector<QVector>& args) const;
  // Value on equal arguments v,...,v.
  QVector diagonal(std::span<const Rat> v) const;
  // Contraction of every component with w; degree d-1.
  VValuedSymMap contract(std::span<const Rat> w) const;

  // Values A(e_S)_l on basis multisets S, flattened as l * |multisets| + idx(S).
  QVector to_tensor() const;
  static VValuedSymMap from_tensor(std::size_t n, int d, std::size_t out, std::span<const Rat> t);

  bool operator==(const VValuedSymMap& o) const { return components_ == o.components_ && n_ == o.n_ && d_ == o.d_; }

 private:
  std::size_t n_ = 0;
  int d_ = 0;
  std::vector<SymForm> components_;
};

// A polynomial map Q^m -> Q^N.
class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(std::size_t m, std::vector<Polynomial> components);

  std::size_t source_dim() const { return m_; }
  std::size_t target_dim() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }

  QVector operator()(std::span<const Rat> t) const;
  // N x m matrix of partial derivatives.
  linalg::QMatrix jacobian(std::span<const Rat> t) const;
  // L o phi for a linear map L : Q^N -> Q^k.
  PolyMap then(const linalg::QMatrix& l) const;

 private:
  std::size_t m_ = 0;
  std::vector<Polynomial> components_;
  std::vector<std::vector<Polynomial>> partials_;  // [component][variable]
};

}  // namespace tube::tensors
