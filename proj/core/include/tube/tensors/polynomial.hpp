#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tube/linalg/rational.hpp"

namespace tube::tensors {

using Exponents = std::vector<int>;

// Sparse multivariate polynomial over Q with a fixed number of variables.
// Terms are kept in lexicographic order of exponent vectors.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rat& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Exponents& e, const Rat& c);

  std::size_t num_vars() const { return nvars_; }
  const std::map<Exponents, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous(int d) const;
  Rat coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Rat& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rat& s);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rat& s) { return a *= s; }
  friend Polynomial operator*(const Rat& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Rat evaluate(std::span<const Rat> x) const;
  Polynomial derivative(std::size_t i) const;
  // Substitutes images[i] for variable i; all images share one variable count.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  std::string to_string() const;

 private:
  std::size_t nvars_;
  std::map<Exponents, Rat> terms_;
};

Polynomial pow(const Polynomial& p, int e);

// Exponent vectors of total degree d in n variables, in the same order the
// terms map uses.
std::vector<Exponents> monomial_basis(std::size_t n, int d);

// Number of monomials of degree d in n variables.
std::size_t sym_dim(std::size_t n, int d);

}  // namespace tube::tensors
