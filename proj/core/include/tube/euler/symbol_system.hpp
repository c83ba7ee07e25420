#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tube/tensors/symform.hpp"
#include "tube/zoo/variety.hpp"

namespace tube::euler {

// Shipped models that carry a Jordan-type inversion u -> u^{-1}.
enum class TubeKind { kNone, kMinors, kSymMinors, kPfaffian, kQuadric };

// F = F^0 + F^1 + ... + F^r inside the symmetric algebra of W^*, each F^k
// stored as a basis of forms taken from its generators.
struct SymbolSystem {
  std::string name;
  std::size_t w_dim = 0;
  std::vector<std::vector<tensors::SymForm>> forms;  // forms[k] spans F^k
  TubeKind kind = TubeKind::kNone;
  std::size_t size = 0;  // rows for the matrix kinds, n for quadric
  std::size_t cols = 0;  // columns for minors

  int rank() const { return static_cast<int>(forms.size()) - 1; }
  std::size_t dim(int k) const { return forms.at(k).size(); }
};

// k x k minors of an a x b matrix, coordinates row-major.
SymbolSystem minors(std::size_t a, std::size_t b);
inline SymbolSystem minors(std::size_t n) { return minors(n, n); }
// Minors of a symmetric n x n matrix, coordinates x_ij (i <= j) in lex order.
SymbolSystem sym_minors(std::size_t n);
// Principal sub-Pfaffians of a skew m x m matrix, coordinates (i < j).
SymbolSystem pfaffian(std::size_t m);
// F^2 spanned by x0*x_{n-1} - (x1^2 + ... + x_{n-2}^2), the quadric of make_quadric(n).
SymbolSystem quadric(std::size_t n);
// Only constants and linear forms.
SymbolSystem linear(std::size_t n);

// Spans the given generators degree by degree (dropping dependent ones) and
// validates. gens[0] may be empty (constants are implied).
SymbolSystem from_generators(std::string name, std::size_t w_dim, const std::vector<std::vector<tensors::SymForm>>& gens);

// Throws InvalidSymbolSystem naming the first violated axiom.
void validate(const SymbolSystem& s);

// The variety of minimal rational tangents of the shipped model, in W.
zoo::ParamVariety vmrt_of(const SymbolSystem& s);

}  // namespace tube::euler
