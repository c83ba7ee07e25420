#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tube/linalg/subspace.hpp"
#include "tube/random.hpp"
#include "tube/tensors/symform.hpp"

namespace tube::zoo {

// An affine cone given by a polynomial parametrization phi : Q^m -> Q^N,
// optionally with a basis of the degree-2 part of its ideal.
struct ParamVariety {
  std::string name;
  std::size_t ambient_dim = 0;  // N
  std::size_t param_dim = 0;    // m
  // Dimension of the cone at a generic point; the span of the jacobian
  // columns together with the point has this dimension.
  std::size_t cone_dim = 0;
  tensors::PolyMap phi;
  std::vector<tensors::SymForm> quadrics;
  std::optional<std::size_t> expected_dim_aut1;
};

// x0*x_{n-1} - (x1^2 + ... + x_{n-2}^2) in P^{n-1}; n >= 3.
ParamVariety make_quadric(std::size_t n);
// Rank-one a x b matrices, coordinates row-major.
ParamVariety make_segre(std::size_t a, std::size_t b);
// Rank-one symmetric n x n matrices, coordinates (i <= j) in lex order.
ParamVariety make_veronese2(std::size_t n);
// Decomposable 2-vectors, coordinates (i < j) in lex order.
ParamVariety make_pluecker_rank2(std::size_t n);
// Even pure spinors for n = 5: (1, A_ij, 4x4 sub-Pfaffians), 16 coordinates.
ParamVariety make_spinor5();
// Rank-one elements of the split exceptional Jordan algebra, 27 coordinates.
ParamVariety make_severi_e6();
// {(w^2, w q)} in Sym^2 W + W (x) Q, dim W = k, dim Q = m.
ParamVariety make_sympl(std::size_t k, std::size_t m);

struct ProjectOptions {
  std::uint64_t seed = 1;
  std::size_t secant_samples = 200;
  bool secant = true;  // false: only points of X itself are tested against L
};

// Image under V -> V/L. Throws SecantViolation if a sampled point of X or of
// its secant variety (when opts.secant) lies in L.
ParamVariety project(const ParamVariety& x, const linalg::Subspace& l, const ProjectOptions& opts = {});

// Quotient map V -> V/L in the coordinates of the non-pivot columns of L.
linalg::QMatrix quotient_map(const linalg::Subspace& l);

struct Sample {
  QVector params;
  QVector point;
};

// Integer parameters in [-10, 10]; retries zero images, then throws
// DegenerateParametrization.
Sample sample_point(const ParamVariety& x, Rng& rng);
Sample sample_point(const ParamVariety& x, std::uint64_t seed);

// Basis of quadratic forms vanishing identically on the image of phi.
std::vector<tensors::SymForm> derive_quadric_ideal(const tensors::PolyMap& phi);

// Linearly independent subset of forms of equal shape, keeping order.
std::vector<tensors::SymForm> independent_subset(const std::vector<tensors::SymForm>& forms);

// Gram matrix S with q(x) = x^T S x.
linalg::QMatrix gram_matrix(const tensors::SymForm& q);

}  // namespace tube::zoo
