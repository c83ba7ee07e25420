#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tube/linalg/sparse.hpp"
#include "tube/tensors/symform.hpp"
#include "tube/zoo/variety.hpp"

namespace tube::aut {

using linalg::PrimeField;
using linalg::RationalField;

struct AutConfig {
  std::size_t window = 3;    // consecutive samples without a drop in dimension
  std::size_t holdout = 5;   // extra samples that must not change it either
  std::size_t max_samples = 200;
  std::uint64_t seed = 1;
};

enum class Provenance { kSamples, kQuadrics };

// Linear endomorphisms of Q^n (or F_p^n) flattened row-major, g(k, j) at k*n + j.
template <class F>
struct BasicAutAlgebra {
  std::size_t n = 0;
  linalg::BasicSubspace<F> basis;
  Provenance provenance = Provenance::kSamples;
  std::vector<std::size_t> dim_trace;  // dimension after each used sample
  std::size_t samples = 0;

  std::size_t dim() const { return basis.dim(); }
  linalg::Matrix<typename F::Elem> element(std::size_t i) const {
    linalg::Matrix<typename F::Elem> m(n, n);
    for (std::size_t k = 0; k < n * n; ++k) m.data()[k] = basis.basis()(i, k);
    return m;
  }
};

using AutAlgebra = BasicAutAlgebra<RationalField>;
using ModAutAlgebra = BasicAutAlgebra<PrimeField>;

// Tangent-space sampling: g p in T_p for sampled generic points p.
template <class F>
BasicAutAlgebra<F> aut_from_samples(const F& field, const zoo::ParamVariety& x, const AutConfig& cfg);
// Rational version; dimensions are tracked mod p, the final basis is certified over Q.
AutAlgebra aut_from_samples(const zoo::ParamVariety& x, const AutConfig& cfg = {});

// g^T S_q + S_q g lies in the span of the Gram matrices. Throws NoIdeal.
template <class F>
BasicAutAlgebra<F> aut_from_quadrics(const F& field, const zoo::ParamVariety& x);
AutAlgebra aut_from_quadrics(const zoo::ParamVariety& x);

template <class F>
bool is_bracket_closed(const BasicAutAlgebra<F>& g);

// Symmetric (order+1)-linear maps V x ... x V -> V stored as tensors
// (see VValuedSymMap::to_tensor) spanning the order-th prolongation.
template <class F>
struct BasicProlongation {
  std::size_t n = 0;
  int order = 0;
  linalg::BasicSubspace<F> tensors;
  std::size_t dim() const { return tensors.dim(); }
};

using Prolongation = BasicProlongation<RationalField>;
using ModProlongation = BasicProlongation<PrimeField>;

template <class F>
BasicProlongation<F> as_prolongation(const BasicAutAlgebra<F>& g);

// Next prolongation via slice coordinates: every slice A(e_i, ...) is written
// in a basis of the previous one and the slices are forced to agree.
template <class F>
BasicProlongation<F> prolong_next(const F& field, const BasicProlongation<F>& prev);

template <class F>
BasicProlongation<F> prolong(const F& field, const BasicAutAlgebra<F>& g) {
  return prolong_next(field, as_prolongation(g));
}
Prolongation prolong(const AutAlgebra& g);

// First prolongation from the annihilator of g, with the symmetric tensor
// coefficients themselves as unknowns. Slower; used as a cross-check.
Prolongation prolong_by_annihilator(const AutAlgebra& g);

std::vector<tensors::VValuedSymMap> prolongation_maps(const Prolongation& p);

struct ProlongConfig {
  AutConfig aut;
  std::uint32_t p1 = linalg::kPrime1;
  std::uint32_t p2 = linalg::kPrime2;
  bool certify = false;               // force the rational path
  std::size_t certify_max_ambient = 10;  // rational path always runs up to this N
};

struct ProlongRun {
  std::uint32_t prime = 0;  // 0 for the rational run
  std::vector<std::size_t> dims;
};

struct ProlongReport {
  std::vector<std::size_t> dims;  // dim aut, dim aut^(1), ..., dim aut^(kmax)
  std::vector<ProlongRun> runs;
  bool certified_rational = false;
  bool primes_disagreed = false;
};

ProlongReport prolong_k(const zoo::ParamVariety& x, int kmax, const ProlongConfig& cfg = {});

// A(p, p) lies in T_p at n_samples seeded points.
bool verify_flow(const tensors::VValuedSymMap& a, const zoo::ParamVariety& x, std::size_t n_samples,
                 std::uint64_t seed);

// Tangent space of the cone at the sample: span of jacobian columns and the point.
linalg::Subspace tangent_space(const zoo::ParamVariety& x, const zoo::Sample& s);

}  // namespace tube::aut
