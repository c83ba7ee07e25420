#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tube/euler/model.hpp"
#include "tube/linalg/subspace.hpp"
#include "tube/tensors/symform.hpp"

namespace tube::euler {

struct BaseLocus {
  int l0 = 0;                          // degree whose forms cut out the locus
  std::vector<tensors::SymForm> forms; // basis of F^{l0}
  bool contains(std::span<const Rat> w) const;
};

// l0 is the least k >= 2 for which some nonzero probe (standard basis vectors
// and seeded random vectors) lies in Bs(F^k). Checks Bs(F^k) within Bs(F^{k+1})
// on every probe; throws InvalidSymbolSystem if that fails.
BaseLocus base_locus(const GradedModel& m, std::size_t random_probes = 32, std::uint64_t seed = 11);

struct LambdaMap {
  std::vector<tensors::VValuedSymMap> images;  // lambda(e_b) for the basis of W
  linalg::Subspace image;                      // span of their tensors
  bool symmetric = false;
  std::size_t rank = 0;
  bool injective() const { return rank == images.size(); }
};

// lambda(beta)(a, c) = [[d rho_y(beta), d rho_x(a)], d rho_x(c)] e_0, read in V_1 = W.
LambdaMap lambda_map(const GradedModel& m);

struct BracketCheck {
  bool block_diagonal = false;
  bool identity_holds = false;  // on every sampled w
  Rat c;                        // entry on V_0
  bool ok() const { return block_diagonal && identity_holds; }
};

// gamma = [d rho_x(a), d rho_y(b)] preserves the grading and moves f(w) by
// c f(w) + Df(w)[(gamma|W - c) w].
BracketCheck bracket_fixed_check(const GradedModel& m, std::span<const Rat> a, std::span<const Rat> b,
                                 std::size_t samples, std::uint64_t seed);

struct PairAction {
  QMatrix g;        // rho_x(u) rho_y(w)
  QMatrix h;        // g H g^{-1}, H = -k on V_k
  QVector source;   // g e_0
  QVector sink;     // g e_r
  bool source_euler = false;  // relative weight -1 on the whole tangent space
  bool sink_euler = false;    // relative weight +1
};

// Throws DegeneratePair if a fixed point lies in neither chart, NotTubeModel
// without J.
PairAction pair_action(const GradedModel& m, std::span<const Rat> u, std::span<const Rat> w);

// Cone tangent space of M at a point of it, found through the chart at e_0 or
// its J-image; nullopt if the point is in neither.
std::optional<linalg::Subspace> model_tangent_space(const GradedModel& m, std::span<const Rat> p);

}  // namespace tube::euler
