#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tube/euler/symbol_system.hpp"
#include "tube/linalg/matrix.hpp"

namespace tube::euler {

using linalg::QMatrix;

// V = V_0 + ... + V_r with V_k dual to F^k, coordinates given by the basis
// forms, together with the raising operators Gamma_{e_i} : V_k -> V_{k+1}.
struct GradedModel {
  SymbolSystem system;
  std::vector<std::size_t> offset;   // offset[k] = start of V_k; offset[r+1] = dim V
  std::vector<QMatrix> gamma_basis;  // Gamma_{e_i} for the standard basis of W
  // For tube models: J with J f(u) = N(u) f(u^{-1}), mapping V_k onto V_{r-k}.
  std::optional<QMatrix> j;
  std::optional<QMatrix> j_inv;

  std::size_t dim() const { return offset.back(); }
  int rank() const { return system.rank(); }
  std::size_t w_dim() const { return system.w_dim; }
  bool is_projective_space() const { return rank() == 1; }
  std::size_t block_of(std::size_t index) const;
};

// Throws InvalidSymbolSystem. Computes J for tube kinds from seeded samples
// and checks it on held-out samples.
GradedModel build_model(const SymbolSystem& s, std::uint64_t seed = 7);

// f(u) = sum over k of the values of the basis forms of F^k.
QVector embed(const GradedModel& m, std::span<const Rat> u);
// Derivative of f at u in direction v, from the forms.
QVector embed_derivative(const GradedModel& m, std::span<const Rat> u, std::span<const Rat> v);

QMatrix gamma(const GradedModel& m, std::span<const Rat> u);
QMatrix d_rho_x(const GradedModel& m, std::span<const Rat> u);
// Block (l, k) is binom(l, k) Gamma_u^{l-k}.
QMatrix rho_x(const GradedModel& m, std::span<const Rat> u);
// J-conjugates; throw NotTubeModel without J.
QMatrix d_rho_y(const GradedModel& m, std::span<const Rat> w);
QMatrix rho_y(const GradedModel& m, std::span<const Rat> w);

// The norm and inversion of the Jordan structure behind a tube model;
// nullopt where the norm vanishes.
Rat jordan_norm(const SymbolSystem& s, std::span<const Rat> u);
std::optional<QVector> jordan_inverse(const SymbolSystem& s, std::span<const Rat> u);

// Block of a matrix mapping V_k into V_l.
QMatrix block(const GradedModel& m, const QMatrix& a, int l, int k);

}  // namespace tube::euler
