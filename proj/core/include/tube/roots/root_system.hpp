#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tube/linalg/rational.hpp"

namespace tube::roots {

using Root = std::vector<int>;  // coordinates in the simple roots

// Irreducible root system with Bourbaki numbering. Public node indices are
// 1-based; vectors indexed by node are 0-based.
struct RootSystem {
  char type = 'A';
  int rank = 0;
  std::vector<QVector> simple_roots;      // Euclidean model
  std::vector<std::vector<int>> cartan;   // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<std::vector<Rat>> form;     // (alpha_i, alpha_j)
  std::vector<Root> roots;                // positive roots by height, then their negatives
  std::size_t num_positive = 0;
  // reflection[i][r] = index of s_{i+1}(roots[r])
  std::vector<std::vector<std::size_t>> reflection;

  std::string name() const { return std::string(1, type) + std::to_string(rank); }
  std::size_t index_of(const Root& r) const;
  bool is_positive(std::size_t idx) const { return idx < num_positive; }
  Root reflect(int node, const Root& r) const;  // s_node(r)

 private:
  std::map<Root, std::size_t> lookup_;
  friend RootSystem build(char type, int rank);
};

// Throws BadType for unsupported (type, rank).
RootSystem build(char type, int rank);
// Accepts names like "E7", "d5".
RootSystem build(std::string_view name);

Root highest_root(const RootSystem& rs);
int coefficient(const Root& r, int node);
int height(const Root& r);

// Reduced word of the longest Weyl element (letters are 1-based nodes).
std::vector<int> longest_element_word(const RootSystem& rs);
// iota with -w0(alpha_i) = alpha_{iota(i)}; result[i-1] = iota(i).
std::vector<int> opposition_involution(const RootSystem& rs);

bool is_cominuscule(const RootSystem& rs, int node);
bool is_ihss(const RootSystem& rs, int node);
bool is_tube_type(const RootSystem& rs, int node);

// sigma(beta) = sum_i sigma[i] * beta_i, sigma indexed by node - 1.
int evaluate(const std::vector<int>& sigma, const Root& r);
// sigma_node: the grading by the coefficient of alpha_node.
std::vector<int> node_grading(const RootSystem& rs, int node);
// Graded pieces of the Lie algebra: degree -> dimension (Cartan in degree 0).
std::map<int, std::size_t> grading_dims(const RootSystem& rs, const std::vector<int>& sigma);

}  // namespace tube::roots
