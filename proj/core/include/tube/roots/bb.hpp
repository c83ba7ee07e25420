#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tube/roots/root_system.hpp"

namespace tube::roots {

// A torus-fixed point wP of G/P_node.
struct FixedPoint {
  std::vector<int> word;            // w as letters s_{word[0]} ... s_{word.back()}
  std::vector<int> weight;          // w(omega_node) in Dynkin labels
  std::vector<std::size_t> tangent_roots;  // root indices spanning T_{wP}
  std::vector<int> tangent_weights;        // sigma on those roots
};

// The W-orbit of omega_node with tangent data for the one-parameter subgroup sigma.
std::vector<FixedPoint> bb_fixed_points(const RootSystem& rs, int node, const std::vector<int>& sigma);

struct ActionClass {
  bool equalized = false;
  std::vector<std::size_t> euler_sources;  // indices into bb_fixed_points
  std::vector<std::size_t> euler_sinks;
  std::size_t fixed_points = 0;
};

// Action of sigma_beta on G/P_node.
ActionClass classify_action(const RootSystem& rs, int node, int beta);

struct MarkedDiagram {
  char type;
  int rank;
  int node;
  bool operator==(const MarkedDiagram&) const = default;
  auto operator<=>(const MarkedDiagram&) const = default;
  std::string name() const { return std::string(1, type) + std::to_string(rank) + "/" + std::to_string(node); }
};

// Irreducible types enumerated up to max_rank: A1.., B2.., C2.., D4.., E6-E8, F4, G2.
std::vector<std::pair<char, int>> enumerate_types(int max_rank);

// Marked diagrams admitting some sigma_beta that is equalized with at least one
// Euler source and one Euler sink.
std::vector<MarkedDiagram> equalized_euler_diagrams(int max_rank);

// Expected list from the tube-type families for comparison.
std::vector<MarkedDiagram> tube_type_families(int max_rank);

struct PosetCheck {
  std::size_t components = 0;
  std::size_t source = 0;          // fixed point index of the Euler source
  std::size_t successor = 0;       // component index of the unique minimal successor
  std::vector<std::size_t> successor_points;
  bool unique_successor = false;
  bool one_negative_weight = false;  // v^- = 1 at every point of the successor
  bool ok() const { return unique_successor && one_negative_weight; }
};

// Fixed components via weight-zero T-curves, order via positive-weight
// T-curves. Throws NotEulerSource if sigma has no Euler source on G/P_node.
PosetCheck bb_poset_check(const RootSystem& rs, int node, const std::vector<int>& sigma);

}  // namespace tube::roots
