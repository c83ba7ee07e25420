#include "tube/roots/bb.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tube/error.hpp"

namespace tube::roots {

std::vector<FixedPoint> bb_fixed_points(const RootSystem& rs, int node, const std::vector<int>& sigma) {
  if (node < 1 || node > rs.rank) throw BadType("node out of range for " + rs.name());
  if (static_cast<int>(sigma.size()) != rs.rank) throw BadType("sigma has the wrong length");
  FixedPoint base;
  base.weight.assign(rs.rank, 0);
  base.weight[node - 1] = 1;
  for (std::size_t r = rs.num_positive; r < rs.roots.size(); ++r)
    if (coefficient(rs.roots[r], node) != 0) base.tangent_roots.push_back(r);

  std::vector<FixedPoint> pts{base};
  std::map<std::vector<int>, std::size_t> seen{{base.weight, 0}};
  for (std::size_t head = 0; head < pts.size(); ++head) {
    for (int i = 1; i <= rs.rank; ++i) {
      const auto& mu = pts[head].weight;
      int mi = mu[i - 1];
      if (mi == 0) continue;
      std::vector<int> next = mu;
      for (int j = 0; j < rs.rank; ++j) next[j] -= mi * rs.cartan[i - 1][j];
      if (seen.count(next)) continue;
      FixedPoint p;
      p.weight = next;
      p.word.push_back(i);
      p.word.insert(p.word.end(), pts[head].word.begin(), pts[head].word.end());
      for (auto r : pts[head].tangent_roots) p.tangent_roots.push_back(rs.reflection[i - 1][r]);
      seen.emplace(next, pts.size());
      pts.push_back(std::move(p));
    }
  }
  for (auto& p : pts)
    for (auto r : p.tangent_roots) p.tangent_weights.push_back(evaluate(sigma, rs.roots[r]));
  return pts;
}

ActionClass classify_action(const RootSystem& rs, int node, int beta) {
  auto pts = bb_fixed_points(rs, node, node_grading(rs, beta));
  ActionClass c;
  c.fixed_points = pts.size();
  c.equalized = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& w = pts[i].tangent_weights;
    if (std::any_of(w.begin(), w.end(), [](int x) { return x < -1 || x > 1; })) c.equalized = false;
    if (std::all_of(w.begin(), w.end(), [](int x) { return x == 1; })) c.euler_sources.push_back(i);
    if (std::all_of(w.begin(), w.end(), [](int x) { return x == -1; })) c.euler_sinks.push_back(i);
  }
  return c;
}

std::vector<std::pair<char, int>> enumerate_types(int max_rank) {
  std::vector<std::pair<char, int>> out;
  for (int n = 1; n <= max_rank; ++n) out.emplace_back('A', n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back('B', n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back('C', n);
  for (int n = 4; n <= max_rank; ++n) out.emplace_back('D', n);
  for (int n = 6; n <= std::min(max_rank, 8); ++n) out.emplace_back('E', n);
  if (max_rank >= 4) out.emplace_back('F', 4);
  if (max_rank >= 2) out.emplace_back('G', 2);
  return out;
}

std::vector<MarkedDiagram> equalized_euler_diagrams(int max_rank) {
  std::vector<MarkedDiagram> out;
  for (auto [type, rank] : enumerate_types(max_rank)) {
    auto rs = build(type, rank);
    for (int node = 1; node <= rank; ++node) {
      auto pts = bb_fixed_points(rs, node, std::vector<int>(rank, 0));
      for (int beta = 1; beta <= rank; ++beta) {
        bool equalized = true, source = false, sink = false;
        for (const auto& p : pts) {
          bool all_pos = true, all_neg = true;
          for (auto r : p.tangent_roots) {
            int w = coefficient(rs.roots[r], beta);
            if (w < -1 || w > 1) equalized = false;
            all_pos = all_pos && w == 1;
            all_neg = all_neg && w == -1;
          }
          source = source || all_pos;
          sink = sink || all_neg;
          if (!equalized) break;
        }
        if (equalized && source && sink) {
          out.push_back({type, rank, node});
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MarkedDiagram> tube_type_families(int max_rank) {
  std::vector<MarkedDiagram> out;
  for (auto [type, rank] : enumerate_types(max_rank)) {
    auto rs = build(type, rank);
    for (int node = 1; node <= rank; ++node)
      if (is_tube_type(rs, node)) out.push_back({type, rank, node});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// s_gamma(mu) for mu in Dynkin labels and gamma a root in simple-root coordinates.
std::vector<int> reflect_weight(const RootSystem& rs, const std::vector<int>& mu, const Root& gamma) {
  Rat mu_gamma = 0, gamma_gamma = 0;
  for (int j = 0; j < rs.rank; ++j) mu_gamma += Rat(mu[j] * gamma[j]) * rs.form[j][j] / 2;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) gamma_gamma += Rat(gamma[i] * gamma[j]) * rs.form[i][j];
  Rat pairing = 2 * mu_gamma / gamma_gamma;
  if (pairing.get_den() != 1) throw BadType("non-integral pairing");
  long c = pairing.get_num().get_si();
  std::vector<int> out = mu;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) out[j] -= static_cast<int>(c) * gamma[i] * rs.cartan[i][j];
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

PosetCheck bb_poset_check(const RootSystem& rs, int node, const std::vector<int>& sigma) {
  auto pts = bb_fixed_points(rs, node, sigma);
  PosetCheck out;
  auto src = std::find_if(pts.begin(), pts.end(), [](const FixedPoint& p) {
    return std::all_of(p.tangent_weights.begin(), p.tangent_weights.end(), [](int w) { return w == 1; });
  });
  if (src == pts.end()) throw NotEulerSource("sigma has no Euler source on " + rs.name() + "/" + std::to_string(node));
  out.source = static_cast<std::size_t>(src - pts.begin());

  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i].weight] = i;
  UnionFind uf(pts.size());
  std::vector<std::pair<std::size_t, std::size_t>> up;  // Y(p) < Y(q)
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t t = 0; t < pts[i].tangent_roots.size(); ++t) {
      std::size_t q = index.at(reflect_weight(rs, pts[i].weight, rs.roots[pts[i].tangent_roots[t]]));
      int w = pts[i].tangent_weights[t];
      if (w == 0) uf.unite(i, q);
      else if (w > 0) up.emplace_back(i, q);
    }
  std::map<std::size_t, std::size_t> comp_id;
  for (std::size_t i = 0; i < pts.size(); ++i) comp_id.try_emplace(uf.find(i), comp_id.size());
  const std::size_t nc = comp_id.size();
  out.components = nc;
  std::vector<std::vector<bool>> less(nc, std::vector<bool>(nc, false));
  for (auto [p, q] : up) {
    std::size_t a = comp_id[uf.find(p)], b = comp_id[uf.find(q)];
    if (a != b) less[a][b] = true;
  }
  for (std::size_t k = 0; k < nc; ++k)
    for (std::size_t i = 0; i < nc; ++i)
      if (less[i][k])
        for (std::size_t j = 0; j < nc; ++j)
          if (less[k][j]) less[i][j] = true;
  std::size_t x = comp_id[uf.find(out.source)];
  std::vector<std::size_t> candidates;
  for (std::size_t y = 0; y < nc; ++y) {
    if (y == x) continue;
    bool only_x = less[x][y];
    for (std::size_t z = 0; z < nc && only_x; ++z)
      if (z != y && z != x && less[z][y]) only_x = false;
    if (only_x) candidates.push_back(y);
  }
  out.unique_successor = candidates.size() == 1;
  if (!out.unique_successor) return out;
  out.successor = candidates[0];
  out.one_negative_weight = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (comp_id[uf.find(i)] != out.successor) continue;
    out.successor_points.push_back(i);
    auto neg = std::count_if(pts[i].tangent_weights.begin(), pts[i].tangent_weights.end(), [](int w) { return w < 0; });
    if (neg != 1) out.one_negative_weight = false;
  }
  return out;
}

}  // namespace tube::roots
