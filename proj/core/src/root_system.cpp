#include "tube/roots/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "tube/error.hpp"

namespace tube::roots {

namespace {

QVector e(std::size_t dim, std::initializer_list<std::pair<std::size_t, Rat>> entries) {
  QVector v(dim, Rat(0));
  for (const auto& [i, c] : entries) v[i] = c;
  return v;
}

std::vector<QVector> euclidean_model(char type, int n) {
  std::vector<QVector> s;
  const Rat h = rat(1, 2);
  switch (type) {
    case 'A':
      for (int i = 0; i < n; ++i) s.push_back(e(n + 1, {{i, 1}, {i + 1, -1}}));
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) s.push_back(e(n, {{i, 1}, {i + 1, -1}}));
      s.push_back(e(n, {{n - 1, 1}}));
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) s.push_back(e(n, {{i, 1}, {i + 1, -1}}));
      s.push_back(e(n, {{n - 1, 2}}));
      break;
    case 'D':
      for (int i = 0; i + 1 < n; ++i) s.push_back(e(n, {{i, 1}, {i + 1, -1}}));
      s.push_back(e(n, {{n - 2, 1}, {n - 1, 1}}));
      break;
    case 'E': {
      std::vector<QVector> e8;
      e8.push_back(e(8, {{0, h}, {1, -h}, {2, -h}, {3, -h}, {4, -h}, {5, -h}, {6, -h}, {7, h}}));
      e8.push_back(e(8, {{0, 1}, {1, 1}}));
      e8.push_back(e(8, {{0, -1}, {1, 1}}));
      for (std::size_t i = 1; i < 6; ++i) e8.push_back(e(8, {{i, -1}, {i + 1, 1}}));
      s.assign(e8.begin(), e8.begin() + n);
      break;
    }
    case 'F':
      s.push_back(e(4, {{1, 1}, {2, -1}}));
      s.push_back(e(4, {{2, 1}, {3, -1}}));
      s.push_back(e(4, {{3, 1}}));
      s.push_back(e(4, {{0, h}, {1, -h}, {2, -h}, {3, -h}}));
      break;
    case 'G':
      s.push_back(e(3, {{0, 1}, {1, -1}}));
      s.push_back(e(3, {{0, -2}, {1, 1}, {2, 1}}));
      break;
  }
  return s;
}

void check_type(char type, int rank) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok) throw BadType("unsupported root system " + std::string(1, type) + std::to_string(rank));
}

}  // namespace

RootSystem build(char type, int rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  check_type(type, rank);
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.simple_roots = euclidean_model(type, rank);
  const int n = rank;
  rs.form.assign(n, std::vector<Rat>(n));
  rs.cartan.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.form[i][j] = dot(rs.simple_roots[i], rs.simple_roots[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat c = 2 * rs.form[i][j] / rs.form[j][j];
      rs.cartan[i][j] = static_cast<int>(c.get_num().get_si());
    }

  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    seen.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      Root s = rs.reflect(i, r);
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  std::vector<Root> pos;
  for (const auto& r : seen)
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) pos.push_back(r);
  std::stable_sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) { return height(a) < height(b); });
  rs.num_positive = pos.size();
  rs.roots = pos;
  for (const auto& r : pos) {
    Root neg = r;
    for (auto& c : neg) c = -c;
    rs.roots.push_back(neg);
  }
  for (std::size_t i = 0; i < rs.roots.size(); ++i) rs.lookup_[rs.roots[i]] = i;
  rs.reflection.assign(n, std::vector<std::size_t>(rs.roots.size()));
  for (int i = 0; i < n; ++i)
    for (std::size_t r = 0; r < rs.roots.size(); ++r) rs.reflection[i][r] = rs.index_of(rs.reflect(i + 1, rs.roots[r]));
  return rs;
}

RootSystem build(std::string_view name) {
  if (name.size() < 2) throw BadType("bad root system name '" + std::string(name) + "'");
  int rank = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw BadType("bad root system name '" + std::string(name) + "'");
    rank = rank * 10 + (c - '0');
  }
  return build(name[0], rank);
}

std::size_t RootSystem::index_of(const Root& r) const {
  auto it = lookup_.find(r);
  if (it == lookup_.end()) throw BadType("not a root of " + name());
  return it->second;
}

Root RootSystem::reflect(int node, const Root& r) const {
  const int i = node - 1;
  int pairing = 0;  // <r, alpha_i^vee>
  for (int j = 0; j < rank; ++j) pairing += r[j] * cartan[j][i];
  Root s = r;
  s[i] -= pairing;
  return s;
}

Root highest_root(const RootSystem& rs) { return rs.roots[rs.num_positive - 1]; }

int coefficient(const Root& r, int node) { return r.at(node - 1); }

int height(const Root& r) {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

std::vector<int> longest_element_word(const RootSystem& rs) {
  // Walk rho to -rho in Dynkin labels: s_i lambda = lambda - lambda_i alpha_i.
  std::vector<int> lambda(rs.rank, 1), word;
  for (;;) {
    int i = 0;
    while (i < rs.rank && lambda[i] <= 0) ++i;
    if (i == rs.rank) break;
    int li = lambda[i];
    for (int j = 0; j < rs.rank; ++j) lambda[j] -= li * rs.cartan[i][j];
    word.push_back(i + 1);
  }
  // The walk applied s_{word[0]} first, so w0 = s_{word.back()} ... s_{word[0]};
  // reversing gives the left-to-right reading.
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<int> opposition_involution(const RootSystem& rs) {
  auto word = longest_element_word(rs);
  std::vector<int> iota(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    Root r(rs.rank, 0);
    r[i] = 1;
    std::size_t idx = rs.index_of(r);
    for (auto it = word.rbegin(); it != word.rend(); ++it) idx = rs.reflection[*it - 1][idx];
    Root image = rs.roots[idx];
    for (auto& c : image) c = -c;
    auto pos = std::find(image.begin(), image.end(), 1) - image.begin();
    iota[i] = static_cast<int>(pos) + 1;
  }
  return iota;
}

bool is_cominuscule(const RootSystem& rs, int node) {
  if (node < 1 || node > rs.rank) throw BadType("node out of range for " + rs.name());
  return coefficient(highest_root(rs), node) == 1;
}

bool is_ihss(const RootSystem& rs, int node) { return is_cominuscule(rs, node); }

bool is_tube_type(const RootSystem& rs, int node) {
  return is_cominuscule(rs, node) && opposition_involution(rs)[node - 1] == node;
}

int evaluate(const std::vector<int>& sigma, const Root& r) {
  int v = 0;
  for (std::size_t i = 0; i < r.size(); ++i) v += sigma[i] * r[i];
  return v;
}

std::vector<int> node_grading(const RootSystem& rs, int node) {
  if (node < 1 || node > rs.rank) throw BadType("node out of range for " + rs.name());
  std::vector<int> s(rs.rank, 0);
  s[node - 1] = 1;
  return s;
}

std::map<int, std::size_t> grading_dims(const RootSystem& rs, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != rs.rank) throw BadType("grading has the wrong length");
  std::map<int, std::size_t> dims;
  dims[0] = rs.rank;
  for (const auto& r : rs.roots) ++dims[evaluate(sigma, r)];
  return dims;
}

}  // namespace tube::roots
