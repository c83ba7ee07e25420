#include "tube/linalg/rational.hpp"

#include <stdexcept>

namespace tube {

std::string to_string(const Rat& r) { return r.get_str(); }

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  Int n(num), d(den);
  if (d == 0) throw bad();
  Rat r(n, d);
  r.canonicalize();
  return r;
}

QVector zero_vector(std::size_t n) { return QVector(n, Rat(0)); }

QVector unit_vector(std::size_t n, std::size_t i) {
  QVector v(n, Rat(0));
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Rat> v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

QVector primitive(std::span<const Rat> v) {
  Int l = 1, g = 0;
  for (const auto& x : v)
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  QVector out(v.begin(), v.end());
  for (auto& x : out) {
    x *= l;
    if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace tube
