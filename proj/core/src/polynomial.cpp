#include "tube/tensors/polynomial.hpp"

#include <sstream>

#include "tube/error.hpp"

namespace tube::tensors {

Polynomial Polynomial::constant(std::size_t nvars, const Rat& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DimensionMismatch("variable index out of range");
  Exponents e(nvars, 0);
  e[i] = 1;
  return monomial(e, Rat(1));
}

Polynomial Polynomial::monomial(const Exponents& e, const Rat& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool Polynomial::is_homogeneous(int d) const {
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (s != d) return false;
  }
  return true;
}

Rat Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rat& c) {
  if (e.size() != nvars_) throw DimensionMismatch("add_term: exponent length differs from variable count");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("polynomial sum: variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("polynomial difference: variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rat& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomial product: variable counts differ");
  Polynomial p(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Polynomial pow(const Polynomial& p, int e) {
  Polynomial r = Polynomial::constant(p.num_vars(), Rat(1));
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

Rat Polynomial::evaluate(std::span<const Rat> x) const {
  if (x.size() != nvars_) throw DimensionMismatch("evaluate: point has wrong length");
  Rat sum = 0, term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < nvars_ && sgn(term) != 0; ++i)
      for (int k = 0; k < e[i]; ++k) term *= x[i];
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= nvars_) throw DimensionMismatch("derivative: variable index out of range");
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents f = e;
    f[i] -= 1;
    p.add_term(f, c * e[i]);
  }
  return p;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw DimensionMismatch("substitute: need one image per variable");
  std::size_t m = images.empty() ? 0 : images.front().num_vars();
  Polynomial out(m);
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(m, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Polynomial::constant(m, Rat(1)));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      term = term * pw[e[i]];
    }
    out += term;
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    Rat a = abs(c);
    bool unit = a == 1;
    bool constant = true;
    for (int x : e) constant = constant && x == 0;
    if (!unit || constant) out << a.get_str();
    bool need_star = !unit || constant;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << "*";
      out << "x" << i;
      if (e[i] > 1) out << "^" << e[i];
      need_star = true;
    }
  }
  return out.str();
}

namespace {
void enumerate(std::size_t n, int d, std::size_t i, Exponents& cur, std::vector<Exponents>& out) {
  if (i + 1 == n) {
    cur[i] = d;
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= d; ++k) {
    cur[i] = k;
    enumerate(n, d - k, i + 1, cur, out);
  }
}
}  // namespace

std::vector<Exponents> monomial_basis(std::size_t n, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents cur(n, 0);
  enumerate(n, d, 0, cur, out);
  return out;
}

std::size_t sym_dim(std::size_t n, int d) {
  if (d < 0) return 0;
  if (n == 0) return d == 0 ? 1 : 0;
  // C(n + d - 1, d)
  std::size_t r = 1;
  for (int k = 1; k <= d; ++k) r = r * (n + k - 1) / k;
  return r;
}

}  // namespace tube::tensors
