#include "tube/linalg/sparse.hpp"

#include <random>

namespace tube::linalg {

namespace {

// Integer copy of a rational system (each row scaled by the lcm of its
// denominators) used for exact verification.
std::vector<std::vector<std::pair<std::size_t, Int>>> integer_rows(const QSystem& s) {
  std::vector<std::vector<std::pair<std::size_t, Int>>> out;
  out.reserve(s.rows.size());
  for (const auto& row : s.rows) {
    Int l = 1;
    for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<std::pair<std::size_t, Int>> r;
    r.reserve(row.size());
    for (const auto& [c, v] : row) {
      if (sgn(v) == 0) continue;
      Int x = v.get_num() * (l / v.get_den());
      r.emplace_back(c, std::move(x));
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool verify(const std::vector<std::vector<std::pair<std::size_t, Int>>>& rows, const QMatrix& basis) {
  Int acc;
  for (std::size_t k = 0; k < basis.rows(); ++k) {
    QVector v = primitive(basis.row(k));
    std::vector<Int> iv(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) iv[j] = v[j].get_num();
    for (const auto& row : rows) {
      acc = 0;
      for (const auto& [c, x] : row)
        if (iv[c] != 0) mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), iv[c].get_mpz_t());
      if (acc != 0) return false;
    }
  }
  return true;
}

}  // namespace

BasicSubspace<PrimeField> kernel_mod_p(const QSystem& s, std::uint32_t p,
                                       std::optional<std::uint64_t> compress_seed) {
  PrimeField f(p);
  auto reduced = reduce_system(f, s);
  const std::size_t target = s.cols + 16;
  if (!compress_seed || reduced.rows.size() <= target + 16) return kernel_of(f, reduced);
  std::mt19937_64 gen(*compress_seed ^ (std::uint64_t(p) << 17));
  Matrix<std::uint32_t> m(target, s.cols, 0);
  for (const auto& row : reduced.rows) {
    for (std::size_t i = 0; i < target; ++i) {
      std::uint32_t r = f.reduce(gen());
      if (r == 0) continue;
      auto out = m.row(i);
      for (const auto& [c, v] : row) out[c] = f.add(out[c], f.mul(r, v));
    }
  }
  auto red = rref(f, std::move(m));
  auto k = kernel_from_rref(f, red.reduced, red.pivots, s.cols);
  return BasicSubspace<PrimeField>::from_rows(f, std::move(k));
}

std::optional<Rat> rational_reconstruct(const Int& a, const Int& m) {
  // Extended Euclid on (m, a) stopping once the remainder drops below sqrt(m/2).
  Int bound;
  Int half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Int r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  Int t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    q = r0 / r1;
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  Int at1 = abs(t1);
  if (t1 == 0 || at1 > bound) return std::nullopt;
  Int g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rat out(r1, t1);
  out.canonicalize();
  return out;
}

Subspace rational_kernel(const QSystem& s) { return kernel_of(RationalField{}, s); }

CertifiedKernel certified_kernel(const QSystem& s, const CertifyOptions& opts) {
  if (s.cols <= opts.direct_max_cols) return {rational_kernel(s), 0, true};

  auto int_rows = integer_rows(s);
  std::vector<std::size_t> pivots;
  std::size_t best_dim = s.cols + 1;
  std::vector<Int> residues;  // dim x cols, CRT images
  Int modulus = 1;
  std::size_t used = 0;

  for (std::size_t i = 0; i < opts.max_primes; ++i) {
    std::uint32_t p = prime_below_2_30(i);
    BasicSubspace<PrimeField> kp;
    try {
      kp = kernel_mod_p(s, p, opts.compress_seed);
    } catch (const BadPrime&) {
      continue;
    }
    ++used;
    if (kp.dim() == 0) return {Subspace(RationalField{}, s.cols), used, false};
    if (kp.dim() > best_dim) continue;
    if (kp.dim() < best_dim || kp.pivots() != pivots) {
      if (kp.dim() == best_dim) continue;  // same size, different shape: keep the first
      best_dim = kp.dim();
      pivots = kp.pivots();
      residues.assign(best_dim * s.cols, Int(0));
      modulus = 1;
    }
    // CRT: x <- x + M * ((r - x) * M^{-1} mod p)
    PrimeField f(p);
    std::uint32_t minv = f.inv(f.from_mpz(modulus));
    for (std::size_t k = 0; k < best_dim; ++k)
      for (std::size_t j = 0; j < s.cols; ++j) {
        Int& x = residues[k * s.cols + j];
        std::uint32_t r = kp.basis()(k, j);
        std::uint32_t delta = f.mul(f.sub(r, f.from_mpz(x)), minv);
        if (delta) x += modulus * delta;
      }
    modulus *= p;

    QMatrix candidate(best_dim, s.cols);
    bool ok = true;
    for (std::size_t idx = 0; idx < residues.size() && ok; ++idx) {
      if (residues[idx] == 0) continue;
      auto q = rational_reconstruct(residues[idx], modulus);
      if (!q) ok = false;
      else candidate.data()[idx] = *q;
    }
    if (!ok) continue;
    if (verify(int_rows, candidate))
      return {Subspace::from_canonical(RationalField{}, std::move(candidate), pivots), used, false};
  }
  return {rational_kernel(s), used, true};
}

std::size_t rank_mod_p(const QMatrix& m, std::uint32_t p) {
  PrimeField f(p);
  return rank(f, convert(f, m));
}

}  // namespace tube::linalg
