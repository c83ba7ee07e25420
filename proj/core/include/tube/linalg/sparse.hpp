#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tube/linalg/subspace.hpp"

namespace tube::linalg {

// A homogeneous linear system given by sparse rows.
template <class E>
struct SparseSystem {
  using Row = std::vector<std::pair<std::size_t, E>>;

  std::size_t cols = 0;
  std::vector<Row> rows;

  explicit SparseSystem(std::size_t n = 0) : cols(n) {}
  void add_row(Row row) {
    for (const auto& [c, v] : row)
      if (c >= cols) throw DimensionMismatch("SparseSystem: column out of range");
    rows.push_back(std::move(row));
  }
  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.size();
    return n;
  }
};

using QSystem = SparseSystem<Rat>;

template <class F>
SparseSystem<typename F::Elem> reduce_system(const F& f, const QSystem& s) {
  SparseSystem<typename F::Elem> out(s.cols);
  out.rows.reserve(s.rows.size());
  for (const auto& row : s.rows) {
    typename SparseSystem<typename F::Elem>::Row r;
    r.reserve(row.size());
    for (const auto& [c, v] : row) {
      auto x = f.from_rat(v);
      if (!f.is_zero(x)) r.emplace_back(c, std::move(x));
    }
    out.rows.push_back(std::move(r));
  }
  return out;
}

template <class F>
Matrix<typename F::Elem> densify(const F& f, const SparseSystem<typename F::Elem>& s) {
  Matrix<typename F::Elem> m(s.rows.size(), s.cols, f.zero());
  for (std::size_t i = 0; i < s.rows.size(); ++i)
    for (const auto& [c, v] : s.rows[i]) m(i, c) = f.add(m(i, c), v);
  return m;
}

// Kernel by dense elimination over the given field. Tall systems are fed
// through in chunks so memory stays near 3 * cols^2 entries.
template <class F>
BasicSubspace<F> kernel_of(const F& f, const SparseSystem<typename F::Elem>& s) {
  using E = typename F::Elem;
  const std::size_t cols = s.cols;
  if (s.rows.empty()) {
    std::vector<std::size_t> p(cols);
    for (std::size_t i = 0; i < cols; ++i) p[i] = i;
    return BasicSubspace<F>::from_canonical(f, identity(f, cols), std::move(p));
  }
  const std::size_t chunk = 2 * cols + 8;
  Matrix<E> acc(0, cols);
  std::vector<std::size_t> pivots;
  for (std::size_t next = 0; next < s.rows.size();) {
    std::size_t take = std::min(chunk, s.rows.size() - next);
    Matrix<E> m(acc.rows() + take, cols, f.zero());
    std::copy(acc.data().begin(), acc.data().end(), m.data().begin());
    for (std::size_t i = 0; i < take; ++i)
      for (const auto& [c, v] : s.rows[next + i]) m(acc.rows() + i, c) = f.add(m(acc.rows() + i, c), v);
    next += take;
    pivots = echelon_inplace(f, m);
    m.truncate_rows(pivots.size());
    acc = std::move(m);
  }
  back_reduce(f, acc, pivots);
  auto k = kernel_from_rref(f, acc, pivots, cols);
  return BasicSubspace<F>::from_rows(f, std::move(k));
}

// Kernel of a rational system reduced mod p, optionally after multiplying
// by a seeded random matrix to cut the row count to cols + extra.
BasicSubspace<PrimeField> kernel_mod_p(const QSystem& s, std::uint32_t p,
                                       std::optional<std::uint64_t> compress_seed = std::nullopt);

// Symmetric-range rational reconstruction of a mod m; nullopt if none with
// |num|, den <= sqrt(m/2).
std::optional<Rat> rational_reconstruct(const Int& a, const Int& m);

struct CertifyOptions {
  // Systems with at most this many unknowns go straight to rational RREF.
  std::size_t direct_max_cols = 10;
  std::size_t max_primes = 24;
  std::uint64_t compress_seed = 0x5eedULL;
};

struct CertifiedKernel {
  Subspace kernel;
  std::size_t primes_used = 0;   // 0 when solved directly over Q
  bool direct = false;
};

// Rational kernel reconstructed from prime images and verified exactly
// against every original row. Falls back to rational elimination.
CertifiedKernel certified_kernel(const QSystem& s, const CertifyOptions& opts = {});

// Rational kernel by exact elimination.
Subspace rational_kernel(const QSystem& s);

std::size_t rank_mod_p(const QMatrix& m, std::uint32_t p);

}  // namespace tube::linalg
