#include <gtest/gtest.h>

#include "tube/linalg/echelon.hpp"
#include "tube/linalg/sparse.hpp"
#include "tube/linalg/subspace.hpp"
#include "tube/random.hpp"

using namespace tube;
using namespace tube::linalg;

namespace {

QMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long range, std::size_t rank_cap = 0) {
  // rank_cap > 0: product of r x k and k x c factors
  if (rank_cap == 0) {
    QMatrix m(r, c);
    for (auto& x : m.data()) x = rng.uniform(-range, range);
    return m;
  }
  return random_matrix(rng, r, rank_cap, range) * random_matrix(rng, rank_cap, c, range);
}

// Independent rank oracle: fraction-free elimination on doubles is not
// exact, so count pivots of a Bareiss elimination over mpz.
std::size_t bareiss_rank(QMatrix m) {
  std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat x = m(i, j);
      a[i][j] = x.get_num();  // callers pass integer matrices
    }
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][col] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j) a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

QSystem to_system(const QMatrix& m) {
  QSystem s(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    QSystem::Row row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) row.emplace_back(j, m(i, j));
    s.add_row(std::move(row));
  }
  return s;
}

}  // namespace

TEST(Rref, IdempotentAndRankMatchesBareiss) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng.uniform(0, 7), c = 1 + rng.uniform(0, 7);
    auto m = random_matrix(rng, r, c, 4, trial % 3 == 0 ? 2 : 0);
    auto R = rref(RationalField{}, m);
    EXPECT_EQ(R.rank(), bareiss_rank(m));
    auto again = rref(RationalField{}, R.reduced);
    EXPECT_EQ(again.reduced, R.reduced);
    EXPECT_EQ(again.pivots, R.pivots);
    for (std::size_t k = 0; k < R.pivots.size(); ++k) {
      EXPECT_EQ(R.reduced(k, R.pivots[k]), 1);
      for (std::size_t i = 0; i < R.reduced.rows(); ++i)
        if (i != k) EXPECT_EQ(R.reduced(i, R.pivots[k]), 0);
    }
  }
}

TEST(Kernel, AnnihilatesAndRankNullity) {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng.uniform(0, 6), c = 1 + rng.uniform(0, 8);
    auto m = random_matrix(rng, r, c, 5, trial % 2 ? 2 : 0);
    auto k = kernel(RationalField{}, m);
    EXPECT_EQ(k.rows() + bareiss_rank(m), c);
    EXPECT_TRUE(is_zero(m * transpose(k)));
    EXPECT_EQ(bareiss_rank(k), k.rows());
  }
}

TEST(Inverse, TimesMatrixIsIdentity) {
  Rng rng(13);
  int done = 0;
  while (done < 10) {
    auto m = random_matrix(rng, 5, 5, 6);
    if (bareiss_rank(m) < 5) continue;
    EXPECT_EQ(m * inverse(RationalField{}, m), identity(5));
    ++done;
  }
  QMatrix singular(2, 2);
  singular(0, 0) = 1;
  singular(0, 1) = 2;
  singular(1, 0) = 2;
  singular(1, 1) = 4;
  EXPECT_THROW(inverse(RationalField{}, singular), NotInvertible);
}

TEST(SolveXA, RecoversX) {
  Rng rng(14);
  auto a = random_matrix(rng, 4, 6, 5);
  ASSERT_EQ(bareiss_rank(a), 4u);
  auto x = random_matrix(rng, 3, 4, 5);
  auto got = solve_xa_eq_b(RationalField{}, a, x * a);
  ASSERT_TRUE(got.has_value());
  EXPECT_EQ(*got, x);
}

TEST(Subspace, SumIntersectDimensionFormula) {
  Rng rng(15);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 7;
    auto a = Subspace::from_rows(RationalField{}, random_matrix(rng, 1 + rng.uniform(0, 4), n, 3));
    auto b = Subspace::from_rows(RationalField{}, random_matrix(rng, 1 + rng.uniform(0, 4), n, 3));
    auto s = sum(a, b);
    auto i = intersect(a, b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    EXPECT_TRUE(s.contains(a));
    EXPECT_TRUE(s.contains(b));
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
    EXPECT_EQ(a.annihilator().dim(), n - a.dim());
    EXPECT_EQ(a.annihilator().annihilator(), a);
  }
}

TEST(Subspace, ContainsMembership) {
  auto s = span_q(3, {{Rat(1), Rat(1), Rat(0)}});
  EXPECT_TRUE(s.contains(QVector{Rat(2), Rat(2), Rat(0)}));
  EXPECT_FALSE(s.contains(QVector{Rat(1), Rat(0), Rat(0)}));
  EXPECT_THROW(s.contains(QVector{Rat(1)}), DimensionMismatch);
}

TEST(PrimeField, RankModPMatchesRationalForSmallEntries) {
  Rng rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_matrix(rng, 6, 7, 9, trial % 2 ? 3 : 0);
    EXPECT_EQ(rank_mod_p(m, kPrime1), bareiss_rank(m));
    EXPECT_EQ(rank_mod_p(m, kPrime2), bareiss_rank(m));
  }
}

TEST(PrimeField, PrimesAreAndSeededPrimesAreDistinctPrimes) {
  EXPECT_TRUE(is_prime(kPrime1));
  EXPECT_TRUE(is_prime(kPrime2));
  EXPECT_GT(kPrime1, kPrime2);
  for (std::size_t i = 0; i < 5; ++i) {
    auto p = prime_below_2_30(i);
    EXPECT_TRUE(is_prime(p));
    EXPECT_LT(p, 1u << 30);
    if (i > 0) {
      EXPECT_LT(p, prime_below_2_30(i - 1));
    }
  }
  EXPECT_TRUE(is_prime(seeded_prime(99)));
  EXPECT_THROW(PrimeField(100), BadPrime);
}

TEST(Sparse, CertifiedKernelEqualsRationalKernel) {
  Rng rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t c = 12 + rng.uniform(0, 8);
    auto m = random_matrix(rng, c - 3 - rng.uniform(0, 3), c, 7, 0);
    // rational entries exercise the reconstruction
    for (std::size_t j = 0; j < c; j += 3) m(0, j) /= 7;
    auto s = to_system(m);
    auto cert = certified_kernel(s);
    EXPECT_EQ(cert.kernel, rational_kernel(s));
    EXPECT_FALSE(cert.direct);
    EXPECT_TRUE(is_zero(m * transpose(cert.kernel.basis())));
  }
}

TEST(Sparse, TwoPrimeKernelDimensionsAgree) {
  Rng rng(18);
  for (int trial = 0; trial < 12; ++trial) {
    auto m = random_matrix(rng, 15, 14, 20, 9);
    auto s = to_system(m);
    auto k1 = kernel_mod_p(s, kPrime1);
    auto k2 = kernel_mod_p(s, kPrime2);
    EXPECT_EQ(k1.dim(), k2.dim());
    EXPECT_EQ(k1.dim(), 14 - bareiss_rank(m));
    EXPECT_EQ(kernel_mod_p(s, kPrime1, 5).dim(), k1.dim());
  }
}

TEST(Sparse, RationalReconstruction) {
  Int m = Int(kPrime1) * Int(kPrime2);
  for (auto [p, q] : std::vector<std::pair<long, long>>{{3, 7}, {-22, 5}, {1, 1}, {0, 1}, {12345, 678}}) {
    Int inv;
    Int qz = q;
    mpz_invert(inv.get_mpz_t(), qz.get_mpz_t(), m.get_mpz_t());
    Int a = (Int(p) * inv) % m;
    if (a < 0) a += m;
    auto r = rational_reconstruct(a, m);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, rat(p, q));
  }
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rat("-3/6"), rat(-1, 2));
  EXPECT_EQ(to_string(rat(5, 10)), "1/2");
  EXPECT_THROW(parse_rat("x"), std::invalid_argument);
  EXPECT_EQ(primitive(QVector{rat(1, 2), rat(1, 3)}), (QVector{Rat(3), Rat(2)}));
}
