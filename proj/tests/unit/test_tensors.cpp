#include <gtest/gtest.h>

#include "tube/random.hpp"
#include "tube/tensors/symform.hpp"
#include "tube/zoo/variety.hpp"

using namespace tube;
using namespace tube::tensors;

namespace {

QVector random_vector(Rng& rng, std::size_t n, long range = 5) {
  QVector v(n);
  for (auto& x : v) x = rng.uniform(-range, range);
  return v;
}

SymForm random_form(Rng& rng, std::size_t n, int d) {
  QVector c(sym_dim(n, d));
  for (auto& x : c) x = rng.uniform(-4, 4);
  return SymForm::from_coefficients(n, d, c);
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(SymDim, MatchesBinomial) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (int d = 0; d <= 5; ++d) {
      EXPECT_EQ(sym_dim(n, d), static_cast<std::size_t>(binom(static_cast<long>(n) + d - 1, d)));
      EXPECT_EQ(monomial_basis(n, d).size(), sym_dim(n, d));
    }
}

TEST(Multinomial, MatchesFactorials) {
  EXPECT_EQ(multinomial({2, 1, 0}), 3);
  EXPECT_EQ(multinomial({1, 1, 1}), 6);
  EXPECT_EQ(multinomial({4}), 1);
  EXPECT_EQ(multinomial({2, 2}), 6);
}

TEST(Polarization, DiagonalIsEvaluationAndSymmetric) {
  Rng rng(21);
  for (int d = 1; d <= 4; ++d) {
    auto f = random_form(rng, 3, d);
    auto v = random_vector(rng, 3);
    EXPECT_EQ(polarize_eval(f, std::vector<QVector>(d, v)), f(v));
    std::vector<QVector> args;
    for (int i = 0; i < d; ++i) args.push_back(random_vector(rng, 3));
    auto swapped = args;
    std::reverse(swapped.begin(), swapped.end());
    EXPECT_EQ(polarize_eval(f, args), polarize_eval(f, swapped));
  }
}

TEST(Polarization, MultilinearInFirstSlot) {
  Rng rng(22);
  auto f = random_form(rng, 4, 3);
  auto a = random_vector(rng, 4), b = random_vector(rng, 4), c = random_vector(rng, 4), e = random_vector(rng, 4);
  QVector ab(4);
  for (int i = 0; i < 4; ++i) ab[i] = 2 * a[i] - 3 * b[i];
  EXPECT_EQ(polarize_eval(f, {ab, c, e}), 2 * polarize_eval(f, {a, c, e}) - 3 * polarize_eval(f, {b, c, e}));
}

TEST(Contraction, CommutesAndMatchesPolarization) {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 2 + trial % 3;
    auto f = random_form(rng, 4, d);
    auto u = random_vector(rng, 4), w = random_vector(rng, 4);
    EXPECT_EQ(contract(contract(f, u), w), contract(contract(f, w), u));
    auto v = random_vector(rng, 4);
    std::vector<QVector> args(d, v);
    args[0] = u;
    EXPECT_EQ(contract(f, u)(v), polarize_eval(f, args));
  }
}

TEST(VValuedSymMap, TensorRoundTripAndDiagonal) {
  Rng rng(24);
  MultisetIndex ms(3, 2);
  QVector t(4 * ms.size());
  for (auto& x : t) x = rng.uniform(-3, 3);
  auto a = VValuedSymMap::from_tensor(3, 2, 4, t);
  EXPECT_EQ(a.to_tensor(), t);
  auto v = random_vector(rng, 3), w = random_vector(rng, 3);
  EXPECT_EQ(a.diagonal(v), a({v, v}));
  EXPECT_EQ(a({v, w}), a({w, v}));
  EXPECT_EQ(a.contract(v).diagonal(w), a({v, w}));
}

TEST(MultisetIndex, IndexOfInvertsAt) {
  MultisetIndex ms(4, 3);
  for (std::size_t i = 0; i < ms.size(); ++i) EXPECT_EQ(ms.index_of(ms.at(i)), i);
  EXPECT_EQ(ms.index_of({2, 0, 1}), ms.index_of({0, 1, 2}));
}

TEST(Jacobian, CentralDifferenceIsExactForQuadraticMaps) {
  Rng rng(25);
  for (const auto& x : {zoo::make_segre(2, 3), zoo::make_veronese2(3), zoo::make_quadric(5)}) {
    auto t = random_vector(rng, x.param_dim);
    auto j = x.phi.jacobian(t);
    for (std::size_t k = 0; k < x.param_dim; ++k) {
      QVector tp = t, tm = t;
      tp[k] += 1;
      tm[k] -= 1;
      auto fp = x.phi(tp), fm = x.phi(tm);
      for (std::size_t i = 0; i < x.ambient_dim; ++i) EXPECT_EQ(j(i, k), (fp[i] - fm[i]) / 2) << x.name;
    }
  }
}

TEST(PolyMap, ThenComposesWithLinearMap) {
  auto x = zoo::make_veronese2(2);
  linalg::QMatrix l(2, 3);
  l(0, 0) = 1;
  l(0, 2) = -1;
  l(1, 1) = 2;
  auto y = x.phi.then(l);
  QVector t{Rat(3), Rat(-2)};
  EXPECT_EQ(y(t), l * std::span<const Rat>(x.phi(t)));
}
