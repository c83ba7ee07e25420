#include <gtest/gtest.h>

#include "tube/aut/aut.hpp"
#include "tube/euler/structure.hpp"
#include "tube/random.hpp"

using namespace tube;
using namespace tube::euler;

namespace {

std::vector<std::size_t> v_dims(const GradedModel& m) {
  std::vector<std::size_t> d;
  for (std::size_t k = 0; k + 1 < m.offset.size(); ++k) d.push_back(m.offset[k + 1] - m.offset[k]);
  return d;
}

QVector random_vector(Rng& rng, std::size_t n, long range = 4) {
  QVector v(n);
  for (auto& x : v) x = rng.uniform(-range, range);
  return v;
}

std::vector<SymbolSystem> tube_systems() {
  return {minors(2), minors(3), sym_minors(2), sym_minors(3), pfaffian(4), pfaffian(6), quadric(5)};
}

}  // namespace

TEST(SymbolSystem, DimensionsOfShippedSystems) {
  EXPECT_EQ(v_dims(build_model(minors(2))), (std::vector<std::size_t>{1, 4, 1}));
  EXPECT_EQ(v_dims(build_model(minors(3))), (std::vector<std::size_t>{1, 9, 9, 1}));
  EXPECT_EQ(v_dims(build_model(sym_minors(2))), (std::vector<std::size_t>{1, 3, 1}));
  EXPECT_EQ(v_dims(build_model(sym_minors(3))), (std::vector<std::size_t>{1, 6, 6, 1}));
  EXPECT_EQ(v_dims(build_model(pfaffian(6))), (std::vector<std::size_t>{1, 15, 15, 1}));
  EXPECT_EQ(v_dims(build_model(quadric(6))), (std::vector<std::size_t>{1, 6, 1}));
  EXPECT_EQ(v_dims(build_model(minors(2, 3))), (std::vector<std::size_t>{1, 6, 3}));
}

TEST(SymbolSystem, ValidateRejectsNonClosedSystems) {
  // x0^3 alone: contraction gives x0^2, which is not in an empty F^2
  auto s = linear(2);
  tensors::Polynomial p = tensors::Polynomial::variable(2, 0) * tensors::Polynomial::variable(2, 0) *
                          tensors::Polynomial::variable(2, 0);
  s.forms.push_back({});
  s.forms.push_back({tensors::SymForm(2, 3, p)});
  EXPECT_THROW(validate(s), InvalidSymbolSystem);
  EXPECT_THROW(pfaffian(1), InvalidSymbolSystem);
}

TEST(Embed, MinorsOfTheIdentityAndHomogeneity) {
  auto m = build_model(minors(2));
  QVector id{Rat(1), Rat(0), Rat(0), Rat(1)};
  auto f = embed(m, id);
  EXPECT_EQ(f, (QVector{Rat(1), Rat(1), Rat(0), Rat(0), Rat(1), Rat(1)}));
  EXPECT_EQ(embed(m, zero_vector(4)), unit_vector(6, 0));
  Rng rng(41);
  auto m3 = build_model(minors(3));
  auto u = random_vector(rng, 9);
  QVector u2 = u;
  for (auto& x : u2) x *= 2;
  auto a = embed(m3, u), b = embed(m3, u2);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(b[i], a[i] * (1 << m3.block_of(i)));
}

TEST(Gamma, CommutingAndNilpotent) {
  for (const auto& s : tube_systems()) {
    auto m = build_model(s);
    for (std::size_t i = 0; i < s.w_dim; ++i)
      for (std::size_t j = 0; j < s.w_dim; ++j)
        EXPECT_TRUE(linalg::is_zero(linalg::commutator(m.gamma_basis[i], m.gamma_basis[j])));
    Rng rng(42);
    auto g = gamma(m, random_vector(rng, s.w_dim));
    linalg::QMatrix p = linalg::identity(m.dim());
    for (int k = 0; k <= m.rank(); ++k) p = p * g;
    EXPECT_TRUE(linalg::is_zero(p)) << s.name;
  }
}

TEST(RhoX, HomomorphismAndTranslation) {
  Rng rng(43);
  for (const auto& s : tube_systems()) {
    auto m = build_model(s);
    EXPECT_EQ(rho_x(m, zero_vector(s.w_dim)), linalg::identity(m.dim()));
    for (int i = 0; i < 3; ++i) {
      auto u = random_vector(rng, s.w_dim), v = random_vector(rng, s.w_dim);
      QVector uv(u.size());
      for (std::size_t k = 0; k < u.size(); ++k) uv[k] = u[k] + v[k];
      EXPECT_EQ(rho_x(m, u) * rho_x(m, v), rho_x(m, uv)) << s.name;
      EXPECT_EQ(rho_x(m, v) * std::span<const Rat>(embed(m, u)), embed(m, uv)) << s.name;
    }
  }
}

TEST(RhoY, ConjugateLowersDegreeAndFixesE0) {
  Rng rng(44);
  for (const auto& s : tube_systems()) {
    auto m = build_model(s);
    ASSERT_TRUE(m.j.has_value()) << s.name;
    auto w = random_vector(rng, s.w_dim);
    auto dy = d_rho_y(m, w);
    EXPECT_TRUE(is_zero(dy.col_vector(0)));
    for (std::size_t a = 0; a < dy.rows(); ++a)
      for (std::size_t b = 0; b < dy.cols(); ++b)
        if (sgn(dy(a, b)) != 0) EXPECT_EQ(m.block_of(a) + 1, m.block_of(b));
    EXPECT_EQ(rho_y(m, w).col_vector(0), unit_vector(m.dim(), 0));
  }
  EXPECT_THROW(d_rho_y(build_model(minors(2, 3)), zero_vector(6)), NotTubeModel);
}

TEST(Jordan, InverseTimesNorm) {
  auto s = minors(2);
  QVector u{Rat(2), Rat(1), Rat(1), Rat(1)};
  EXPECT_EQ(jordan_norm(s, u), 1);
  auto inv = jordan_inverse(s, u);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv, (QVector{Rat(1), Rat(-1), Rat(-1), Rat(2)}));
  EXPECT_FALSE(jordan_inverse(s, QVector{Rat(1), Rat(1), Rat(1), Rat(1)}).has_value());
}

TEST(BaseLocus, IsTheVmrt) {
  for (const auto& s : tube_systems()) {
    auto m = build_model(s);
    auto bl = base_locus(m);
    EXPECT_EQ(bl.l0, 2) << s.name;
    auto v = vmrt_of(s);
    Rng rng(45);
    for (int i = 0; i < 10; ++i) EXPECT_TRUE(bl.contains(zoo::sample_point(v, rng).point)) << s.name;
    EXPECT_FALSE(bl.contains(random_vector(rng, s.w_dim, 1000000000))) << s.name;
  }
  EXPECT_EQ(base_locus(build_model(linear(3))).l0, 2);
}

TEST(Lambda, ImageIsTheProlongationOfTheVmrt) {
  for (const auto& s : {minors(2), sym_minors(2), quadric(4), pfaffian(4)}) {
    auto m = build_model(s);
    auto lam = lambda_map(m);
    EXPECT_TRUE(lam.symmetric);
    EXPECT_TRUE(lam.injective());
    auto p = aut::prolong(aut::aut_from_samples(vmrt_of(s)));
    EXPECT_EQ(lam.image, p.tensors) << s.name;
  }
}

TEST(BracketCheck, DualPairAndCommutingPair) {
  auto m = build_model(minors(2));
  auto c = bracket_fixed_check(m, unit_vector(4, 0), unit_vector(4, 0), 4, 1);
  EXPECT_TRUE(c.ok());
  EXPECT_NE(c.c, 0);
  auto z = bracket_fixed_check(m, unit_vector(4, 0), zero_vector(4), 2, 1);
  EXPECT_TRUE(z.ok());
  EXPECT_EQ(z.c, 0);
}

TEST(PairAction, TrivialPairIsTheGradingAction) {
  auto m = build_model(minors(2));
  auto pa = pair_action(m, zero_vector(4), zero_vector(4));
  for (std::size_t i = 0; i < m.dim(); ++i) EXPECT_EQ(pa.h(i, i), -static_cast<long>(m.block_of(i)));
  EXPECT_TRUE(pa.source_euler);
  EXPECT_TRUE(pa.sink_euler);
  EXPECT_EQ(pa.source, unit_vector(6, 0));
}

TEST(PairAction, GenericPairMovesTheFixedPoints) {
  auto m = build_model(sym_minors(3));
  QVector u{Rat(1), Rat(2), Rat(0), Rat(-1), Rat(1), Rat(3)}, w{Rat(2), Rat(0), Rat(1), Rat(1), Rat(-2), Rat(1)};
  auto pa = pair_action(m, u, w);
  EXPECT_TRUE(pa.source_euler);
  EXPECT_TRUE(pa.sink_euler);
  EXPECT_NE(pa.source, unit_vector(m.dim(), 0));
  auto hs = pa.h * std::span<const Rat>(pa.source);
  EXPECT_TRUE(is_zero(hs));
}
