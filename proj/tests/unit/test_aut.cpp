#include <gtest/gtest.h>

#include "tube/aut/aut.hpp"

using namespace tube;
using namespace tube::aut;

namespace {

struct Known {
  zoo::ParamVariety x;
  std::size_t aut;   // dim of the conformal/linear symmetry algebra of the cone
  std::size_t aut1;  // dim of the base IHSS
};

std::vector<Known> known() {
  return {{zoo::make_quadric(4), 7, 4},   {zoo::make_quadric(5), 11, 5},        {zoo::make_segre(2, 3), 12, 6},
          {zoo::make_veronese2(3), 9, 6}, {zoo::make_pluecker_rank2(5), 25, 10}, {zoo::make_sympl(2, 1), 7, 3}};
}

}  // namespace

TEST(AutFromSamples, MatchesClassicalSymmetryAlgebras) {
  for (const auto& k : known()) {
    auto g = aut_from_samples(linalg::PrimeField(), k.x, {});
    EXPECT_EQ(g.dim(), k.aut) << k.x.name;
    EXPECT_EQ(prolong(linalg::PrimeField(), g).dim(), k.aut1) << k.x.name;
  }
}

TEST(AutFromSamples, TwoPrimesAgree) {
  for (const auto& k : known()) {
    AutConfig cfg;
    cfg.seed = 5;
    auto g1 = aut_from_samples(linalg::PrimeField(linalg::kPrime1), k.x, cfg);
    auto g2 = aut_from_samples(linalg::PrimeField(linalg::kPrime2), k.x, cfg);
    EXPECT_EQ(g1.dim(), g2.dim()) << k.x.name;
    EXPECT_EQ(g1.dim_trace, g2.dim_trace) << k.x.name;
  }
}

TEST(AutFromSamples, RationalIsBracketClosedAndMatchesModP) {
  for (const auto& x : {zoo::make_quadric(4), zoo::make_segre(2, 2), zoo::make_veronese2(2)}) {
    auto g = aut_from_samples(x);
    EXPECT_EQ(g.dim(), aut_from_samples(linalg::PrimeField(), x, {}).dim());
    EXPECT_TRUE(is_bracket_closed(g)) << x.name;
    // every element is tangent at fresh points
    for (std::uint64_t s = 100; s < 103; ++s) {
      auto p = zoo::sample_point(x, s);
      auto t = tangent_space(x, p);
      for (std::size_t i = 0; i < g.dim(); ++i) EXPECT_TRUE(t.contains(g.element(i) * std::span<const Rat>(p.point)));
    }
  }
}

TEST(AutFromQuadrics, EqualsSamplingOnQuadricModels) {
  for (const auto& x : {zoo::make_quadric(5), zoo::make_segre(2, 3), zoo::make_veronese2(3), zoo::make_pluecker_rank2(5)}) {
    linalg::PrimeField f;
    auto a = aut_from_samples(f, x, {});
    auto b = aut_from_quadrics(f, x);
    EXPECT_EQ(a.basis, b.basis) << x.name;
    EXPECT_TRUE(is_bracket_closed(b)) << x.name;
  }
  EXPECT_THROW(aut_from_quadrics(linalg::PrimeField(), zoo::make_sympl(2, 1)), NoIdeal);
}

TEST(Prolong, SliceRouteEqualsAnnihilatorRoute) {
  for (const auto& x : {zoo::make_quadric(4), zoo::make_segre(2, 2), zoo::make_veronese2(2), zoo::make_quadric(3)}) {
    auto g = aut_from_samples(x);
    auto a = prolong(g), b = prolong_by_annihilator(g);
    EXPECT_EQ(a.tensors, b.tensors) << x.name;
  }
}

TEST(Prolong, FlowsStayTangent) {
  auto x = zoo::make_segre(2, 2);
  auto p = prolong(aut_from_samples(x));
  for (const auto& m : prolongation_maps(p)) EXPECT_TRUE(verify_flow(m, x, 5, 9));
}

TEST(ProlongK, SecondProlongationVanishesAndRunsAgree) {
  auto r = prolong_k(zoo::make_segre(2, 2), 2);
  EXPECT_EQ(r.dims, (std::vector<std::size_t>{7, 4, 0}));
  EXPECT_FALSE(r.primes_disagreed);
  for (const auto& run : r.runs) EXPECT_EQ(run.dims, r.dims);
  ProlongConfig fast;
  fast.certify_max_ambient = 4;
  auto big = prolong_k(zoo::make_pluecker_rank2(5), 1, fast);
  EXPECT_EQ(big.dims, (std::vector<std::size_t>{25, 10}));
  EXPECT_FALSE(big.certified_rational);
  ProlongConfig cfg;
  cfg.certify = true;
  EXPECT_TRUE(prolong_k(zoo::make_veronese2(3), 1, cfg).certified_rational);
}

TEST(AutFromSamples, StopsWithinTheSampleCap) {
  AutConfig cfg;
  cfg.max_samples = 2;
  EXPECT_THROW(aut_from_samples(linalg::PrimeField(), zoo::make_pluecker_rank2(5), cfg), NonStabilizing);
}
