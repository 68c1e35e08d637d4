#include <gtest/gtest.h>

#include "sjt/random.hpp"
#include "sjt/weil.hpp"

namespace sjt {
namespace {

// Random function on the grid: a sum of a few shifted bumps with complex weights.
// The bumps sit well inside the box so that shifts of at most 1 never wrap
// non-negligible values around the periodic boundary.
GridFunction random_function(rnd::Rng& rng, const GridSpec& g) {
  GridFunction f(g);
  for (int b = 0; b < 3; ++b) {
    RMatrix c = rnd::matrix(rng, g.m(), g.n(), 1.0);
    const cplx w(rnd::uniform(rng, -1, 1), rnd::uniform(rng, -1, 1));
    for (std::size_t k = 0; k < g.size(); ++k) {
      const RMatrix x = g.point(k) - c;
      double r2 = 0.0;
      for (double v : x.data()) r2 += v * v;
      f.values()[k] += w * std::exp(-2.0 * r2);
    }
  }
  return f;
}

HeisenbergElement grid_element(rnd::Rng& rng, const GridSpec& g) {
  RMatrix lambda(g.m(), g.n());
  for (auto& v : lambda.data()) v = static_cast<double>(rnd::integer(rng, -16, 16)) * g.delta();
  RMatrix mu = rnd::matrix(rng, g.m(), g.n(), 1.0);
  RMatrix kappa = rnd::symmetric(rng, g.m(), 1.0).matrix() - mu * lambda.transpose();
  return {std::move(lambda), std::move(mu), std::move(kappa)};
}

TEST(GridSpec, Validation) {
  EXPECT_THROW(GridSpec(1, 1, 1.0, 0.3), PreconditionError);
  EXPECT_THROW(GridSpec(1, 1, -1.0, 0.5), PreconditionError);
  const GridSpec g(2, 1, 1.0, 0.25);
  EXPECT_EQ(g.points_per_axis(), 8u);
  EXPECT_EQ(g.size(), 64u);
  // first axis varies slowest
  EXPECT_EQ(g.point(1), (RMatrix{{-1.0}, {-0.75}}));
  EXPECT_EQ(g.point(8), (RMatrix{{-0.75}, {-1.0}}));
}

TEST(Schrodinger, CharacterMustBeNonzero) {
  EXPECT_THROW(CentralCharacter(RealSymMatrix{{0}}), PreconditionError);
}

TEST(Schrodinger, OffGridShiftRejected) {
  const GridSpec g(1, 1, 2.0, 0.25);
  const HeisenbergElement h(RMatrix{{0.1}}, RMatrix{{0}}, RMatrix{{0}});
  EXPECT_THROW(schrodinger_apply(CentralCharacter(RealSymMatrix{{1}}), h, GridFunction(g)), PreconditionError);
}

TEST(Schrodinger, HomomorphismAndUnitarity) {
  rnd::Rng rng(201);
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}}) {
    const GridSpec g(m, n);
    const CentralCharacter c(rnd::symmetric(rng, m, 1.5));
    for (int t = 0; t < 10; ++t) {
      const auto f = random_function(rng, g);
      const auto h1 = grid_element(rng, g), h2 = grid_element(rng, g);
      const auto lhs = schrodinger_apply(c, heisenberg_mul(h1, h2), f);
      const auto rhs = schrodinger_apply(c, h1, schrodinger_apply(c, h2, f));
      EXPECT_LE((lhs - rhs).norm() / f.norm(), 1e-10);
      EXPECT_NEAR(lhs.norm(), f.norm(), 1e-12 * f.norm());
    }
  }
}

TEST(Schrodinger, CentreActsByCharacter) {
  const GridSpec g(1, 1, 2.0, 0.25);
  rnd::Rng rng(202);
  const auto f = random_function(rng, g);
  const HeisenbergElement z(RMatrix{{0}}, RMatrix{{0}}, RMatrix{{0.3}});
  const auto out = schrodinger_apply(CentralCharacter(RealSymMatrix{{2}}), z, f);
  const cplx chi = std::exp(cplx(0.0, std::numbers::pi * 2 * 0.3));
  EXPECT_LE((out - chi * f).norm(), 1e-14);
}

TEST(Parity, IndexMap) {
  const GridSpec g(1, 1, 1.0, 0.5);  // points -1, -0.5, 0, 0.5
  GridFunction f(g, {1.0, 2.0, 3.0, 4.0});
  const auto p = parity(f);
  EXPECT_EQ(std::vector<cplx>(p.values().begin(), p.values().end()), (std::vector<cplx>{1.0, 4.0, 3.0, 2.0}));
}

TEST(Parity, CommutesWithSymplecticGenerators) {
  const GridSpec g(1, 1);
  const IndexMatrix M{{1}};
  rnd::Rng rng(203);
  for (int t = 0; t < 5; ++t) {
    const auto pt = rnd::point(rng, 1, 1, {1.0, 0.3, 0.8, 0.3});
    const GaussianVector v(1.0, pt.Omega(), pt.Z(), M);
    const auto f = sample(v, g).values;
    const RealSymMatrix b = rnd::symmetric(rng, 1, 1.0);
    EXPECT_LE((parity(numeric_tb(M, b, f)) - numeric_tb(M, b, parity(f))).norm(), 1e-12 * f.norm());
    const RMatrix a{{rnd::uniform(rng, 0.7, 1.4)}};
    EXPECT_LE((parity(numeric_galpha(a, f)) - numeric_galpha(a, parity(f))).norm(), 1e-10 * f.norm());
    EXPECT_LE((parity(numeric_sigma(M, f)) - numeric_sigma(M, parity(f))).norm(), 1e-10 * f.norm());
  }
}

}  // namespace
}  // namespace sjt
