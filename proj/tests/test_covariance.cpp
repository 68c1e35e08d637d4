#include <gtest/gtest.h>

#include "sjt/covariance.hpp"
#include "sjt/random.hpp"

namespace sjt {
namespace {

const cplx I(0.0, 1.0);

TEST(Covariance, RequiresPositiveIndex) {
  const SiegelJacobiPoint p(ComplexSymMatrix{{I}}, CMatrix{{0.0}});
  EXPECT_THROW(covariant_vector(IndexMatrix{{-1}}, p), DomainError);
}

TEST(AutomorphicFactor, TranslationIsOne) {
  rnd::Rng rng(401);
  const IndexMatrix M{{2, 1}, {1, 3}};
  for (int t = 0; t < 20; ++t) {
    const auto p = rnd::point(rng, 2, 2);
    const auto x = Generator::trans(rnd::symmetric(rng, 2, 2.0)).element(2, 2);
    const auto J = automorphic_factor_J(M, x, p);
    EXPECT_NEAR(std::abs(J.value - 1.0), 0.0, 1e-15);
    EXPECT_EQ(J.weightHalf, 2);
  }
}

TEST(AutomorphicFactor, HandComputedValues) {
  // sigma at (Omega, Z) = (i, z), M = [1]: J = e^{pi i z^2 / i} (i)^{1/2}
  const cplx z(0.3, 0.2);
  const SiegelJacobiPoint p(ComplexSymMatrix{{I}}, CMatrix{{z}});
  const auto J = automorphic_factor_J(IndexMatrix{{1}}, Generator::sigma().element(1, 1), p);
  const cplx want = std::exp(cplx(0, std::numbers::pi) * z * z / I) * std::polar(1.0, std::numbers::pi / 4);
  EXPECT_LE(std::abs(J.value - want), 1e-14);
  // g(-1), M = [1]: det(C Omega + D)^{1/2} = (-1)^{1/2} = i
  const auto Jg = automorphic_factor_J(IndexMatrix{{1}}, Generator::scale(RMatrix{{-1}}).element(1, 1), p);
  EXPECT_LE(std::abs(Jg.value - I), 1e-15);
}

TEST(Covariance, EachGeneratorExactInForm) {
  rnd::Rng rng(402);
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    const IndexMatrix M(rnd::spd(rng, m, 0.7, 0.5));
    for (int t = 0; t < 40; ++t) {
      const auto p = rnd::point(rng, n, m);
      const auto g = rnd::generator(rng, n, m, rnd::WordFlavor::Real);
      const auto r = verify_covariance(M, Word{g}, p);
      EXPECT_TRUE(r.singleGenerator);
      EXPECT_TRUE(r.pass) << g.to_string() << " err " << r.maxRelError;
      EXPECT_LE(r.maxRelError, kCovarianceTol);
    }
  }
}

TEST(Covariance, CompositeWordsUpToEighthRoot) {
  rnd::Rng rng(403);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 2, m = 1 + (t / 2) % 2;
    const IndexMatrix M(rnd::spd(rng, m, 0.7, 0.5));
    const auto p = rnd::point(rng, n, m);
    const auto w = rnd::word(rng, static_cast<std::size_t>(rnd::integer(rng, 2, 6)), n, m, rnd::WordFlavor::Real);
    const auto r = verify_covariance(M, w, p);
    EXPECT_FALSE(r.singleGenerator);
    EXPECT_TRUE(r.pass) << word_to_string(w) << " form " << r.diff.formError() << " s8 " << r.scalarEighthDefect;
  }
}

TEST(Covariance, NegativeDeterminantScalingCarriesSign) {
  // For det alpha < 0 and odd m the principal branch of det(alpha)^{m/2}
  // (in the action) and of det(C Omega + D)^{m/2} (in J) differ by -1.
  const SiegelJacobiPoint p(ComplexSymMatrix{{cplx(0.2, 1.1)}}, CMatrix{{cplx(0.1, -0.3)}});
  const auto r = verify_covariance(IndexMatrix{{1}}, Word{Generator::scale(RMatrix{{-1}})}, p);
  EXPECT_FALSE(r.pass);
  EXPECT_LE(std::abs(r.scalar + 1.0), 1e-14);
  EXPECT_LE(r.diff.formError(), 1e-15);
  // even m: no sign
  const SiegelJacobiPoint q(ComplexSymMatrix{{cplx(0.2, 1.1)}}, CMatrix{{0.1}, {cplx(0.0, 0.2)}});
  EXPECT_TRUE(verify_covariance(IndexMatrix{{1, 0}, {0, 2}}, Word{Generator::scale(RMatrix{{-1}})}, q).pass);
}

TEST(Cocycle, EighthRootDefect) {
  rnd::Rng rng(404);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 2, m = 1 + (t / 2) % 2;
    const IndexMatrix M(rnd::spd(rng, m, 0.7, 0.5));
    const auto p = rnd::point(rng, n, m);
    const auto x1 = word_element(rnd::word(rng, 2, n, m, rnd::WordFlavor::Real), n, m);
    const auto x2 = word_element(rnd::word(rng, 2, n, m, rnd::WordFlavor::Real), n, m);
    const auto c = cocycle_check(M, x1, x2, p);
    EXPECT_LE(c.eighthDefect, 1e-9);
  }
}

TEST(Cocycle, ExactForEvenRank) {
  // with m even the half power is an integer power: no branch ambiguity
  rnd::Rng rng(405);
  const IndexMatrix M{{2, 1}, {1, 2}};
  for (int t = 0; t < 50; ++t) {
    const auto p = rnd::point(rng, 1, 2);
    const auto x1 = word_element(rnd::word(rng, 3, 1, 2, rnd::WordFlavor::Real), 1, 2);
    const auto x2 = word_element(rnd::word(rng, 3, 1, 2, rnd::WordFlavor::Real), 1, 2);
    const auto c = cocycle_check(M, x1, x2, p);
    EXPECT_LE(std::abs(c.scalar - 1.0), 1e-10);
  }
}

}  // namespace
}  // namespace sjt
