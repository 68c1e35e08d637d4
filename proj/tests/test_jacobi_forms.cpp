#include <gtest/gtest.h>

#include "sjt/jacobi_forms.hpp"
#include "sjt/random.hpp"

namespace sjt {
namespace {

using std::numbers::pi;
const cplx I(0.0, 1.0);

// A smooth test function with no symmetry.
cplx probe(const SiegelJacobiPoint& p) {
  cplx s = 0.0;
  const CMatrix& Om = p.Omega().matrix();
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = 0; j < p.n(); ++j) s += Om(i, j) * static_cast<double>(i + 2 * j + 1);
  for (const auto& z : p.Z().data()) s += 0.7 * z * z;
  return std::exp(0.3 * I * s) + s;
}

TEST(Slash, ThetaParametersReproduceJM) {
  rnd::Rng rng(601);
  const IndexMatrix M{{2, 1}, {1, 2}};
  const auto params = theta_slash_parameters(M);
  EXPECT_EQ(params.weightHalf, 2);
  for (int t = 0; t < 30; ++t) {
    const auto p = rnd::point(rng, 1, 2);
    const auto x = word_element(rnd::word(rng, 3, 1, 2, rnd::WordFlavor::Real), 1, 2);
    const cplx a = automorphic_factor_Jk(params, x, p), b = automorphic_factor_J(M, x, p).value;
    EXPECT_LE(std::abs(a - b), 1e-12 * std::abs(b));
  }
}

TEST(Slash, CocycleIntegralWeight) {
  rnd::Rng rng(602);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 2, m = 1 + (t / 2) % 2;
    const SlashParameters params{2 * static_cast<int>(1 + t % 3), IndexMatrix(rnd::spd(rng, m, 0.5, 0.5))};
    const auto x = word_element(rnd::word(rng, static_cast<std::size_t>(rnd::integer(rng, 1, 4)), n, m, rnd::WordFlavor::Real), n, m);
    const auto y = word_element(rnd::word(rng, static_cast<std::size_t>(rnd::integer(rng, 1, 4)), n, m, rnd::WordFlavor::Real), n, m);
    const auto p = rnd::point(rng, n, m, {0.5, 0.3, 0.8, 0.3});
    const cplx lhs = slash(slash(probe, params, x), params, y)(p);
    const cplx rhs = slash(probe, params, jacobi_mul(x, y))(p);
    EXPECT_LE(std::abs(lhs - rhs), 1e-8 * std::max(1.0, std::abs(rhs))) << "t=" << t;
  }
}

TEST(Slash, CocycleHalfIntegralWeightUpToEighthRoot) {
  rnd::Rng rng(603);
  for (int t = 0; t < 40; ++t) {
    const SlashParameters params{1, IndexMatrix{{0.5}}};
    const auto x = word_element(rnd::word(rng, 3, 1, 1, rnd::WordFlavor::Real), 1, 1);
    const auto y = word_element(rnd::word(rng, 3, 1, 1, rnd::WordFlavor::Real), 1, 1);
    const auto p = rnd::point(rng, 1, 1);
    const cplx s = slash(slash(probe, params, x), params, y)(p) / slash(probe, params, jacobi_mul(x, y))(p);
    EXPECT_LE(std::abs(std::pow(s, 8) - 1.0), 1e-8);
  }
}

TEST(Slash, E8ThetaIsInvariant) {
  const IndexMatrix E8 = IndexMatrix::E8();
  const auto params = theta_slash_parameters(E8);
  const auto theta = theta_function(E8, ComplexSymMatrix{{I}}, CMatrix(8, 1), 1e-13);
  rnd::Rng rng(604);
  const auto p = rnd::point(rng, 1, 8, {0.3, 0.1, 1.0, 0.15});
  for (int t = 0; t < 6; ++t) {
    const auto g = rnd::generator(rng, 1, 8, rnd::WordFlavor::Integral);
    const cplx lhs = slash(theta, params, g.element(1, 8))(p);
    const cplx rhs = theta(p);
    EXPECT_LE(std::abs(lhs - rhs), 1e-9 * std::abs(rhs)) << g.to_string();
  }
}

TEST(Fourier, PlantedCoefficients) {
  struct Term {
    double T;
    double R0, R1;
    cplx c;
  };
  const std::vector<Term> planted{{0, 0, 0, 1.0}, {1, 1, -1, cplx(0.5, -0.25)}, {2, 0, 2, cplx(-0.125, 0.75)},
                                  {3, -2, 1, 0.0625}, {1, 0, 0, cplx(0, 2)}};
  const JacobiFunction f = [&](const SiegelJacobiPoint& p) {
    const cplx tau = p.Omega()(0, 0), z0 = p.Z()(0, 0), z1 = p.Z()(1, 0);
    cplx s = 0.0;
    for (const auto& t : planted) s += t.c * std::exp(2.0 * pi * I * (t.T * tau + t.R0 * z0 + t.R1 * z1));
    return s;
  };
  std::vector<FourierIndex> box;
  for (int T = 0; T <= 3; ++T)
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) box.push_back({RealSymMatrix{{double(T)}}, RMatrix{{double(a), double(b)}}, 1});
  // a finite sum needs no damping; sampling near the real axis keeps the
  // rescaling factor e^{2 pi (T Im tau + R Im z)} close to 1
  FourierOptions opt;
  opt.samples = 16;
  opt.imOmega = 0.05;
  opt.imZ = 0.0;
  const auto out = fourier_coefficients(f, 1, 2, {2, IndexMatrix{{1, 0}, {0, 1}}}, box, opt);
  ASSERT_EQ(out.size(), box.size());
  for (const auto& c : out) {
    cplx want = 0.0;
    for (const auto& t : planted)
      if (t.T == c.index.T(0, 0) && t.R0 == c.index.R(0, 0) && t.R1 == c.index.R(0, 1)) want = t.c;
    EXPECT_LE(std::abs(c.value - want), 1e-10);
  }
}

TEST(Fourier, ThetaCoefficientsAreSingular) {
  // Theta_[2](tau, z) = sum q^{xi^2} zeta^{2 xi}; index 1 after halving.
  const IndexMatrix M{{2}};
  const auto params = theta_slash_parameters(M);
  FourierOptions opt;
  opt.samples = 32;
  opt.imOmega = 0.25;
  opt.imZ = 0.0;
  const auto theta = theta_function(M, ComplexSymMatrix{{0.25 * I}}, CMatrix{{0.0}}, 1e-14);
  std::vector<FourierIndex> box;
  for (int T = 0; T <= 4; ++T)
    for (int R = -4; R <= 4; ++R) box.push_back({RealSymMatrix{{double(T)}}, RMatrix{{double(R)}}, 1});
  const auto out = fourier_coefficients(theta, 1, 1, params, box, opt);
  for (const auto& c : out) {
    const double T = c.index.T(0, 0), R = c.index.R(0, 0);
    const bool term = std::abs(R) <= 4 && std::fmod(R, 2.0) == 0.0 && T == (R / 2) * (R / 2);
    EXPECT_LE(std::abs(c.value - (term ? 1.0 : 0.0)), 1e-9) << "T=" << T << " R=" << R;
    if (std::abs(c.value) > 0.5) {
      EXPECT_TRUE(block_positivity(c.index.T, c.index.R, params.index, 1, BlockMode::Semi));
      EXPECT_TRUE(block_positivity(c.index.T, c.index.R, params.index, 1, BlockMode::Singular));
    }
  }
}

TEST(Fourier, SampleCap) {
  FourierOptions opt;
  opt.samples = 64;
  opt.sampleCap = 1000;
  EXPECT_THROW(fourier_coefficients(probe, 1, 1, {2, IndexMatrix{{1}}}, {}, opt), ResourceError);
  EXPECT_THROW(fourier_coefficients(probe, 2, 1, {2, IndexMatrix{{1}}}, {}, {}), PreconditionError);
}

TEST(Fourier, AliasToleranceEnforced) {
  // with 8 samples a T = 4 term aliases onto T = 0 in the half-rate transform only
  const JacobiFunction f = [](const SiegelJacobiPoint& p) {
    return 1.0 + std::exp(2.0 * pi * I * 4.0 * p.Omega()(0, 0));
  };
  FourierOptions opt;
  opt.samples = 8;
  opt.imOmega = 0.01;
  opt.tolerance = 1e-6;
  EXPECT_THROW(fourier_coefficients(f, 1, 1, {2, IndexMatrix{{1}}}, {{RealSymMatrix{{0}}, RMatrix{{0}}, 1}}, opt),
               ResourceError);
}

TEST(BlockPositivity, Modes) {
  const IndexMatrix M{{1}};
  EXPECT_TRUE(block_positivity(RealSymMatrix{{1}}, RMatrix{{2}}, M, 1, BlockMode::Singular));
  EXPECT_TRUE(block_positivity(RealSymMatrix{{1}}, RMatrix{{2}}, M, 1, BlockMode::Semi));
  EXPECT_FALSE(block_positivity(RealSymMatrix{{1}}, RMatrix{{2}}, M, 1, BlockMode::Strict));
  EXPECT_TRUE(block_positivity(RealSymMatrix{{2}}, RMatrix{{1}}, M, 1, BlockMode::Strict));
  EXPECT_FALSE(block_positivity(RealSymMatrix{{0.5}}, RMatrix{{2}}, M, 1, BlockMode::Semi));
  // lambda scales T
  EXPECT_TRUE(block_positivity(RealSymMatrix{{2}}, RMatrix{{2}}, M, 2, BlockMode::Singular));
  EXPECT_FALSE(block_positivity(RealSymMatrix{{1}}, RMatrix{{2}}, M, 2, BlockMode::Semi));
  EXPECT_THROW(block_positivity(RealSymMatrix{{1}}, RMatrix{{1, 1}}, M, 1, BlockMode::Semi), DimensionError);
}

}  // namespace
}  // namespace sjt
