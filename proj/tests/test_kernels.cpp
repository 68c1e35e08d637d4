#include <gtest/gtest.h>

#include "sjt/kernels.hpp"
#include "sjt/random.hpp"

namespace sjt {
namespace {

using kernels::GridShape;

std::vector<cplx> random_values(rnd::Rng& rng, std::size_t n) {
  std::vector<cplx> v(n);
  for (auto& x : v) x = {rnd::uniform(rng, -1, 1), rnd::uniform(rng, -1, 1)};
  return v;
}

class KernelAgreement : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override { kernels::set_threads(GetParam()); }
};

TEST_P(KernelAgreement, PhaseShiftAndChirp) {
  rnd::Rng rng(701);
  const GridShape g{2, 32, 2.0, 0.125};
  const auto in = random_values(rng, g.size());
  std::vector<cplx> a(g.size()), b(g.size());
  const std::vector<long> shift{3, -5};
  const std::vector<double> w{0.3, -0.7};
  kernels::phase_shift(in, a, g, shift, w, cplx(0.6, 0.8));
  kernels::serial::phase_shift(in, b, g, shift, w, cplx(0.6, 0.8));
  EXPECT_EQ(a, b);
  const RMatrix Q{{1.0, 0.5}, {0.5, -2.0}};
  kernels::chirp(in, a, g, Q);
  kernels::serial::chirp(in, b, g, Q);
  EXPECT_EQ(a, b);
}

TEST_P(KernelAgreement, FourierAndSampling) {
  rnd::Rng rng(702);
  const GridShape g{1, 128, 4.0, 1.0 / 16.0};
  const auto in = random_values(rng, g.size());
  std::vector<cplx> a(g.size()), b(g.size());
  kernels::fourier_1d(in, a, g, 1.0, 1.0);
  kernels::serial::fourier_1d(in, b, g, 1.0, 1.0);
  EXPECT_EQ(a, b);
  const CMatrix A{{cplx(0.3, 1.0)}};
  const std::vector<cplx> bv{cplx(0.1, 0.2)};
  kernels::gaussian_sample(a, g, A, bv, 2.0);
  kernels::serial::gaussian_sample(b, g, A, bv, 2.0);
  EXPECT_EQ(a, b);
}

TEST_P(KernelAgreement, ParallelFillPropagatesErrors) {
  std::vector<cplx> out(1000);
  kernels::parallel_fill(out, [](std::size_t i) { return cplx(static_cast<double>(i), 0.0); });
  EXPECT_EQ(out[999], cplx(999.0, 0.0));
  EXPECT_THROW(kernels::parallel_fill(out,
                                      [](std::size_t i) -> cplx {
                                        if (i == 500) throw DomainError("boom");
                                        return 0.0;
                                      }),
               DomainError);
}

INSTANTIATE_TEST_SUITE_P(Threads, KernelAgreement, ::testing::Values(1, 2, 4));

}  // namespace
}  // namespace sjt
