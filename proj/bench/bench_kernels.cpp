// Serial reference vs OpenMP kernels. Thread count is the benchmark argument
// for the OpenMP variants.

#include <benchmark/benchmark.h>

#include <vector>

#include "sjt/kernels.hpp"
#include "sjt/theta.hpp"

namespace {

using namespace sjt;
using kernels::GridShape;

GridShape grid(std::size_t dim, std::size_t points) { return {dim, points, 8.0, 16.0 / static_cast<double>(points)}; }

std::vector<cplx> ramp(std::size_t n) {
  std::vector<cplx> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = cplx(std::cos(0.01 * k), std::sin(0.003 * k));
  return v;
}

// E8 lattice points of norm <= 12 at Omega = i, Z = 0
struct E8Points {
  EllipsoidPoints pts;
  CMatrix A;
  std::vector<cplx> b;
  E8Points() : A(8, 8), b(8) {
    const RMatrix Y = IndexMatrix::E8().matrix();
    const std::vector<double> c(8, 0.0);
    pts = *enumerate_ellipsoid(Y, c, 12.0);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) A(i, j) = cplx(0.0, Y(i, j));
    for (std::size_t i = 0; i < 8; ++i) b[i] = cplx(0.01 * i, 0.02);
  }
};

const E8Points& e8() {
  static const E8Points p;
  return p;
}

template <bool Serial>
void BM_lattice_sum(benchmark::State& state) {
  const auto& p = e8();
  if (!Serial) kernels::set_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const cplx s = Serial ? kernels::serial::lattice_sum(p.pts.points, 8, p.A, p.b, 1.0)
                          : kernels::lattice_sum(p.pts.points, 8, p.A, p.b, 1.0);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(p.pts.count()));
}

template <bool Serial>
void BM_fourier_1d(benchmark::State& state) {
  const GridShape g = grid(1, 257);
  const auto in = ramp(g.size());
  std::vector<cplx> out(g.size());
  if (!Serial) kernels::set_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    if (Serial)
      kernels::serial::fourier_1d(in, out, g, 1.0, 1.0);
    else
      kernels::fourier_1d(in, out, g, 1.0, 1.0);
    benchmark::ClobberMemory();
  }
}

template <bool Serial>
void BM_gaussian_sample(benchmark::State& state) {
  const GridShape g = grid(2, 257);
  const CMatrix A{{cplx(0.1, 1.0), cplx(0.2, 0.1)}, {cplx(0.2, 0.1), cplx(-0.3, 0.8)}};
  const std::vector<cplx> b{cplx(0.1, 0.2), cplx(-0.3, 0.1)};
  std::vector<cplx> out(g.size());
  if (!Serial) kernels::set_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    if (Serial)
      kernels::serial::gaussian_sample(out, g, A, b, 1.0);
    else
      kernels::gaussian_sample(out, g, A, b, 1.0);
    benchmark::ClobberMemory();
  }
}

template <bool Serial>
void BM_phase_shift(benchmark::State& state) {
  const GridShape g = grid(2, 257);
  const auto in = ramp(g.size());
  std::vector<cplx> out(g.size());
  const std::vector<long> shift{3, -5};
  const std::vector<double> w{0.25, -0.5};
  if (!Serial) kernels::set_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    if (Serial)
      kernels::serial::phase_shift(in, out, g, shift, w, 1.0);
    else
      kernels::phase_shift(in, out, g, shift, w, 1.0);
    benchmark::ClobberMemory();
  }
}

}  // namespace

BENCHMARK(BM_lattice_sum<true>)->Name("lattice_sum/serial");
BENCHMARK(BM_lattice_sum<false>)->Name("lattice_sum/omp")->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(BM_fourier_1d<true>)->Name("fourier_1d/serial");
BENCHMARK(BM_fourier_1d<false>)->Name("fourier_1d/omp")->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(BM_gaussian_sample<true>)->Name("gaussian_sample/serial");
BENCHMARK(BM_gaussian_sample<false>)->Name("gaussian_sample/omp")->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(BM_phase_shift<true>)->Name("phase_shift/serial");
BENCHMARK(BM_phase_shift<false>)->Name("phase_shift/omp")->Arg(1)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
