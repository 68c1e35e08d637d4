#pragma once

// Hot loops over grids and lattice point lists. The unqualified functions
// are the OpenMP versions used by the library; sjt::kernels::serial holds
// straightforward single-threaded references with identical contracts,
// kept for tests and benchmarks.
//
// Grid layout: d axes of P points each, x_a = -L + k_a * delta, flat index
// sum_a k_a P^(d-1-a) (first axis slowest).

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

#include "sjt/matrix.hpp"

namespace sjt::kernels {

struct GridShape {
  std::size_t dim = 1;
  std::size_t points = 0;  // per axis
  double L = 0.0;
  double delta = 0.0;

  std::size_t size() const;
};

/// out[k] = scale * exp(2 pi i w.x(k)) * in[k + shift] (periodic wrap).
void phase_shift(std::span<const cplx> in, std::span<cplx> out, const GridShape& g,
                 std::span<const long> shift, std::span<const double> w, cplx scale);

/// out[k] = in[k] * exp(pi i x(k)^t Q x(k)), Q real symmetric d x d.
void chirp(std::span<const cplx> in, std::span<cplx> out, const GridShape& g, const RMatrix& Q);

/// d = 1 only: out[k] = scale * delta * sum_j in[j] exp(-2 pi i s x_j x_k).
void fourier_1d(std::span<const cplx> in, std::span<cplx> out, const GridShape& g, double s,
                cplx scale);

/// out[k] = pref * exp(pi i (x^t A x + 2 b.x)) on the grid.
void gaussian_sample(std::span<cplx> out, const GridShape& g, const CMatrix& A,
                     std::span<const cplx> b, cplx pref);

/// sum over integer points p (row-major, dim entries each) of
/// pref * exp(pi i (p^t A p + 2 b.p)). Reduction is over fixed chunks in a
/// fixed order, so the result does not depend on the thread count.
cplx lattice_sum(std::span<const int> points, std::size_t dim, const CMatrix& A,
                 std::span<const cplx> b, cplx pref);

/// out[i] = f(i). f must be safe to call concurrently; the first exception
/// thrown by any call is rethrown after the loop.
void parallel_fill(std::span<cplx> out, const std::function<cplx(std::size_t)>& f);

inline constexpr std::size_t kLatticeChunk = 4096;

void set_threads(int n);
int max_threads();

namespace serial {
void phase_shift(std::span<const cplx> in, std::span<cplx> out, const GridShape& g,
                 std::span<const long> shift, std::span<const double> w, cplx scale);
void chirp(std::span<const cplx> in, std::span<cplx> out, const GridShape& g, const RMatrix& Q);
void fourier_1d(std::span<const cplx> in, std::span<cplx> out, const GridShape& g, double s,
                cplx scale);
void gaussian_sample(std::span<cplx> out, const GridShape& g, const CMatrix& A,
                     std::span<const cplx> b, cplx pref);
/// Plain left-to-right summation.
cplx lattice_sum(std::span<const int> points, std::size_t dim, const CMatrix& A,
                 std::span<const cplx> b, cplx pref);
void parallel_fill(std::span<cplx> out, const std::function<cplx(std::size_t)>& f);
}  // namespace serial

namespace detail {
void unflatten(std::size_t flat, const GridShape& g, std::size_t* k);
double coord(std::size_t k, const GridShape& g);
/// pi i (x^t A x + 2 b.x), x real.
cplx gaussian_exponent(const double* x, std::size_t d, const CMatrix& A, std::span<const cplx> b);
cplx lattice_term(const int* p, std::size_t d, const CMatrix& A, std::span<const cplx> b);
}  // namespace detail

}  // namespace sjt::kernels
