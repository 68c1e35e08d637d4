#include <exception>
#include <numbers>
#include <vector>

#include <omp.h>

#include "sjt/kernels.hpp"

namespace sjt::kernels {

using std::numbers::pi;

void set_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int max_threads() { return omp_get_max_threads(); }

void phase_shift(std::span<const cplx> in, std::span<cplx> out, const GridShape& g,
                 std::span<const long> shift, std::span<const double> w, cplx scale) {
  const long N = static_cast<long>(g.size());
  const std::size_t d = g.dim;
  const long P = static_cast<long>(g.points);
#pragma omp parallel
  {
    std::vector<std::size_t> k(d);
#pragma omp for schedule(static)
    for (long flat = 0; flat < N; ++flat) {
      detail::unflatten(static_cast<std::size_t>(flat), g, k.data());
      double phase = 0.0;
      std::size_t src = 0;
      for (std::size_t a = 0; a < d; ++a) {
        phase += w[a] * detail::coord(k[a], g);
        const long s = ((static_cast<long>(k[a]) + shift[a]) % P + P) % P;
        src = src * g.points + static_cast<std::size_t>(s);
      }
      out[flat] = scale * std::polar(1.0, 2.0 * pi * phase) * in[src];
    }
  }
}

void chirp(std::span<const cplx> in, std::span<cplx> out, const GridShape& g, const RMatrix& Q) {
  const long N = static_cast<long>(g.size());
  const std::size_t d = g.dim;
#pragma omp parallel
  {
    std::vector<std::size_t> k(d);
    std::vector<double> x(d);
#pragma omp for schedule(static)
    for (long flat = 0; flat < N; ++flat) {
      detail::unflatten(static_cast<std::size_t>(flat), g, k.data());
      for (std::size_t a = 0; a < d; ++a) x[a] = detail::coord(k[a], g);
      double q = 0.0;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) q += x[i] * Q(i, j) * x[j];
      out[flat] = in[flat] * std::polar(1.0, pi * q);
    }
  }
}

void fourier_1d(std::span<const cplx> in, std::span<cplx> out, const GridShape& g, double s,
                cplx scale) {
  const long P = static_cast<long>(g.points);
#pragma omp parallel for schedule(static)
  for (long k = 0; k < P; ++k) {
    const double xk = detail::coord(static_cast<std::size_t>(k), g);
    cplx acc = 0.0;
    for (long j = 0; j < P; ++j)
      acc += in[j] * std::polar(1.0, -2.0 * pi * s * detail::coord(static_cast<std::size_t>(j), g) * xk);
    out[k] = scale * g.delta * acc;
  }
}

void gaussian_sample(std::span<cplx> out, const GridShape& g, const CMatrix& A,
                     std::span<const cplx> b, cplx pref) {
  const long N = static_cast<long>(g.size());
  const std::size_t d = g.dim;
#pragma omp parallel
  {
    std::vector<std::size_t> k(d);
    std::vector<double> x(d);
#pragma omp for schedule(static)
    for (long flat = 0; flat < N; ++flat) {
      detail::unflatten(static_cast<std::size_t>(flat), g, k.data());
      for (std::size_t a = 0; a < d; ++a) x[a] = detail::coord(k[a], g);
      out[flat] = pref * std::exp(detail::gaussian_exponent(x.data(), d, A, b));
    }
  }
}

cplx lattice_sum(std::span<const int> points, std::size_t dim, const CMatrix& A,
                 std::span<const cplx> b, cplx pref) {
  const std::size_t count = dim ? points.size() / dim : 0;
  const long chunks = static_cast<long>((count + kLatticeChunk - 1) / kLatticeChunk);
  std::vector<cplx> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 1)
  for (long c = 0; c < chunks; ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kLatticeChunk;
    const std::size_t hi = std::min(count, lo + kLatticeChunk);
    cplx acc = 0.0;
    for (std::size_t t = lo; t < hi; ++t) acc += detail::lattice_term(points.data() + t * dim, dim, A, b);
    partial[static_cast<std::size_t>(c)] = acc;
  }
  cplx total = 0.0;
  for (const auto& p : partial) total += p;
  return pref * total;
}

void parallel_fill(std::span<cplx> out, const std::function<cplx(std::size_t)>& f) {
  const long N = static_cast<long>(out.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < N; ++i) {
    try {
      out[i] = f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(sjt_fill_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace sjt::kernels
