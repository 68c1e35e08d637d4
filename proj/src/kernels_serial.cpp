#include <numbers>
#include <vector>

#include "sjt/kernels.hpp"

namespace sjt::kernels {

using std::numbers::pi;

std::size_t GridShape::size() const {
  std::size_t s = 1;
  for (std::size_t a = 0; a < dim; ++a) s *= points;
  return s;
}

namespace detail {

void unflatten(std::size_t flat, const GridShape& g, std::size_t* k) {
  for (std::size_t a = g.dim; a-- > 0;) {
    k[a] = flat % g.points;
    flat /= g.points;
  }
}

double coord(std::size_t k, const GridShape& g) { return -g.L + static_cast<double>(k) * g.delta; }

cplx gaussian_exponent(const double* x, std::size_t d, const CMatrix& A, std::span<const cplx> b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    cplx row = 0.0;
    for (std::size_t j = 0; j < d; ++j) row += A(i, j) * x[j];
    s += x[i] * (row + 2.0 * b[i]);
  }
  return cplx(0.0, pi) * s;
}

cplx lattice_term(const int* p, std::size_t d, const CMatrix& A, std::span<const cplx> b) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    if (p[i] == 0) continue;
    const double pi_ = p[i];
    double rr = 0.0, ri = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      if (p[j] == 0) continue;
      rr += A(i, j).real() * p[j];
      ri += A(i, j).imag() * p[j];
    }
    re += pi_ * (rr + 2.0 * b[i].real());
    im += pi_ * (ri + 2.0 * b[i].imag());
  }
  // exp(pi i (re + i im))
  return std::exp(-pi * im) * cplx(std::cos(pi * re), std::sin(pi * re));
}

}  // namespace detail

namespace serial {

void phase_shift(std::span<const cplx> in, std::span<cplx> out, const GridShape& g,
                 std::span<const long> shift, std::span<const double> w, cplx scale) {
  const std::size_t N = g.size(), d = g.dim;
  const long P = static_cast<long>(g.points);
  std::vector<std::size_t> k(d);
  for (std::size_t flat = 0; flat < N; ++flat) {
    detail::unflatten(flat, g, k.data());
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

void chirp(std::span<const cplx> in, std::span<cplx> out, const GridShape& g, const RMatrix& Q) {
  const std::size_t N = g.size(), d = g.dim;
  std::vector<std::size_t> k(d);
  std::vector<double> x(d);
  for (std::size_t flat = 0; flat < N; ++flat) {
    detail::unflatten(flat, g, k.data());
    for (std::size_t a = 0; a < d; ++a) x[a] = detail::coord(k[a], g);
    double q = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) q += x[i] * Q(i, j) * x[j];
    out[flat] = in[flat] * std::polar(1.0, pi * q);
  }
}

void fourier_1d(std::span<const cplx> in, std::span<cplx> out, const GridShape& g, double s,
                cplx scale) {
  const std::size_t P = g.points;
  for (std::size_t k = 0; k < P; ++k) {
    const double xk = detail::coord(k, g);
    cplx acc = 0.0;
    for (std::size_t j = 0; j < P; ++j)
      acc += in[j] * std::polar(1.0, -2.0 * pi * s * detail::coord(j, g) * xk);
    out[k] = scale * g.delta * acc;
  }
}

void gaussian_sample(std::span<cplx> out, const GridShape& g, const CMatrix& A,
                     std::span<const cplx> b, cplx pref) {
  const std::size_t N = g.size(), d = g.dim;
  std::vector<std::size_t> k(d);
  std::vector<double> x(d);
  for (std::size_t flat = 0; flat < N; ++flat) {
    detail::unflatten(flat, g, k.data());
    for (std::size_t a = 0; a < d; ++a) x[a] = detail::coord(k[a], g);
    out[flat] = pref * std::exp(detail::gaussian_exponent(x.data(), d, A, b));
  }
}

cplx lattice_sum(std::span<const int> points, std::size_t dim, const CMatrix& A,
                 std::span<const cplx> b, cplx pref) {
  const std::size_t count = dim ? points.size() / dim : 0;
  cplx acc = 0.0;
  for (std::size_t t = 0; t < count; ++t) acc += detail::lattice_term(points.data() + t * dim, dim, A, b);
  return pref * acc;
}

void parallel_fill(std::span<cplx> out, const std::function<cplx(std::size_t)>& f) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(i);
}

}  // namespace serial

}  // namespace sjt::kernels
