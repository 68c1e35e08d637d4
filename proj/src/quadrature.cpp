#include "sjt/quadrature.hpp"

#include <array>
#include <numbers>

#include "sjt/kernels.hpp"

namespace sjt {

namespace {

// Kronrod nodes on [-1, 1] (non-negative half); odd indices are the Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

void panel(const std::function<cplx(double)>& f, double a, double b, cplx& k15, cplx& g7) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const cplx fc = f(c);
  k15 = kKronrod[7] * fc;
  g7 = kGauss[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const cplx s = f(c - h * kNodes[i]) + f(c + h * kNodes[i]);
    k15 += kKronrod[i] * s;
    if (i % 2 == 1) g7 += kGauss[i / 2] * s;
  }
  k15 *= h;
  g7 *= h;
}

void adapt(const std::function<cplx(double)>& f, double a, double b, double tol, int depth, QuadResult& r) {
  cplx k15, g7;
  panel(f, a, b, k15, g7);
  r.evaluations += 15;
  const double err = std::abs(k15 - g7);
  if (err <= tol || depth <= 0) {
    r.value += k15;
    r.errorEstimate += err;
    return;
  }
  const double m = 0.5 * (a + b);
  adapt(f, a, m, 0.5 * tol, depth - 1, r);
  adapt(f, m, b, 0.5 * tol, depth - 1, r);
}

}  // namespace

QuadResult integrate_gk(const std::function<cplx(double)>& f, double a, double b, double tol, int maxDepth) {
  QuadResult r{0.0, 0.0, 0};
  adapt(f, a, b, tol, maxDepth, r);
  return r;
}

QuadResult integrate_gk_2d(const std::function<cplx(double, double)>& f, double a, double b, double c,
                           double d, double tol, int maxDepth) {
  std::size_t evals = 0;
  double innerErr = 0.0;
  const double innerTol = tol / (4.0 * std::max(1.0, b - a));
  auto outer = [&](double x) {
    const auto in = integrate_gk([&](double y) { return f(x, y); }, c, d, innerTol, maxDepth);
    evals += in.evaluations;
    innerErr = std::max(innerErr, in.errorEstimate);
    return in.value;
  };
  QuadResult r = integrate_gk(outer, a, b, 0.5 * tol, maxDepth);
  r.evaluations = evals;
  r.errorEstimate += innerErr * (b - a);
  return r;
}

QuadResult quadrature_gaussian(const IndexMatrix& M, const ComplexSymMatrix& omega, const CMatrix& Z, double tol) {
  const std::size_t d = Z.rows() * Z.cols();
  if (d == 0 || d > 2) throw PreconditionError("quadrature_gaussian: needs m n <= 2");
  const GaussianForm f = make_form(M.matrix(), omega.matrix(), Z, 1.0);
  const RMatrix Y = imag_part(f.A);
  RMatrix beta(d, 1);
  for (std::size_t k = 0; k < d; ++k) beta(k, 0) = f.b[k].imag();
  const RMatrix c = solve(Y, beta);
  const double w = std::sqrt(51.0 / (std::numbers::pi * jacobi_eigen(Y).values.front()));
  auto at = [&](const double* x) { return std::exp(kernels::detail::gaussian_exponent(x, d, f.A, f.b)); };
  if (d == 1)
    return integrate_gk([&](double t) { return at(&t); }, -c(0, 0) - w, -c(0, 0) + w, tol);
  return integrate_gk_2d(
      [&](double s, double t) {
        const double x[2] = {s, t};
        return at(x);
      },
      -c(0, 0) - w, -c(0, 0) + w, -c(1, 0) - w, -c(1, 0) + w, tol);
}

}  // namespace sjt
