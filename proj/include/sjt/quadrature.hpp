#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature, used as an independent oracle
// for the closed-form Gaussian integrals.

#include <functional>

#include "sjt/weil.hpp"

namespace sjt {

struct QuadResult {
  cplx value;
  double errorEstimate = 0.0;
  std::size_t evaluations = 0;
};

/// Bisects until |K15 - G7| <= tol on every accepted panel (tolerance is
/// split between halves) or maxDepth is reached.
QuadResult integrate_gk(const std::function<cplx(double)>& f, double a, double b, double tol,
                        int maxDepth = 40);

/// Nested 1-D rules over [a, b] x [c, d].
QuadResult integrate_gk_2d(const std::function<cplx(double, double)>& f, double a, double b, double c,
                           double d, double tol, int maxDepth = 40);

/// The Gaussian integral of (M, Omega, Z) over R^{m x n} by quadrature,
/// m n <= 2 (PreconditionError otherwise). The integrand is evaluated
/// pointwise; the box is centred on the peak of |integrand| and wide enough
/// that the discarded tails are below 1e-22 of the peak.
QuadResult quadrature_gaussian(const IndexMatrix& M, const ComplexSymMatrix& omega, const CMatrix& Z, double tol);

}  // namespace sjt
