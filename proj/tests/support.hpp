#pragma once

// Independent oracles shared by the unit and acceptance tests.

#include <cmath>
#include <numbers>
#include <vector>

#include "sjt/quadrature.hpp"
#include "sjt/weil.hpp"

namespace sjt::testing {

using std::numbers::pi;

/// Characteristic polynomial of an integer matrix by Faddeev-LeVerrier,
/// exact in 64-bit integers: det(tI - a) = sum c[k] t^{d-k}, c[0] = 1.
inline std::vector<long long> charpoly(const RMatrix& a) {
  const std::size_t d = a.rows();
  std::vector<std::vector<long long>> A(d, std::vector<long long>(d)), Mk(d, std::vector<long long>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) A[i][j] = std::llround(a(i, j));
  std::vector<long long> c(d + 1, 0);
  c[0] = 1;
  for (std::size_t k = 1; k <= d; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I, with M_0 = 0
    std::vector<std::vector<long long>> next(d, std::vector<long long>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l) next[i][j] += A[i][l] * Mk[l][j];
      next[i][i] += c[k - 1];
    }
    Mk = next;
    long long tr = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t l = 0; l < d; ++l) tr += A[i][l] * Mk[l][i];
    c[k] = -tr / static_cast<long long>(k);
  }
  return c;
}

/// A symmetric integer matrix is positive definite iff its characteristic
/// polynomial has strictly alternating signs.
inline bool integer_pd(const RMatrix& a) {
  const auto c = charpoly(a);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const long long want = (k % 2 == 0) ? 1 : -1;
    if (c[k] == 0 || (c[k] > 0) != (want > 0)) return false;
  }
  return true;
}

/// exp(pi i tr(M (x Omega x^t + 2 x Z^t))) written out entrywise.
inline cplx gaussian_integrand(const RMatrix& M, const CMatrix& omega, const CMatrix& Z, const RMatrix& x) {
  const std::size_t m = x.rows(), n = x.cols();
  cplx s = 0.0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t i = 0; i < n; ++i) {
        cplx inner = 2.0 * Z(b, i);
        for (std::size_t j = 0; j < n; ++j) inner += omega(i, j) * x(b, j);
        s += M(a, b) * x(a, i) * inner;
      }
  return std::exp(cplx(0.0, pi) * s);
}

/// Theta_M(Omega, Z) for n = 1 by summing over the box |xi_k| <= B.
inline cplx box_theta(const RMatrix& M, cplx omega, const CMatrix& Z, int B) {
  const std::size_t m = M.rows();
  std::vector<int> xi(m, -B);
  cplx total = 0.0;
  while (true) {
    RMatrix x(m, 1);
    for (std::size_t a = 0; a < m; ++a) x(a, 0) = xi[a];
    total += gaussian_integrand(M, CMatrix{{omega}}, Z, x);
    std::size_t a = 0;
    while (a < m && ++xi[a] > B) xi[a++] = -B;
    if (a == m) break;
  }
  return total;
}

}  // namespace sjt::testing
