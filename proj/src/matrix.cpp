#include "sjt/matrix.hpp"

#include <numeric>

namespace sjt {

RMatrix real_part(const CMatrix& a) {
  RMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).real();
  return r;
}

RMatrix imag_part(const CMatrix& a) {
  RMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).imag();
  return r;
}

CMatrix make_complex(const RMatrix& re, const RMatrix& im) {
  if (re.rows() != im.rows() || re.cols() != im.cols())
    throw DimensionError("make_complex shapes " + re.shape() + " vs " + im.shape());
  CMatrix c(re.rows(), re.cols());
  for (std::size_t i = 0; i < re.rows(); ++i)
    for (std::size_t j = 0; j < re.cols(); ++j) c(i, j) = cplx(re(i, j), im(i, j));
  return c;
}

template <class T>
LUDecomposition<T> lu_decompose(const Matrix<T>& a) {
  if (!a.square()) throw DimensionError("LU of non-square " + a.shape());
  const std::size_t n = a.rows();
  LUDecomposition<T> d{a, std::vector<std::size_t>(n), 1, false};
  std::iota(d.perm.begin(), d.perm.end(), std::size_t{0});
  auto& lu = d.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        piv = i;
      }
    }
    if (best == 0.0) {
      d.singular = true;
      continue;
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      std::swap(d.perm[k], d.perm[piv]);
      d.sign = -d.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const T f = lu(i, k) / lu(k, k);
      lu(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return d;
}

template <class T>
T determinant(const Matrix<T>& a) {
  const auto d = lu_decompose(a);
  if (d.singular) return T{0};
  T det = T(static_cast<double>(d.sign));
  for (std::size_t i = 0; i < a.rows(); ++i) det *= d.lu(i, i);
  return det;
}

template <class T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve shapes " + a.shape() + " \\ " + b.shape());
  const auto d = lu_decompose(a);
  if (d.singular) throw SingularError("solve: singular matrix");
  const std::size_t n = a.rows();
  Matrix<T> x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      T s = b(d.perm[i], c);
      for (std::size_t j = 0; j < i; ++j) s -= d.lu(i, j) * x(j, c);
      x(i, c) = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      T s = x(ii, c);
      for (std::size_t j = ii + 1; j < n; ++j) s -= d.lu(ii, j) * x(j, c);
      x(ii, c) = s / d.lu(ii, ii);
    }
  }
  return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  return solve(a, Matrix<T>::identity(a.rows()));
}

template LUDecomposition<double> lu_decompose(const RMatrix&);
template LUDecomposition<cplx> lu_decompose(const CMatrix&);
template double determinant(const RMatrix&);
template cplx determinant(const CMatrix&);
template RMatrix solve(const RMatrix&, const RMatrix&);
template CMatrix solve(const CMatrix&, const CMatrix&);
template RMatrix inverse(const RMatrix&);
template CMatrix inverse(const CMatrix&);

RMatrix cholesky(const RMatrix& a) {
  if (!a.square()) throw DimensionError("cholesky of non-square " + a.shape());
  const std::size_t n = a.rows();
  RMatrix L(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = a(j, j);
    for (std::size_t k = 0; k < j; ++k) s -= L(j, k) * L(j, k);
    if (!(s > 0.0)) throw DomainError("cholesky: matrix not positive definite");
    L(j, j) = std::sqrt(s);
    for (std::size_t i = j + 1; i < n; ++i) {
      double t = a(i, j);
      for (std::size_t k = 0; k < j; ++k) t -= L(i, k) * L(j, k);
      L(i, j) = t / L(j, j);
    }
  }
  return L;
}

SymmetricEigen jacobi_eigen(const RMatrix& input) {
  if (!input.square()) throw DimensionError("eigenvalues of non-square " + input.shape());
  const std::size_t n = input.rows();
  RMatrix a = input;
  RMatrix v = RMatrix::identity(n);
  const double scale = std::max(max_abs(a), 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= 1e-17 * scale) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  SymmetricEigen out{std::vector<double>(n), RMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

namespace {

template <class T>
void require_symmetric(const Matrix<T>& a, const char* what) {
  if (!a.square()) throw DimensionError(std::string(what) + ": non-square " + a.shape());
  const double tol = 1e-12 * std::max(1.0, max_abs(a));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (std::abs(a(i, j) - a(j, i)) > tol)
        throw DomainError(std::string(what) + ": matrix is not symmetric");
}

template <class T>
Matrix<T> average_transpose(const Matrix<T>& a) {
  Matrix<T> s = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      const T v = (a(i, j) + a(j, i)) * 0.5;
      s(i, j) = v;
      s(j, i) = v;
    }
  return s;
}

}  // namespace

RealSymMatrix::RealSymMatrix(const RMatrix& a) {
  require_symmetric(a, "RealSymMatrix");
  a_ = average_transpose(a);
}

RealSymMatrix RealSymMatrix::symmetrized(const RMatrix& a) {
  if (!a.square()) throw DimensionError("symmetrized: non-square " + a.shape());
  RealSymMatrix s;
  s.a_ = average_transpose(a);
  return s;
}

ComplexSymMatrix::ComplexSymMatrix(const CMatrix& a) {
  require_symmetric(a, "ComplexSymMatrix");
  a_ = average_transpose(a);
}

ComplexSymMatrix ComplexSymMatrix::symmetrized(const CMatrix& a) {
  if (!a.square()) throw DimensionError("symmetrized: non-square " + a.shape());
  ComplexSymMatrix s;
  s.a_ = average_transpose(a);
  return s;
}

ComplexSymMatrix ComplexSymMatrix::scalar(std::size_t n, cplx s) {
  return ComplexSymMatrix(CMatrix::identity(n) * s);
}

bool is_positive_definite(const RealSymMatrix& s) {
  if (s.size() == 0) return true;
  const double tau = 1e-12 * max_abs(s.matrix());
  const auto eig = jacobi_eigen(s.matrix());
  return eig.values.front() > tau;
}

bool is_positive_definite(const RMatrix& s) {
  if (!s.square()) throw DimensionError("is_positive_definite: non-square " + s.shape());
  return is_positive_definite(RealSymMatrix(s));
}

cplx principal_sqrt(cplx z) {
  // std::sqrt honours the sign of a zero imaginary part; the branch rule
  // puts the whole negative axis on the arg = pi side.
  if (z.imag() == 0.0) z = cplx(z.real(), 0.0);
  return std::sqrt(z);
}

cplx principal_half_power(cplx z, int k) {
  if (z == cplx(0.0, 0.0)) {
    if (k < 0) throw DomainError("principal_half_power: zero to a negative power");
    return k == 0 ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
  }
  cplx base = principal_sqrt(z);
  unsigned e = static_cast<unsigned>(k < 0 ? -static_cast<long>(k) : k);
  cplx r(1.0, 0.0);
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return k < 0 ? cplx(1.0, 0.0) / r : r;
}

cplx det_symplectic_denominator(const RMatrix& C, const RMatrix& D, const ComplexSymMatrix& omega) {
  if (C.rows() != omega.size() || D.rows() != omega.size() || !C.square() || !D.square())
    throw DimensionError("det_symplectic_denominator shapes");
  const cplx det = determinant(C * omega.matrix() + D);
  if (std::abs(det) < kSingularTolerance)
    throw SingularError("det(C Omega + D) vanishes");
  return det;
}

}  // namespace sjt
