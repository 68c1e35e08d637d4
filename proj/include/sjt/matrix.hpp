#pragma once

// Small dense real/complex matrices and the handful of linear-algebra
// routines the rest of the library needs. Sizes stay below ~16x16, so
// everything is dense, row-major and allocation-per-value.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sjt/errors.hpp"

namespace sjt {

using cplx = std::complex<double>;

template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = T{1};
    return I;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
    if (i0 + r > rows_ || j0 + c > cols_) throw DimensionError("block out of range");
    Matrix b(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
    return b;
  }

  void set_block(std::size_t i0, std::size_t j0, const Matrix& b) {
    if (i0 + b.rows() > rows_ || j0 + b.cols() > cols_) throw DimensionError("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "+=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "-=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("matrix product " + a.shape() + " * " + b.shape());
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError(std::string("shape mismatch in ") + op + ": " + shape() + " vs " +
                           o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RMatrix = Matrix<double>;
using CMatrix = Matrix<cplx>;

inline CMatrix to_complex(const RMatrix& a) {
  CMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  return c;
}
inline CMatrix operator*(const CMatrix& a, const RMatrix& b) { return a * to_complex(b); }
inline CMatrix operator*(const RMatrix& a, const CMatrix& b) { return to_complex(a) * b; }
inline CMatrix operator+(const CMatrix& a, const RMatrix& b) { return a + to_complex(b); }
inline CMatrix operator+(const RMatrix& a, const CMatrix& b) { return to_complex(a) + b; }

RMatrix real_part(const CMatrix& a);
RMatrix imag_part(const CMatrix& a);
CMatrix make_complex(const RMatrix& re, const RMatrix& im);

template <class T>
T trace(const Matrix<T>& a) {
  if (!a.square()) throw DimensionError("trace of non-square " + a.shape());
  T s{};
  for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

/// Largest entry modulus.
template <class T>
double max_abs(const Matrix<T>& a) {
  double m = 0.0;
  for (const auto& v : a.data()) m = std::max(m, static_cast<double>(std::abs(v)));
  return m;
}

template <class T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("max_abs_diff shapes");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    m = std::max(m, static_cast<double>(std::abs(a.data()[k] - b.data()[k])));
  return m;
}

/// Kronecker product, (a kron b)((i,k),(j,l)) = a(i,j) b(k,l).
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

/// Row-major flattening: entry (a, j) of an m x n matrix goes to a*n + j.
template <class T>
std::vector<T> vec(const Matrix<T>& a) {
  return {a.data().begin(), a.data().end()};
}

// ---------------------------------------------------------------------------
// Dense factorizations

template <class T>
struct LUDecomposition {
  Matrix<T> lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  bool singular = false;
};

/// LU with partial pivoting. Never throws on singular input; check `singular`.
template <class T>
LUDecomposition<T> lu_decompose(const Matrix<T>& a);

template <class T>
T determinant(const Matrix<T>& a);

/// Solves a x = b. Throws SingularError on an exactly singular pivot.
template <class T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b);

template <class T>
Matrix<T> inverse(const Matrix<T>& a);

/// Lower-triangular L with a = L L^t. Throws DomainError if a is not
/// (numerically) positive definite.
RMatrix cholesky(const RMatrix& a);

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  RMatrix vectors;             // column k belongs to values[k]
};

/// Cyclic Jacobi rotations; deterministic for a given input.
SymmetricEigen jacobi_eigen(const RMatrix& a);

// ---------------------------------------------------------------------------
// Symmetric value types

/// Real symmetric k x k matrix. Symmetry is exact: the constructor accepts a
/// matrix that is symmetric to 1e-12 (relative) and stores (a + a^t)/2.
class RealSymMatrix {
 public:
  RealSymMatrix() = default;
  explicit RealSymMatrix(const RMatrix& a);
  RealSymMatrix(std::initializer_list<std::initializer_list<double>> init)
      : RealSymMatrix(RMatrix(init)) {}

  /// (a + a^t)/2 without a tolerance check.
  static RealSymMatrix symmetrized(const RMatrix& a);
  static RealSymMatrix zero(std::size_t k) { return RealSymMatrix(RMatrix(k, k)); }
  static RealSymMatrix identity(std::size_t k) { return RealSymMatrix(RMatrix::identity(k)); }

  std::size_t size() const noexcept { return a_.rows(); }
  const RMatrix& matrix() const noexcept { return a_; }
  double operator()(std::size_t i, std::size_t j) const { return a_(i, j); }

  friend bool operator==(const RealSymMatrix&, const RealSymMatrix&) = default;

 private:
  RMatrix a_;
};

/// Complex symmetric (not Hermitian) n x n matrix, e.g. a point of H_n.
class ComplexSymMatrix {
 public:
  ComplexSymMatrix() = default;
  explicit ComplexSymMatrix(const CMatrix& a);
  ComplexSymMatrix(std::initializer_list<std::initializer_list<cplx>> init)
      : ComplexSymMatrix(CMatrix(init)) {}

  /// (a + a^t)/2 without a tolerance check, for results that are symmetric
  /// in exact arithmetic but drift by round-off.
  static ComplexSymMatrix symmetrized(const CMatrix& a);
  static ComplexSymMatrix scalar(std::size_t n, cplx s);

  std::size_t size() const noexcept { return a_.rows(); }
  const CMatrix& matrix() const noexcept { return a_; }
  cplx operator()(std::size_t i, std::size_t j) const { return a_(i, j); }
  RMatrix real() const { return real_part(a_); }
  RMatrix imag() const { return imag_part(a_); }

  friend bool operator==(const ComplexSymMatrix&, const ComplexSymMatrix&) = default;

 private:
  CMatrix a_;
};

/// True iff every eigenvalue exceeds 1e-12 * max|s_ij|.
bool is_positive_definite(const RealSymMatrix& s);
/// Same, for a raw matrix; throws DimensionError for non-square input and
/// DomainError for a non-symmetric one.
bool is_positive_definite(const RMatrix& s);

/// z^{1/2} with -pi/2 < arg <= pi/2. A negative real z with a -0.0 imaginary
/// part is treated as lying on the upper side of the cut.
cplx principal_sqrt(cplx z);

/// z^{k/2} := (z^{1/2})^k. Throws DomainError for z = 0, k < 0.
cplx principal_half_power(cplx z, int k);

/// A deferred z^{k/2}.
struct PrincipalPower {
  cplx base;
  int halfExponent = 0;
  cplx value() const { return principal_half_power(base, halfExponent); }
};

inline constexpr double kSingularTolerance = 1e-12;

/// det(C Omega + D). Throws SingularError when |det| < 1e-12.
cplx det_symplectic_denominator(const RMatrix& C, const RMatrix& D, const ComplexSymMatrix& omega);

}  // namespace sjt
