#pragma once

// Schrodinger-Weil generator actions on Gaussian vectors
//   x -> c0 exp(pi i tr(M (x Omega x^t + 2 x Z^t))),   x in R^{m x n},
// in closed form, plus direct numerical versions on grid functions.

#include <optional>

#include "sjt/groups.hpp"
#include "sjt/schrodinger.hpp"

namespace sjt {

class IndexMatrix {
 public:
  IndexMatrix() = default;
  explicit IndexMatrix(RealSymMatrix M);
  IndexMatrix(std::initializer_list<std::initializer_list<double>> init)
      : IndexMatrix(RealSymMatrix(init)) {}

  /// Cartan matrix of E8: even, unimodular, positive definite.
  static IndexMatrix E8();

  const RealSymMatrix& entries() const noexcept { return M_; }
  const RMatrix& matrix() const noexcept { return M_.matrix(); }
  std::size_t m() const noexcept { return M_.size(); }
  double det() const noexcept { return det_; }

  bool positiveDefinite() const noexcept { return pd_; }
  bool integral() const noexcept { return integral_; }
  bool even() const noexcept { return even_; }
  bool unimodular() const noexcept { return unimodular_; }
  /// Integer diagonal, off-diagonal entries in Z/2.
  bool halfIntegral() const noexcept { return halfIntegral_; }

  /// The index scaled by s (flags recomputed).
  IndexMatrix scaled(double s) const;

 private:
  RealSymMatrix M_;
  double det_ = 0.0;
  bool pd_ = false, integral_ = false, even_ = false, unimodular_ = false, halfIntegral_ = false;
};

/// x -> pref * exp(pi i (x^t A x + 2 b.x)) on R^d, the flat form of a
/// Gaussian vector: A = M kron Omega, b = vec(M Z).
struct GaussianForm {
  CMatrix A;
  std::vector<cplx> b;
  cplx pref = 1.0;
  std::size_t dim() const { return b.size(); }
};

/// Flat form of x -> pref exp(pi i tr(Mq (x Omega x^t + 2 x Z^t))) for any
/// real symmetric Mq (not necessarily integral).
GaussianForm make_form(const RMatrix& Mq, const CMatrix& omega, const CMatrix& Z, cplx pref);

class GaussianVector {
 public:
  /// Throws DomainError unless Im Omega is positive definite, DimensionError
  /// on shape mismatch.
  GaussianVector(cplx prefactor, ComplexSymMatrix omega, CMatrix Z, IndexMatrix M);

  cplx prefactor() const noexcept { return c0_; }
  const ComplexSymMatrix& Omega() const noexcept { return omega_; }
  const CMatrix& Z() const noexcept { return Z_; }
  const IndexMatrix& index() const noexcept { return M_; }
  std::size_t m() const noexcept { return Z_.rows(); }
  std::size_t n() const noexcept { return Z_.cols(); }

  cplx evaluate(const RMatrix& x) const;
  GaussianForm form() const;
  /// Exact L2 norm.
  double l2_norm() const;

 private:
  cplx c0_;
  ComplexSymMatrix omega_;
  CMatrix Z_;
  IndexMatrix M_;
};

/// Shift by lambda, multiply by t e^{pi i tr(M(kappa + mu lambda^t + 2 x mu^t))}.
GaussianVector act_heisenberg(cplx t, const HeisenbergElement& h, const GaussianVector& v);
/// Multiply by e^{pi i tr(M x b x^t)}.
GaussianVector act_tb(const RealSymMatrix& b, const GaussianVector& v);
/// f -> (det alpha)^{m/2} f(x alpha^t).
GaussianVector act_galpha(const RMatrix& alpha, const GaussianVector& v);
/// Closed-form Fourier-type transform: Omega' = -Omega^{-1}, Z' = Z Omega^{-1},
/// prefactor times (det Omega)^{-m/2} e^{-pi i tr(M Z Omega^{-1} Z^t)}.
GaussianVector act_sigma(const GaussianVector& v);

GaussianVector act_generator(const Generator& g, const GaussianVector& v);
/// Applies the word right to left (the rightmost letter acts first).
GaussianVector act_word(const Word& w, const GaussianVector& v);

/// det(Omega / i)^{1/2} continued analytically from Omega = iY (where it is
/// positive). Agrees with the principal branch for n = 1.
cplx sqrt_det_omega_over_i(const ComplexSymMatrix& omega);

/// int_{R^{m x n}} exp(pi i tr(M(x Omega x^t + 2 x Z^t))) dx
///   = (det M)^{-n/2} det(Omega/i)^{-m/2} exp(-pi i tr(M Z Omega^{-1} Z^t)).
cplx gaussian_integral(const IndexMatrix& M, const ComplexSymMatrix& omega, const CMatrix& Z);

struct SampleResult {
  GridFunction values;
  /// max |v| on the grid boundary / max |v| on the grid.
  double boundaryRatio = 0.0;
  bool supportOverflow = false;  // boundaryRatio >= 1e-14
};

SampleResult sample(const GaussianVector& v, const GridSpec& grid);

// Direct grid realisations of the four generators. The shift, chirp and
// Fourier sum are exact pointwise formulas; g(alpha) interpolates, and both
// g(alpha) and sigma are implemented for m = n = 1 only.
GridFunction numeric_heisenberg(cplx t, const IndexMatrix& M, const HeisenbergElement& h,
                                const GridFunction& f);
GridFunction numeric_tb(const IndexMatrix& M, const RealSymMatrix& b, const GridFunction& f);
GridFunction numeric_galpha(const RMatrix& alpha, const GridFunction& f);
/// (1/i)^{1/2} M^{1/2} * trapezoid sum of f(y) e^{-2 pi i M y x}. The output
/// frequencies M x stay below Nyquist only if 2 M L delta <= 1; otherwise
/// throws PreconditionError.
GridFunction numeric_sigma(const IndexMatrix& M, const GridFunction& f);

}  // namespace sjt
