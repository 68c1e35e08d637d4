#pragma once

// The covariant map p -> F_p, the automorphic factor J_M and numerical
// checks of omega(x) F_p = J_M(x, p)^{-1} F_{x.p}.

#include "sjt/weil.hpp"

namespace sjt {

struct AutomorphicFactorValue {
  cplx value;
  int weightHalf = 0;  // m, as in det(C Omega + D)^{m/2}
  IndexMatrix index;
};

/// F_p(x) = exp(pi i tr(M (x Omega x^t + 2 x Z^t))). Throws DomainError
/// unless M is positive definite.
GaussianVector covariant_vector(const IndexMatrix& M, const SiegelJacobiPoint& p);

/// J_M(x, p) = e^{pi i tr(M W (C Omega + D)^{-1} C W^t)}
///           * e^{-pi i tr(M (lambda Omega lambda^t + 2 lambda Z^t + kappa + mu lambda^t))}
///           * det(C Omega + D)^{m/2},   W = Z + lambda Omega + mu,
/// with the principal branch for the half power.
AutomorphicFactorValue automorphic_factor_J(const IndexMatrix& M, const JacobiElement& x,
                                            const SiegelJacobiPoint& p);

/// Componentwise distance between two Gaussian vectors.
struct VectorDiff {
  double prefactorRel = 0.0;  // |c - c'| / max(|c|, |c'|)
  double omegaMax = 0.0;      // max |Omega - Omega'|, relative to max(1, |Omega|)
  double zMax = 0.0;          // same for Z
  cplx ratio = 1.0;           // c / c'
  double formError() const { return std::max(omegaMax, zMax); }
  double maxError() const { return std::max(prefactorRel, formError()); }
};

VectorDiff compare(const GaussianVector& a, const GaussianVector& b);

struct CovarianceReport {
  double maxRelError = 0.0;
  bool pass = false;
  bool singleGenerator = false;
  /// lhs prefactor / rhs prefactor. Exactly 1 in form for single letters.
  cplx scalar = 1.0;
  double scalarEighthDefect = 0.0;  // |scalar^8 - 1|
  VectorDiff diff;
};

inline constexpr double kCovarianceTol = 1e-12;
inline constexpr double kScalarTol = 1e-8;

/// Single letters must match exactly in form (error <= 1e-12); longer words
/// must match in (Omega, Z) and differ in prefactor by a scalar s with
/// |s^8 - 1| <= 1e-8. Longer words use a form tolerance of 1e-10 to absorb
/// round-off through the chain.
CovarianceReport verify_covariance(const IndexMatrix& M, const Word& word, const SiegelJacobiPoint& p);

struct CocycleReport {
  cplx lhs;        // J(x1 x2, p)
  cplx rhs;        // J(x1, x2 p) J(x2, p)
  cplx scalar;     // lhs / rhs
  double eighthDefect = 0.0;
};

CocycleReport cocycle_check(const IndexMatrix& M, const JacobiElement& x1, const JacobiElement& x2,
                            const SiegelJacobiPoint& p);

}  // namespace sjt
