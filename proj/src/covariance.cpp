#include "sjt/covariance.hpp"

#include <numbers>

namespace sjt {

namespace {

cplx expi_pi(cplx s) { return std::exp(cplx(0.0, std::numbers::pi) * s); }

double eighth_defect(cplx s) {
  cplx s8 = s * s;
  s8 *= s8;
  s8 *= s8;
  return std::abs(s8 - 1.0);
}

}  // namespace

GaussianVector covariant_vector(const IndexMatrix& M, const SiegelJacobiPoint& p) {
  if (!M.positiveDefinite()) throw DomainError("covariant_vector: M must be positive definite");
  return {1.0, p.Omega(), p.Z(), M};
}

AutomorphicFactorValue automorphic_factor_J(const IndexMatrix& M, const JacobiElement& x,
                                            const SiegelJacobiPoint& p) {
  if (x.n() != p.n() || x.m() != p.m() || M.m() != p.m())
    throw DimensionError("automorphic_factor_J: dimension mismatch");
  const auto& g = x.g;
  const cplx det = det_symplectic_denominator(g.C(), g.D(), p.Omega());
  const CMatrix& Om = p.Omega().matrix();
  const CMatrix Mc = to_complex(M.matrix());
  const CMatrix lam = to_complex(x.h.lambda());
  const CMatrix W = p.Z() + lam * Om + x.h.mu();
  const CMatrix den = g.C() * Om + g.D();
  // W den^{-1} = (den^{-t} W^t)^t
  const CMatrix Wd = solve(den.transpose(), W.transpose()).transpose();
  const cplx e1 = trace(Mc * Wd * g.C() * W.transpose());
  const cplx e2 = trace(Mc * (lam * Om * lam.transpose() + 2.0 * (lam * p.Z().transpose()) +
                              to_complex(x.h.kappa() + x.h.mu() * x.h.lambda().transpose())));
  const int m = static_cast<int>(M.m());
  return {expi_pi(e1) * expi_pi(-e2) * principal_half_power(det, m), m, M};
}

VectorDiff compare(const GaussianVector& a, const GaussianVector& b) {
  VectorDiff d;
  const double scale = std::max(std::abs(a.prefactor()), std::abs(b.prefactor()));
  d.prefactorRel = scale > 0.0 ? std::abs(a.prefactor() - b.prefactor()) / scale : 0.0;
  d.omegaMax = max_abs_diff(a.Omega().matrix(), b.Omega().matrix()) /
               std::max(1.0, max_abs(a.Omega().matrix()));
  d.zMax = max_abs_diff(a.Z(), b.Z()) / std::max(1.0, max_abs(a.Z()));
  d.ratio = a.prefactor() / b.prefactor();
  return d;
}

CovarianceReport verify_covariance(const IndexMatrix& M, const Word& word, const SiegelJacobiPoint& p) {
  if (word.empty()) throw PreconditionError("verify_covariance: empty word");
  const std::size_t n = p.n(), m = p.m();
  const GaussianVector lhs = act_word(word, covariant_vector(M, p));
  const JacobiElement x = word_element(word, n, m);
  const cplx J = automorphic_factor_J(M, x, p).value;
  const GaussianVector F = covariant_vector(M, act_jacobi(x, p));
  const GaussianVector rhs(F.prefactor() / J, F.Omega(), F.Z(), M);

  CovarianceReport r;
  r.diff = compare(lhs, rhs);
  r.singleGenerator = word.size() == 1;
  r.scalar = r.diff.ratio;
  r.scalarEighthDefect = eighth_defect(r.scalar);
  if (r.singleGenerator) {
    r.maxRelError = r.diff.maxError();
    r.pass = r.maxRelError <= kCovarianceTol;
  } else {
    r.maxRelError = r.diff.formError();
    r.pass = r.maxRelError <= 1e-10 && r.scalarEighthDefect <= kScalarTol;
  }
  return r;
}

CocycleReport cocycle_check(const IndexMatrix& M, const JacobiElement& x1, const JacobiElement& x2,
                            const SiegelJacobiPoint& p) {
  CocycleReport r;
  r.lhs = automorphic_factor_J(M, jacobi_mul(x1, x2), p).value;
  r.rhs = automorphic_factor_J(M, x1, act_jacobi(x2, p)).value * automorphic_factor_J(M, x2, p).value;
  r.scalar = r.lhs / r.rhs;
  r.eighthDefect = eighth_defect(r.scalar);
  return r;
}

}  // namespace sjt
