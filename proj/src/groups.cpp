#include "sjt/groups.hpp"

#include <sstream>

namespace sjt {

namespace {

void require_shape(const RMatrix& a, std::size_t r, std::size_t c, const char* what) {
  if (a.rows() != r || a.cols() != c)
    throw DimensionError(std::string(what) + ": expected " + std::to_string(r) + "x" +
                         std::to_string(c) + ", got " + a.shape());
}

bool symmetric_within(const RMatrix& a, double tol) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (std::abs(a(i, j) - a(j, i)) > tol) return false;
  return true;
}

RMatrix J_matrix(std::size_t n) {
  RMatrix J(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    J(i, n + i) = 1.0;
    J(n + i, i) = -1.0;
  }
  return J;
}

std::string fmt_matrix(const RMatrix& a) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ',';
      os << a(i, j);
    }
  }
  os << ']';
  return os.str();
}

}  // namespace

HeisenbergElement::HeisenbergElement(RMatrix lambda, RMatrix mu, RMatrix kappa)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), kappa_(std::move(kappa)) {
  const std::size_t m = lambda_.rows(), n = lambda_.cols();
  require_shape(mu_, m, n, "HeisenbergElement mu");
  require_shape(kappa_, m, m, "HeisenbergElement kappa");
  const RMatrix s = kappa_ + mu_ * lambda_.transpose();
  const double scale = std::max({1.0, max_abs(kappa_), max_abs(mu_) * max_abs(lambda_) * n});
  if (!symmetric_within(s, 1e-12 * scale))
    throw DomainError("HeisenbergElement: kappa + mu lambda^t is not symmetric");
}

HeisenbergElement HeisenbergElement::identity(std::size_t m, std::size_t n) {
  return {RMatrix(m, n), RMatrix(m, n), RMatrix(m, m)};
}

HeisenbergElement heisenberg_mul(const HeisenbergElement& a, const HeisenbergElement& b) {
  if (a.m() != b.m() || a.n() != b.n()) throw DimensionError("heisenberg_mul: dimension mismatch");
  return {a.lambda() + b.lambda(), a.mu() + b.mu(),
          a.kappa() + b.kappa() + a.lambda() * b.mu().transpose() -
              a.mu() * b.lambda().transpose()};
}

HeisenbergElement heisenberg_inv(const HeisenbergElement& a) {
  return {-a.lambda(), -a.mu(),
          -a.kappa() + a.lambda() * a.mu().transpose() - a.mu() * a.lambda().transpose()};
}

BracketCoords to_bracket(const HeisenbergElement& a) {
  return {a.lambda(), a.mu(), a.kappa() + a.mu() * a.lambda().transpose()};
}

HeisenbergElement from_bracket(const BracketCoords& b) {
  return {b.lambda, b.mu, b.kappa - b.mu * b.lambda.transpose()};
}

BracketCoords diamond_mul(const BracketCoords& a, const BracketCoords& b) {
  if (a.lambda.rows() != b.lambda.rows() || a.lambda.cols() != b.lambda.cols())
    throw DimensionError("diamond_mul: dimension mismatch");
  return {a.lambda + b.lambda, a.mu + b.mu,
          a.kappa + b.kappa + a.lambda * b.mu.transpose() + b.mu * a.lambda.transpose()};
}

SymplecticElement::SymplecticElement(Unchecked, RMatrix A, RMatrix B, RMatrix C, RMatrix D)
    : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)), D_(std::move(D)) {}

SymplecticElement::SymplecticElement(RMatrix A, RMatrix B, RMatrix C, RMatrix D)
    : SymplecticElement(Unchecked{}, std::move(A), std::move(B), std::move(C), std::move(D)) {
  const std::size_t n = A_.rows();
  require_shape(A_, n, n, "SymplecticElement A");
  require_shape(B_, n, n, "SymplecticElement B");
  require_shape(C_, n, n, "SymplecticElement C");
  require_shape(D_, n, n, "SymplecticElement D");
  const RMatrix g = full();
  const RMatrix J = J_matrix(n);
  const double scale = std::max(1.0, max_abs(g) * max_abs(g) * static_cast<double>(2 * n));
  if (max_abs_diff(g.transpose() * J * g, J) > 1e-12 * scale)
    throw DomainError("SymplecticElement: g^t J g != J");
}

SymplecticElement SymplecticElement::identity(std::size_t n) {
  return {Unchecked{}, RMatrix::identity(n), RMatrix(n, n), RMatrix(n, n), RMatrix::identity(n)};
}

SymplecticElement SymplecticElement::from_full(const RMatrix& g) {
  if (!g.square() || g.rows() % 2) throw DimensionError("SymplecticElement: need 2n x 2n");
  const std::size_t n = g.rows() / 2;
  return {g.block(0, 0, n, n), g.block(0, n, n, n), g.block(n, 0, n, n), g.block(n, n, n, n)};
}

RMatrix SymplecticElement::full() const {
  const std::size_t n = A_.rows();
  RMatrix g(2 * n, 2 * n);
  g.set_block(0, 0, A_);
  g.set_block(0, n, B_);
  g.set_block(n, 0, C_);
  g.set_block(n, n, D_);
  return g;
}

SymplecticElement symplectic_mul(const SymplecticElement& a, const SymplecticElement& b) {
  if (a.n() != b.n()) throw DimensionError("symplectic_mul: dimension mismatch");
  // Closed under multiplication; skip the membership check so long words
  // do not trip it on accumulated round-off.
  return {SymplecticElement::Unchecked{}, a.A() * b.A() + a.B() * b.C(),
          a.A() * b.B() + a.B() * b.D(), a.C() * b.A() + a.D() * b.C(),
          a.C() * b.B() + a.D() * b.D()};
}

SymplecticElement symplectic_inv(const SymplecticElement& a) {
  return {SymplecticElement::Unchecked{}, a.D().transpose(), -a.B().transpose(),
          -a.C().transpose(), a.A().transpose()};
}

JacobiElement JacobiElement::identity(std::size_t n, std::size_t m) {
  return {SymplecticElement::identity(n), HeisenbergElement::identity(m, n)};
}

JacobiElement jacobi_mul(const JacobiElement& x, const JacobiElement& y) {
  if (x.n() != y.n() || x.m() != y.m()) throw DimensionError("jacobi_mul: dimension mismatch");
  const auto& gp = y.g;
  const RMatrix lt = x.h.lambda() * gp.A() + x.h.mu() * gp.C();
  const RMatrix mt = x.h.lambda() * gp.B() + x.h.mu() * gp.D();
  const auto& hp = y.h;
  HeisenbergElement h(lt + hp.lambda(), mt + hp.mu(),
                      x.h.kappa() + hp.kappa() + lt * hp.mu().transpose() -
                          mt * hp.lambda().transpose());
  return {symplectic_mul(x.g, y.g), std::move(h)};
}

JacobiElement jacobi_inv(const JacobiElement& x) {
  // (g, h)^{-1} = (g^{-1}, h'') where (g^{-1}, 0)(I, h'') undoes (g, 0)(I, h):
  // (I,h)^{-1} = (I, h^{-1}) and (g,0)^{-1} = (g^{-1}, 0).
  const std::size_t n = x.n(), m = x.m();
  JacobiElement hinv{SymplecticElement::identity(n), heisenberg_inv(x.h)};
  JacobiElement ginv{symplectic_inv(x.g), HeisenbergElement::identity(m, n)};
  return jacobi_mul(hinv, ginv);
}

SiegelJacobiPoint::SiegelJacobiPoint(ComplexSymMatrix omega, CMatrix Z)
    : omega_(std::move(omega)), Z_(std::move(Z)) {
  if (Z_.cols() != omega_.size())
    throw DimensionError("SiegelJacobiPoint: Z must be m x n with n = size(Omega)");
  if (!is_positive_definite(RealSymMatrix(omega_.imag())))
    throw DomainError("SiegelJacobiPoint: Im Omega is not positive definite");
}

ComplexSymMatrix act_siegel(const SymplecticElement& g, const ComplexSymMatrix& omega) {
  if (g.n() != omega.size()) throw DimensionError("act_siegel: dimension mismatch");
  det_symplectic_denominator(g.C(), g.D(), omega);
  const CMatrix num = g.A() * omega.matrix() + g.B();
  const CMatrix den = g.C() * omega.matrix() + g.D();
  // X den = num  <=>  den^t X^t = num^t.
  const CMatrix X = solve(den.transpose(), num.transpose()).transpose();
  return ComplexSymMatrix::symmetrized(X);
}

SiegelJacobiPoint act_jacobi(const JacobiElement& x, const SiegelJacobiPoint& p) {
  if (x.n() != p.n() || x.m() != p.m()) throw DimensionError("act_jacobi: dimension mismatch");
  const auto& g = x.g;
  det_symplectic_denominator(g.C(), g.D(), p.Omega());
  const CMatrix& W = p.Omega().matrix();
  const CMatrix den = g.C() * W + g.D();
  const CMatrix shifted = p.Z() + x.h.lambda() * W + x.h.mu();
  const CMatrix Znew = solve(den.transpose(), shifted.transpose()).transpose();
  return {act_siegel(g, p.Omega()), Znew};
}

SymplecticElement gen_t(const RealSymMatrix& b) {
  const std::size_t n = b.size();
  return {RMatrix::identity(n), b.matrix(), RMatrix(n, n), RMatrix::identity(n)};
}

SymplecticElement gen_g(const RMatrix& alpha) {
  if (!alpha.square()) throw DimensionError("gen_g: alpha must be square");
  const std::size_t n = alpha.rows();
  if (std::abs(determinant(alpha)) < kSingularTolerance) throw SingularError("gen_g: alpha is singular");
  return {alpha.transpose(), RMatrix(n, n), RMatrix(n, n), inverse(alpha)};
}

SymplecticElement gen_sigma(std::size_t n) {
  return {RMatrix(n, n), -RMatrix::identity(n), RMatrix::identity(n), RMatrix(n, n)};
}

Generator Generator::heis(HeisenbergElement h) {
  Generator g;
  g.kind = GeneratorKind::Heisenberg;
  g.h = std::move(h);
  return g;
}

Generator Generator::trans(RealSymMatrix b) {
  Generator g;
  g.kind = GeneratorKind::Translation;
  g.b = std::move(b);
  return g;
}

Generator Generator::scale(RMatrix alpha) {
  Generator g;
  g.kind = GeneratorKind::Scaling;
  g.alpha = std::move(alpha);
  return g;
}

Generator Generator::sigma() { return Generator{}; }

JacobiElement Generator::element(std::size_t n, std::size_t m) const {
  switch (kind) {
    case GeneratorKind::Heisenberg:
      if (h.n() != n || h.m() != m) throw DimensionError("generator h: dimension mismatch");
      return {SymplecticElement::identity(n), h};
    case GeneratorKind::Translation:
      if (b.size() != n) throw DimensionError("generator t: dimension mismatch");
      return {gen_t(b), HeisenbergElement::identity(m, n)};
    case GeneratorKind::Scaling:
      if (alpha.rows() != n) throw DimensionError("generator g: dimension mismatch");
      return {gen_g(alpha), HeisenbergElement::identity(m, n)};
    case GeneratorKind::Sigma:
      return {gen_sigma(n), HeisenbergElement::identity(m, n)};
  }
  throw DomainError("unknown generator kind");
}

std::string Generator::to_string() const {
  switch (kind) {
    case GeneratorKind::Heisenberg:
      return "h(" + fmt_matrix(h.lambda()) + ";" + fmt_matrix(h.mu()) + ";" +
             fmt_matrix(h.kappa()) + ")";
    case GeneratorKind::Translation:
      return "t(" + fmt_matrix(b.matrix()) + ")";
    case GeneratorKind::Scaling:
      return "g(" + fmt_matrix(alpha) + ")";
    case GeneratorKind::Sigma:
      return "sigma";
  }
  return "?";
}

JacobiElement word_element(const Word& w, std::size_t n, std::size_t m) {
  JacobiElement x = JacobiElement::identity(n, m);
  for (const auto& g : w) x = jacobi_mul(x, g.element(n, m));
  return x;
}

std::string word_to_string(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += w[i].to_string();
  }
  return s + "]";
}

}  // namespace sjt
