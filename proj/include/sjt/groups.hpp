#pragma once

// Heisenberg group H^(n,m), Sp(n, R), the Jacobi group and their actions on
// H_n and H_{n,m}. Shapes: lambda, mu, Z are m x n; kappa is m x m; the
// symplectic blocks and Omega are n x n.

#include <string>
#include <vector>

#include "sjt/matrix.hpp"

namespace sjt {

class HeisenbergElement {
 public:
  HeisenbergElement() = default;
  /// Throws DomainError unless kappa + mu lambda^t is symmetric to 1e-12.
  HeisenbergElement(RMatrix lambda, RMatrix mu, RMatrix kappa);

  static HeisenbergElement identity(std::size_t m, std::size_t n);

  const RMatrix& lambda() const noexcept { return lambda_; }
  const RMatrix& mu() const noexcept { return mu_; }
  const RMatrix& kappa() const noexcept { return kappa_; }
  std::size_t m() const noexcept { return lambda_.rows(); }
  std::size_t n() const noexcept { return lambda_.cols(); }

  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;

 private:
  RMatrix lambda_, mu_, kappa_;
};

/// (l, m; k) o (l', m'; k') = (l+l', m+m'; k+k' + l m'^t - m l'^t).
HeisenbergElement heisenberg_mul(const HeisenbergElement& a, const HeisenbergElement& b);
HeisenbergElement heisenberg_inv(const HeisenbergElement& a);

/// Bracket coordinates: [l, m; k] is the element (l, m; k - m l^t), so the
/// bracket kappa of (l, m; k) is k + m l^t (symmetric).
struct BracketCoords {
  RMatrix lambda, mu, kappa;
};
BracketCoords to_bracket(const HeisenbergElement& a);
HeisenbergElement from_bracket(const BracketCoords& b);
/// [l+l0, m+m0; k+k0 + l m0^t + m0 l^t].
BracketCoords diamond_mul(const BracketCoords& a, const BracketCoords& b);

class SymplecticElement {
 public:
  SymplecticElement() = default;
  /// Throws DomainError unless g^t J g = J to 1e-12 (relative to |g|^2).
  SymplecticElement(RMatrix A, RMatrix B, RMatrix C, RMatrix D);

  static SymplecticElement identity(std::size_t n);
  static SymplecticElement from_full(const RMatrix& g);

  const RMatrix& A() const noexcept { return A_; }
  const RMatrix& B() const noexcept { return B_; }
  const RMatrix& C() const noexcept { return C_; }
  const RMatrix& D() const noexcept { return D_; }
  std::size_t n() const noexcept { return A_.rows(); }
  RMatrix full() const;

 private:
  struct Unchecked {};
  SymplecticElement(Unchecked, RMatrix A, RMatrix B, RMatrix C, RMatrix D);
  friend SymplecticElement symplectic_mul(const SymplecticElement&, const SymplecticElement&);
  friend SymplecticElement symplectic_inv(const SymplecticElement&);

  RMatrix A_, B_, C_, D_;
};

SymplecticElement symplectic_mul(const SymplecticElement& a, const SymplecticElement& b);
/// (A B; C D)^{-1} = (D^t, -B^t; -C^t, A^t).
SymplecticElement symplectic_inv(const SymplecticElement& a);

struct JacobiElement {
  SymplecticElement g;
  HeisenbergElement h;

  static JacobiElement identity(std::size_t n, std::size_t m);
  std::size_t n() const noexcept { return g.n(); }
  std::size_t m() const noexcept { return h.m(); }
};

JacobiElement jacobi_mul(const JacobiElement& x, const JacobiElement& y);
JacobiElement jacobi_inv(const JacobiElement& x);

class SiegelJacobiPoint {
 public:
  SiegelJacobiPoint() = default;
  /// Throws DomainError unless Im Omega is positive definite.
  SiegelJacobiPoint(ComplexSymMatrix omega, CMatrix Z);

  const ComplexSymMatrix& Omega() const noexcept { return omega_; }
  const CMatrix& Z() const noexcept { return Z_; }
  std::size_t n() const noexcept { return omega_.size(); }
  std::size_t m() const noexcept { return Z_.rows(); }

 private:
  ComplexSymMatrix omega_;
  CMatrix Z_;
};

/// (A Omega + B)(C Omega + D)^{-1}, re-symmetrized.
ComplexSymMatrix act_siegel(const SymplecticElement& g, const ComplexSymMatrix& omega);
/// (Omega, Z) -> (g.Omega, (Z + lambda Omega + mu)(C Omega + D)^{-1}).
SiegelJacobiPoint act_jacobi(const JacobiElement& x, const SiegelJacobiPoint& p);

// ---------------------------------------------------------------------------
// Generators and words

/// t0(b) = (I b; 0 I), b symmetric.
SymplecticElement gen_t(const RealSymMatrix& b);
/// g0(alpha) = (alpha^t 0; 0 alpha^{-1}). Throws SingularError for singular alpha.
SymplecticElement gen_g(const RMatrix& alpha);
/// sigma_n = (0 -I; I 0).
SymplecticElement gen_sigma(std::size_t n);

enum class GeneratorKind { Heisenberg, Translation, Scaling, Sigma };

struct Generator {
  GeneratorKind kind = GeneratorKind::Sigma;
  HeisenbergElement h;  // Heisenberg
  RealSymMatrix b;      // Translation
  RMatrix alpha;        // Scaling

  static Generator heis(HeisenbergElement h);
  static Generator trans(RealSymMatrix b);
  static Generator scale(RMatrix alpha);
  static Generator sigma();

  JacobiElement element(std::size_t n, std::size_t m) const;
  std::string to_string() const;
};

/// Words are read left to right as the product g1 g2 ... gk; applied to a
/// vector or a point, the rightmost letter acts first.
using Word = std::vector<Generator>;

JacobiElement word_element(const Word& w, std::size_t n, std::size_t m);
std::string word_to_string(const Word& w);

}  // namespace sjt
