#pragma once

// Theta series Theta_M(Omega, Z) = sum_xi exp(pi i tr(M(xi Omega xi^t + 2 xi Z^t)))
// with a certified truncation error, the multiplier rho_M, and the checks
// built on them (transformation law, Poisson summation, q-expansion).
//
// Truncation: write a term as pref * exp(pi i (x^t A x + 2 b.x)), x in Z^d,
// Y = Im A > 0, beta = Im b. Then
//   |term(x)| = K exp(-pi (x + c)^t Y (x + c)),  c = Y^{-1} beta,
//   K = |pref| exp(pi beta^t Y^{-1} beta),
// and all x with (x+c)^t Y (x+c) <= r^2 are summed. The remainder is bounded
// shell by shell using the packing estimate
//   #{x : |x + c|_Y <= s} <= (1 + 2 s / delta)^d,
// delta the Y-length of the shortest nonzero lattice vector.

#include <optional>
#include <vector>

#include "sjt/covariance.hpp"

namespace sjt {

inline constexpr std::size_t kTermCap = 1'000'000;

/// Integer points x with (x + c)^t Y (x + c) <= r2, sorted by (value, lex).
struct EllipsoidPoints {
  std::size_t dim = 0;
  std::vector<int> points;    // row-major, dim entries per point
  std::vector<double> norms;  // (x + c)^t Y (x + c)
  std::size_t count() const { return norms.size(); }
};

/// Returns nullopt once more than `cap` points are found.
std::optional<EllipsoidPoints> enumerate_ellipsoid(const RMatrix& Y, std::span<const double> c, double r2,
                                                   std::size_t cap = kTermCap);

/// min over nonzero integer x of sqrt(x^t Y x).
double shortest_vector_length(const RMatrix& Y);

/// Certified bound on sum over {x : |x + c|_Y > r} of exp(-pi |x + c|_Y^2).
double gaussian_tail(double r, double delta, std::size_t dim);

/// |pref| exp(pi beta^t Y^{-1} beta).
double dominant_scale(const RMatrix& Y, std::span<const double> beta, double prefAbs);

/// Summation plan for every form sharing (Im A, Im b) and with |pref| <= prefAbs.
/// Only the real parts may vary between evaluations.
class ThetaPlan {
 public:
  /// Picks the smallest radius (step 0.05, at least 1) with tail <= eps.
  /// Throws ResourceError, carrying the bound reachable within the cap,
  /// if more than `cap` terms would be needed.
  ThetaPlan(const RMatrix& Y, std::vector<double> beta, double prefAbs, double eps,
            std::size_t cap = kTermCap);
  /// Fixed radius; no target accuracy.
  static ThetaPlan with_radius(const RMatrix& Y, std::vector<double> beta, double prefAbs, double r,
                               std::size_t cap = kTermCap);

  double radius() const noexcept { return radius_; }
  double tailBound() const noexcept { return tail_; }
  /// K = |pref| exp(pi beta^t Y^{-1} beta): the largest possible term size.
  double dominantScale() const noexcept { return K_; }
  std::size_t termCount() const noexcept { return pts_.count(); }
  const EllipsoidPoints& points() const noexcept { return pts_; }

  /// True if the form's imaginary parts and |pref| are covered by this plan.
  bool matches(const GaussianForm& f) const;
  /// Throws PreconditionError unless matches(f).
  cplx evaluate(const GaussianForm& f) const;

 private:
  ThetaPlan() = default;
  void init(const RMatrix& Y, std::vector<double> beta, double prefAbs);
  double tail_at(double r) const;

  RMatrix Y_;
  std::vector<double> beta_, c_;
  double prefAbs_ = 0.0;
  double K_ = 0.0, delta_ = 0.0, radius_ = 0.0, tail_ = 0.0;
  EllipsoidPoints pts_;
};

struct ThetaEvaluation {
  cplx value;
  double truncationRadius = 0.0;  // ellipsoid radius in the Y-norm
  std::size_t termCount = 0;
  double tailBound = 0.0;
  double epsilonRequested = 0.0;
  double dominantScale = 0.0;
};

/// Sum of a Gaussian form over Z^d with |error| <= eps (absolute).
ThetaEvaluation lattice_sum(const GaussianForm& f, double eps, std::size_t cap = kTermCap);
ThetaEvaluation lattice_sum_radius(const GaussianForm& f, double radius, std::size_t cap = kTermCap);

/// Theta_M(Omega, Z) with |value - Theta| <= eps. Needs M positive definite.
ThetaEvaluation theta_eval(const IndexMatrix& M, const SiegelJacobiPoint& p, double eps,
                           std::size_t cap = kTermCap);

struct CharacterValue {
  cplx value;
};

/// Generator values of rho_M (Theta(x.p) = rho J_M Theta(p)):
///   h(lambda, mu; kappa) -> e^{-pi i tr(M(kappa + mu lambda^t))}
///   t(b) -> 1,   g(alpha) -> (det alpha)^{-m/2},   sigma -> (-i)^{m n / 2}.
/// Throws PreconditionError for non-integral data.
CharacterValue character_rho(const IndexMatrix& M, const Generator& g, std::size_t n);

/// Syntactic membership of every letter in the generating set of Gamma_{1,2}:
/// integral Heisenberg part, b integral with even diagonal, alpha in GL(n, Z).
bool in_gamma12(const Word& w);

struct ThetaStep {
  Generator gen;
  cplx J;
  cplx rho;
};

struct ThetaTransformReport {
  cplx lhs;             // Theta(x.p)
  cplx thetaP;          // Theta(p)
  cplx jWord;           // J_M(x, p) for the whole word
  cplx jChain;          // product of J_M(gamma_i, p_i) along the word
  cplx rhoPredicted;    // product of generator values
  cplx rhoMeasured;     // lhs / (jWord * thetaP)
  double cocycleDefect = 0.0;     // |jWord / jChain - 1|
  double chainedResidual = 0.0;   // |lhs - rhoPredicted jChain thetaP| / scale
  double literalResidual = 0.0;   // |lhs - rhoPredicted jWord thetaP| / scale
  double rhoEighthDefect = 0.0;   // |rhoMeasured^8 - 1|
  double truncationError = 0.0;   // combined tail bounds, relative to scale
  bool strict = false;  // M unimodular even, or det M = 1 with a Gamma_{1,2} word
  bool pass = false;    // meaningful only when strict
  ThetaEvaluation lhsEval, rhsEval;
  std::vector<ThetaStep> steps;
};

inline constexpr double kThetaTransformTol = 1e-8;

/// eps is relative to the dominant term size of each sum.
ThetaTransformReport verify_theta_transformation(const IndexMatrix& M, const Word& word,
                                                 const SiegelJacobiPoint& p, double eps);

struct PoissonReport {
  cplx lhs, rhs;
  double relError = 0.0;
  ThetaEvaluation lhsEval, rhsEval;
};

/// sum_xi v(xi) against sum_eta vhat(M^{-1} eta), where
/// vhat(y) = int v(x) e^{-2 pi i tr(M x y^t)} dx in closed form.
PoissonReport poisson_check(const GaussianVector& v, double eps = 1e-15);

struct QCoefficient {
  long exponent;
  long long count;
};

/// Coefficients of q^k, k = 0..maxOrder, in Theta_M(Omega, 0) = sum c_k e^{2 pi i k Omega}
/// (n = 1, M even integral): c_k = #{xi : xi^t M xi / 2 = k}.
std::vector<QCoefficient> qexpansion(const IndexMatrix& M, std::size_t n, long maxOrder,
                                     std::size_t cap = kTermCap);

/// sum_k c_k q^k with q = e^{2 pi i Omega}.
cplx qseries_sum(const std::vector<QCoefficient>& coeffs, cplx omega);

}  // namespace sjt
