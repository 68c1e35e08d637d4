#pragma once

// Slash action with scalar weight det^k, Fourier coefficient extraction for
// n = 1, and the block-matrix predicates on Fourier indices (T, R).

#include <functional>
#include <limits>

#include "sjt/theta.hpp"

namespace sjt {

using JacobiFunction = std::function<cplx(const SiegelJacobiPoint&)>;

struct SlashParameters {
  int weightHalf = 0;  // 2k
  IndexMatrix index;   // half-integral allowed
};

/// J_{k,M}(x, p) = e^{2 pi i tr(M W (C Omega + D)^{-1} C W^t)}
///               * e^{-2 pi i tr(M (lambda Omega lambda^t + 2 lambda Z^t + kappa + mu lambda^t))}
///               * det(C Omega + D)^k,  W = Z + lambda Omega + mu.
cplx automorphic_factor_Jk(const SlashParameters& params, const JacobiElement& x, const SiegelJacobiPoint& p);

/// (f | x)(p) = J_{k,M}(x, p)^{-1} f(x.p).
JacobiFunction slash(JacobiFunction f, SlashParameters params, JacobiElement x);

/// Index M/2 and weight m/2, under which J_{k,M/2} coincides with J_M.
SlashParameters theta_slash_parameters(const IndexMatrix& M);

/// Theta_M as a function handle. Points whose imaginary parts match
/// (imOmega, imZ) reuse one precomputed summation plan; any other point
/// falls back to a fresh evaluation. Accuracy eps is absolute.
JacobiFunction theta_function(const IndexMatrix& M, const ComplexSymMatrix& omegaHint, const CMatrix& ZHint,
                              double eps);

struct FourierIndex {
  RealSymMatrix T;  // n x n
  RMatrix R;        // n x m, integral
  int lambdaGamma = 1;
};

struct FourierOptions {
  std::size_t samples = 64;  // per real period, per axis; must be even
  double imOmega = 1.0;
  double imZ = 0.5;  // used for every entry of Im Z
  int lambdaGamma = 1;
  /// Throw ResourceError if some alias estimate exceeds this.
  double tolerance = std::numeric_limits<double>::infinity();
  std::size_t sampleCap = std::size_t{1} << 22;
};

struct FourierCoefficient {
  FourierIndex index;
  cplx value;
  /// |c_N - c_{N/2}|: the same coefficient from every other sample.
  double aliasEstimate = 0.0;
};

/// c(T, R) in f(tau, z) = sum c(T, R) e^{2 pi i T tau / lambda} e^{2 pi i R z}
/// by a DFT over (Re tau mod lambda) x (Re z mod 1)^m at fixed imaginary
/// parts. n = 1 only. Throws ResourceError if samples^(1+m) exceeds the cap.
std::vector<FourierCoefficient> fourier_coefficients(const JacobiFunction& f, std::size_t nDim,
                                                     std::size_t mDim, const SlashParameters& params,
                                                     const std::vector<FourierIndex>& box,
                                                     const FourierOptions& opt = {});

enum class BlockMode { Semi, Strict, Singular };

/// Predicate on ((1/lambda) T, R/2; R^t/2, M):
/// Semi: >= 0, Strict: > 0, Singular: |det| <= 1e-9.
bool block_positivity(const RealSymMatrix& T, const RMatrix& R, const IndexMatrix& M, int lambdaGamma,
                      BlockMode mode);

}  // namespace sjt
