#include "sjt/jacobi_forms.hpp"

#include <memory>
#include <numbers>

#include "sjt/kernels.hpp"

namespace sjt {

using std::numbers::pi;

cplx automorphic_factor_Jk(const SlashParameters& params, const JacobiElement& x, const SiegelJacobiPoint& p) {
  const IndexMatrix& M = params.index;
  if (x.n() != p.n() || x.m() != p.m() || M.m() != p.m())
    throw DimensionError("automorphic_factor_Jk: dimension mismatch");
  const auto& g = x.g;
  const cplx det = det_symplectic_denominator(g.C(), g.D(), p.Omega());
  const CMatrix& Om = p.Omega().matrix();
  const CMatrix Mc = to_complex(M.matrix());
  const CMatrix lam = to_complex(x.h.lambda());
  const CMatrix W = p.Z() + lam * Om + x.h.mu();
  const CMatrix den = g.C() * Om + g.D();
  const CMatrix Wd = solve(den.transpose(), W.transpose()).transpose();
  const cplx e1 = trace(Mc * Wd * g.C() * W.transpose());
  const cplx e2 = trace(Mc * (lam * Om * lam.transpose() + 2.0 * (lam * p.Z().transpose()) +
                              to_complex(x.h.kappa() + x.h.mu() * x.h.lambda().transpose())));
  const cplx i2pi(0.0, 2.0 * pi);
  return std::exp(i2pi * e1) * std::exp(-i2pi * e2) * principal_half_power(det, params.weightHalf);
}

JacobiFunction slash(JacobiFunction f, SlashParameters params, JacobiElement x) {
  return [f = std::move(f), params = std::move(params), x = std::move(x)](const SiegelJacobiPoint& p) {
    return f(act_jacobi(x, p)) / automorphic_factor_Jk(params, x, p);
  };
}

SlashParameters theta_slash_parameters(const IndexMatrix& M) {
  return {static_cast<int>(M.m()), M.scaled(0.5)};
}

JacobiFunction theta_function(const IndexMatrix& M, const ComplexSymMatrix& omegaHint, const CMatrix& ZHint,
                              double eps) {
  const GaussianForm hint = make_form(M.matrix(), omegaHint.matrix(), ZHint, 1.0);
  std::vector<double> beta(hint.dim());
  for (std::size_t i = 0; i < beta.size(); ++i) beta[i] = hint.b[i].imag();
  auto plan = std::make_shared<const ThetaPlan>(imag_part(hint.A), std::move(beta), 1.0, eps);
  return [M, plan, eps](const SiegelJacobiPoint& p) {
    const GaussianForm f = make_form(M.matrix(), p.Omega().matrix(), p.Z(), 1.0);
    if (plan->matches(f)) return plan->evaluate(f);
    return theta_eval(M, p, eps).value;
  };
}

std::vector<FourierCoefficient> fourier_coefficients(const JacobiFunction& f, std::size_t nDim,
                                                     std::size_t mDim, const SlashParameters& params,
                                                     const std::vector<FourierIndex>& box,
                                                     const FourierOptions& opt) {
  if (nDim != 1) throw PreconditionError("fourier_coefficients: only n = 1 is supported");
  if (params.index.m() != mDim) throw DimensionError("fourier_coefficients: index size != m");
  const std::size_t N = opt.samples;
  if (N < 2 || N % 2) throw PreconditionError("fourier_coefficients: samples must be even and >= 2");
  const std::size_t axes = 1 + mDim;
  double total = 1.0;
  for (std::size_t a = 0; a < axes; ++a) total *= static_cast<double>(N);
  if (total > static_cast<double>(opt.sampleCap))
    throw ResourceError("fourier_coefficients: " + std::to_string(N) + "^" + std::to_string(axes) +
                            " samples exceed the cap",
                        std::numeric_limits<double>::infinity());
  const std::size_t count = static_cast<std::size_t>(total);
  const double lam = static_cast<double>(opt.lambdaGamma);
  const kernels::GridShape shape{axes, N, 0.0, 1.0};

  std::vector<cplx> values(count);
  kernels::parallel_fill(values, [&](std::size_t flat) {
    std::vector<std::size_t> k(axes);
    kernels::detail::unflatten(flat, shape, k.data());
    const cplx tau(static_cast<double>(k[0]) * lam / static_cast<double>(N), opt.imOmega);
    CMatrix Z(mDim, 1);
    for (std::size_t a = 0; a < mDim; ++a)
      Z(a, 0) = cplx(static_cast<double>(k[a + 1]) / static_cast<double>(N), opt.imZ);
    return f(SiegelJacobiPoint(ComplexSymMatrix{{tau}}, Z));
  });

  std::vector<FourierCoefficient> out;
  out.reserve(box.size());
  std::vector<std::size_t> k(axes);
  for (const auto& idx : box) {
    if (idx.T.size() != 1 || idx.R.rows() != 1 || idx.R.cols() != mDim)
      throw DimensionError("fourier_coefficients: FourierIndex shape");
    const double T = idx.T(0, 0);
    cplx full = 0.0, half = 0.0;
    for (std::size_t flat = 0; flat < count; ++flat) {
      kernels::detail::unflatten(flat, shape, k.data());
      double ph = T * static_cast<double>(k[0]);
      bool even = k[0] % 2 == 0;
      for (std::size_t a = 0; a < mDim; ++a) {
        ph += idx.R(0, a) * static_cast<double>(k[a + 1]);
        even = even && k[a + 1] % 2 == 0;
      }
      const cplx term = values[flat] * std::polar(1.0, -2.0 * pi * ph / static_cast<double>(N));
      full += term;
      if (even) half += term;
    }
    double rz = 0.0;
    for (std::size_t a = 0; a < mDim; ++a) rz += idx.R(0, a);
    const double scale = std::exp(2.0 * pi * (T * opt.imOmega / lam + rz * opt.imZ));
    full *= scale / total;
    half *= scale * std::pow(2.0, static_cast<double>(axes)) / total;
    out.push_back({idx, full, std::abs(full - half)});
  }
  double worst = 0.0;
  for (const auto& c : out) worst = std::max(worst, c.aliasEstimate);
  if (worst > opt.tolerance)
    throw ResourceError("fourier_coefficients: alias estimate exceeds tolerance", worst);
  return out;
}

bool block_positivity(const RealSymMatrix& T, const RMatrix& R, const IndexMatrix& M, int lambdaGamma,
                      BlockMode mode) {
  const std::size_t n = T.size(), m = M.m();
  if (R.rows() != n || R.cols() != m) throw DimensionError("block_positivity: R must be n x m");
  if (lambdaGamma <= 0) throw PreconditionError("block_positivity: lambdaGamma must be positive");
  RMatrix B(n + m, n + m);
  B.set_block(0, 0, T.matrix() * (1.0 / lambdaGamma));
  B.set_block(0, n, R * 0.5);
  B.set_block(n, 0, R.transpose() * 0.5);
  B.set_block(n, n, M.matrix());
  const double tol = 1e-9 * std::max(1.0, max_abs(B));
  switch (mode) {
    case BlockMode::Semi:
      return jacobi_eigen(B).values.front() >= -tol;
    case BlockMode::Strict:
      return jacobi_eigen(B).values.front() > tol;
    case BlockMode::Singular:
      return std::abs(determinant(B)) <= 1e-9;
  }
  return false;
}

}  // namespace sjt
