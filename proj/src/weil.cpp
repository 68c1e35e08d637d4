#include "sjt/weil.hpp"

#include <numbers>

namespace sjt {

using std::numbers::pi;

namespace {

bool near_integer(double v, double tol = 1e-9) { return std::abs(v - std::round(v)) <= tol; }

cplx expi_pi(cplx s) { return std::exp(cplx(0.0, pi) * s); }

}  // namespace

IndexMatrix::IndexMatrix(RealSymMatrix M) : M_(std::move(M)) {
  const RMatrix& a = M_.matrix();
  const std::size_t m = a.rows();
  if (m == 0) throw DimensionError("IndexMatrix: empty matrix");
  det_ = determinant(a);
  pd_ = is_positive_definite(M_);
  integral_ = true;
  halfIntegral_ = true;
  bool evenDiag = true;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!near_integer(a(i, j))) integral_ = false;
      if (i == j ? !near_integer(a(i, i)) : !near_integer(2.0 * a(i, j))) halfIntegral_ = false;
    }
    if (!near_integer(a(i, i) / 2.0)) evenDiag = false;
  }
  even_ = integral_ && evenDiag;
  unimodular_ = integral_ && std::abs(std::abs(det_) - 1.0) <= 1e-9;
}

IndexMatrix IndexMatrix::E8() {
  RMatrix c(8, 8);
  for (std::size_t i = 0; i < 8; ++i) c(i, i) = 2.0;
  // Bourbaki labels 1..8 -> 0..7: chain 1-3-4-5-6-7-8, node 2 on node 4.
  const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (const auto& e : edges) {
    c(e[0], e[1]) = -1.0;
    c(e[1], e[0]) = -1.0;
  }
  return IndexMatrix(RealSymMatrix(c));
}

IndexMatrix IndexMatrix::scaled(double s) const { return IndexMatrix(RealSymMatrix(M_.matrix() * s)); }

GaussianForm make_form(const RMatrix& Mq, const CMatrix& omega, const CMatrix& Z, cplx pref) {
  if (Mq.rows() != Z.rows() || omega.rows() != Z.cols())
    throw DimensionError("make_form: dimension mismatch");
  return {kron(to_complex(Mq), omega), vec(Mq * Z), pref};
}

GaussianVector::GaussianVector(cplx prefactor, ComplexSymMatrix omega, CMatrix Z, IndexMatrix M)
    : c0_(prefactor), omega_(std::move(omega)), Z_(std::move(Z)), M_(std::move(M)) {
  if (Z_.cols() != omega_.size() || Z_.rows() != M_.m())
    throw DimensionError("GaussianVector: Z must be m x n");
  if (!is_positive_definite(RealSymMatrix(omega_.imag())))
    throw DomainError("GaussianVector: Im Omega is not positive definite");
}

cplx GaussianVector::evaluate(const RMatrix& x) const {
  if (x.rows() != m() || x.cols() != n()) throw DimensionError("GaussianVector::evaluate: x shape");
  const CMatrix xc = to_complex(x);
  const CMatrix inner = xc * omega_.matrix() * xc.transpose() + 2.0 * (xc * Z_.transpose());
  return c0_ * expi_pi(trace(to_complex(M_.matrix()) * inner));
}

GaussianForm GaussianVector::form() const { return make_form(M_.matrix(), omega_.matrix(), Z_, c0_); }

double GaussianVector::l2_norm() const {
  // |v|^2 = |c0|^2 exp(pi i tr(M(x (2iY) x^t + 2 x (2iV)^t))).
  const cplx i2(0.0, 2.0);
  const ComplexSymMatrix om2(to_complex(omega_.imag()) * i2);
  const CMatrix Z2 = to_complex(imag_part(Z_)) * i2;
  return std::abs(c0_) * std::sqrt(std::abs(gaussian_integral(M_, om2, Z2)));
}

GaussianVector act_heisenberg(cplx t, const HeisenbergElement& h, const GaussianVector& v) {
  if (h.m() != v.m() || h.n() != v.n()) throw DimensionError("act_heisenberg: dimension mismatch");
  const CMatrix M = to_complex(v.index().matrix());
  const CMatrix lam = to_complex(h.lambda());
  const CMatrix& W = v.Omega().matrix();
  const CMatrix Znew = v.Z() + lam * W + h.mu();
  const cplx central = trace(M * to_complex(h.kappa() + h.mu() * h.lambda().transpose()));
  const cplx shift = trace(M * (lam * W * lam.transpose() + 2.0 * (lam * v.Z().transpose())));
  return {v.prefactor() * t * expi_pi(central) * expi_pi(shift), v.Omega(), Znew, v.index()};
}

GaussianVector act_tb(const RealSymMatrix& b, const GaussianVector& v) {
  if (b.size() != v.n()) throw DimensionError("act_tb: dimension mismatch");
  return {v.prefactor(), ComplexSymMatrix(v.Omega().matrix() + b.matrix()), v.Z(), v.index()};
}

GaussianVector act_galpha(const RMatrix& alpha, const GaussianVector& v) {
  if (!alpha.square() || alpha.rows() != v.n()) throw DimensionError("act_galpha: dimension mismatch");
  const double det = determinant(alpha);
  if (std::abs(det) < kSingularTolerance) throw SingularError("act_galpha: alpha is singular");
  const CMatrix a = to_complex(alpha);
  const auto om = ComplexSymMatrix::symmetrized(a.transpose() * v.Omega().matrix() * a);
  return {v.prefactor() * principal_half_power(det, static_cast<int>(v.m())), om, v.Z() * a,
          v.index()};
}

GaussianVector act_sigma(const GaussianVector& v) {
  const CMatrix& W = v.Omega().matrix();
  const CMatrix Winv = inverse(W);
  const CMatrix ZW = v.Z() * Winv;
  const cplx q = trace(to_complex(v.index().matrix()) * ZW * v.Z().transpose());
  const cplx factor = principal_half_power(determinant(W), -static_cast<int>(v.m())) * expi_pi(-q);
  return {v.prefactor() * factor, ComplexSymMatrix::symmetrized(-Winv), ZW, v.index()};
}

GaussianVector act_generator(const Generator& g, const GaussianVector& v) {
  switch (g.kind) {
    case GeneratorKind::Heisenberg:
      return act_heisenberg(1.0, g.h, v);
    case GeneratorKind::Translation:
      return act_tb(g.b, v);
    case GeneratorKind::Scaling:
      return act_galpha(g.alpha, v);
    case GeneratorKind::Sigma:
      return act_sigma(v);
  }
  throw DomainError("act_generator: unknown kind");
}

GaussianVector act_word(const Word& w, const GaussianVector& v) {
  GaussianVector r = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = act_generator(*it, r);
  return r;
}

cplx sqrt_det_omega_over_i(const ComplexSymMatrix& omega) {
  // Omega/i = Y - iX = L (I - i S) L^t with Y = L L^t, S = L^{-1} X L^{-t};
  // each factor 1 - i s_k has positive real part, so taking principal roots
  // factor by factor stays on the branch that is positive at X = 0.
  const RMatrix Y = omega.imag();
  const RMatrix X = omega.real();
  const RMatrix L = cholesky(Y);
  const RMatrix Linv = inverse(L);
  const RMatrix S = Linv * X * Linv.transpose();
  const auto eig = jacobi_eigen(RealSymMatrix::symmetrized(S).matrix());
  cplx r = 1.0;
  for (std::size_t i = 0; i < L.rows(); ++i) r *= L(i, i);
  for (double s : eig.values) r *= principal_sqrt(cplx(1.0, -s));
  return r;
}

cplx gaussian_integral(const IndexMatrix& M, const ComplexSymMatrix& omega, const CMatrix& Z) {
  if (Z.rows() != M.m() || Z.cols() != omega.size())
    throw DimensionError("gaussian_integral: dimension mismatch");
  if (!M.positiveDefinite()) throw DomainError("gaussian_integral: M must be positive definite");
  const int m = static_cast<int>(M.m());
  const double n = static_cast<double>(omega.size());
  const CMatrix ZW = solve(omega.matrix().transpose(), Z.transpose()).transpose();  // Z Omega^{-1}
  const cplx q = trace(to_complex(M.matrix()) * ZW * Z.transpose());
  return std::pow(M.det(), -n / 2.0) * std::pow(sqrt_det_omega_over_i(omega), -m) * expi_pi(-q);
}

SampleResult sample(const GaussianVector& v, const GridSpec& grid) {
  if (grid.m() != v.m() || grid.n() != v.n()) throw DimensionError("sample: grid shape mismatch");
  const auto f = v.form();
  GridFunction out(grid);
  kernels::gaussian_sample(out.values(), grid.shape(), f.A, f.b, f.pref);
  const auto& g = grid.shape();
  double peak = 0.0, edge = 0.0;
  std::vector<std::size_t> k(g.dim);
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    const double a = std::abs(out[flat]);
    peak = std::max(peak, a);
    kernels::detail::unflatten(flat, g, k.data());
    for (std::size_t ax = 0; ax < g.dim; ++ax)
      if (k[ax] == 0 || k[ax] + 1 == g.points) {
        edge = std::max(edge, a);
        break;
      }
  }
  SampleResult r{std::move(out), peak > 0.0 ? edge / peak : 0.0, false};
  r.supportOverflow = r.boundaryRatio >= 1e-14;
  return r;
}

GridFunction numeric_heisenberg(cplx t, const IndexMatrix& M, const HeisenbergElement& h,
                                const GridFunction& f) {
  GridFunction out = schrodinger_apply(CentralCharacter(M.entries()), h, f);
  out *= t;
  return out;
}

GridFunction numeric_tb(const IndexMatrix& M, const RealSymMatrix& b, const GridFunction& f) {
  const auto& spec = f.spec();
  if (M.m() != spec.m() || b.size() != spec.n()) throw DimensionError("numeric_tb: dimension mismatch");
  // tr(M x b x^t) = vec(x)^t (M kron b) vec(x).
  const RMatrix Q = kron(M.matrix(), b.matrix());
  GridFunction out(spec);
  kernels::chirp(f.values(), out.values(), spec.shape(), Q);
  return out;
}

GridFunction numeric_galpha(const RMatrix& alpha, const GridFunction& f) {
  const auto& spec = f.spec();
  if (spec.dim() != 1 || alpha.rows() != 1 || alpha.cols() != 1)
    throw DimensionError("numeric_galpha: only m = n = 1 is supported");
  const double a = alpha(0, 0);
  if (std::abs(a) < kSingularTolerance) throw SingularError("numeric_galpha: alpha is singular");
  const std::size_t P = spec.points_per_axis();
  const double L = spec.L();
  // Trigonometric interpolant of the periodic samples; the Nyquist mode is
  // split evenly between +P/2 and -P/2 so real data stays real.
  const long half = static_cast<long>(P / 2);
  std::vector<cplx> coef(P);
  for (std::size_t q = 0; q < P; ++q) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < P; ++j)
      acc += f[j] * std::polar(1.0, -2.0 * pi * static_cast<double>(q * j % P) / static_cast<double>(P));
    coef[q] = acc / static_cast<double>(P);
  }
  GridFunction out(spec);
  const cplx scale = principal_half_power(a, 1);
  for (std::size_t k = 0; k < P; ++k) {
    const double y = a * (-L + static_cast<double>(k) * spec.delta());
    const double u = (y + L) / (2.0 * L);  // period 1 in u
    cplx acc = 0.0;
    for (long q = -half; q <= half; ++q) {
      const std::size_t idx = static_cast<std::size_t>((q % static_cast<long>(P) + static_cast<long>(P)) %
                                                       static_cast<long>(P));
      const double w = (P % 2 == 0 && (q == half || q == -half)) ? 0.5 : 1.0;
      acc += w * coef[idx] * std::polar(1.0, 2.0 * pi * static_cast<double>(q) * u);
    }
    out.values()[k] = scale * acc;
  }
  return out;
}

GridFunction numeric_sigma(const IndexMatrix& M, const GridFunction& f) {
  const auto& spec = f.spec();
  if (spec.dim() != 1 || M.m() != 1) throw DimensionError("numeric_sigma: only m = n = 1 is supported");
  const double s = M.matrix()(0, 0);
  if (2.0 * std::abs(s) * spec.L() * spec.delta() > 1.0 + 1e-12)
    throw PreconditionError("numeric_sigma: frequencies M x exceed the grid's Nyquist limit (need 2 M L delta <= 1)");
  const cplx scale = principal_half_power(cplx(0.0, -1.0), 1) * std::sqrt(s);
  GridFunction out(spec);
  kernels::fourier_1d(f.values(), out.values(), spec.shape(), s, scale);
  return out;
}

}  // namespace sjt
