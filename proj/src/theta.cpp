#include "sjt/theta.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <numeric>

#include "sjt/kernels.hpp"

namespace sjt {

using std::numbers::pi;

namespace {

cplx expi_pi(cplx s) { return std::exp(cplx(0.0, pi) * s); }

bool near_integer(double v) { return std::abs(v - std::round(v)) <= 1e-9; }

bool integral(const RMatrix& a) {
  return std::all_of(a.data().begin(), a.data().end(), near_integer);
}

struct Enumerator {
  std::size_t d;
  RMatrix R;  // upper triangular, Y = R^t R
  std::span<const double> c;
  std::size_t cap;
  std::vector<int> xi;
  EllipsoidPoints out;
  bool overflow = false;

  void run(std::size_t i, double rem, double used) {
    double s = c[i];
    for (std::size_t j = i + 1; j < d; ++j) s += R(i, j) / R(i, i) * (xi[j] + c[j]);
    const double center = -s;
    const double rii2 = R(i, i) * R(i, i);
    const double w = std::sqrt(std::max(rem, 0.0) / rii2);
    const long lo = static_cast<long>(std::ceil(center - w));
    const long hi = static_cast<long>(std::floor(center + w));
    for (long v = lo; v <= hi && !overflow; ++v) {
      const double t = rii2 * (v - center) * (v - center);
      if (t > rem) continue;
      xi[i] = static_cast<int>(v);
      if (i == 0) {
        if (out.count() >= cap) {
          overflow = true;
          return;
        }
        out.points.insert(out.points.end(), xi.begin(), xi.end());
        out.norms.push_back(used + t);
      } else {
        run(i - 1, rem - t, used + t);
      }
    }
    xi[i] = 0;
  }
};

}  // namespace

std::optional<EllipsoidPoints> enumerate_ellipsoid(const RMatrix& Y, std::span<const double> c, double r2,
                                                   std::size_t cap) {
  const std::size_t d = Y.rows();
  if (!Y.square() || c.size() != d) throw DimensionError("enumerate_ellipsoid: shape mismatch");
  Enumerator e{d, cholesky(Y).transpose(), c, cap, std::vector<int>(d), {}, false};
  e.out.dim = d;
  if (d == 0) return e.out;
  // Slack so that every excluded point certainly lies outside radius r.
  e.run(d - 1, r2 * (1.0 + 1e-10) + 1e-300, 0.0);
  if (e.overflow) return std::nullopt;

  const std::size_t N = e.out.count();
  std::vector<std::size_t> order(N);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto& pts = e.out.points;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (e.out.norms[a] != e.out.norms[b]) return e.out.norms[a] < e.out.norms[b];
    return std::lexicographical_compare(pts.begin() + a * d, pts.begin() + (a + 1) * d,
                                        pts.begin() + b * d, pts.begin() + (b + 1) * d);
  });
  EllipsoidPoints sorted;
  sorted.dim = d;
  sorted.points.reserve(pts.size());
  sorted.norms.reserve(N);
  for (std::size_t k : order) {
    sorted.points.insert(sorted.points.end(), pts.begin() + k * d, pts.begin() + (k + 1) * d);
    sorted.norms.push_back(e.out.norms[k]);
  }
  return sorted;
}

double shortest_vector_length(const RMatrix& Y) {
  const std::size_t d = Y.rows();
  double r2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d; ++i) r2 = std::min(r2, Y(i, i));
  const std::vector<double> zero(d, 0.0);
  const auto pts = enumerate_ellipsoid(Y, zero, r2, kTermCap);
  if (!pts) throw ResourceError("shortest_vector_length: too many short vectors", 0.0);
  double best = r2;
  for (std::size_t k = 0; k < pts->count(); ++k)
    if (pts->norms[k] > 0.0) best = std::min(best, pts->norms[k]);
  return std::sqrt(best);
}

double gaussian_tail(double r, double delta, std::size_t dim) {
  // Shell j: r + j h < |x + c| <= r + (j + 1) h, at most N(r + (j+1) h) points,
  // each below exp(-pi (r + j h)^2). Once consecutive shell bounds shrink by
  // more than half (and the ratio only decreases from there) the remainder
  // is at most the last shell bound.
  const double h = 0.1;
  const double dd = static_cast<double>(dim);
  auto shell = [&](long j) {
    const double outer = r + (j + 1) * h, inner = r + j * h;
    return std::exp(dd * std::log1p(2.0 * outer / delta) - pi * inner * inner);
  };
  double sum = 0.0;
  double prev = shell(0);
  sum += prev;
  for (long j = 1; j < 1'000'000; ++j) {
    const double t = shell(j);
    sum += t;
    if (t < 0.5 * prev && t <= 1e-30 * sum) return sum + t;
    if (t == 0.0) return sum;
    prev = t;
  }
  return std::numeric_limits<double>::infinity();
}

double dominant_scale(const RMatrix& Y, std::span<const double> beta, double prefAbs) {
  RMatrix bcol(beta.size(), 1);
  for (std::size_t i = 0; i < beta.size(); ++i) bcol(i, 0) = beta[i];
  const RMatrix c = solve(Y, bcol);
  double bc = 0.0;
  for (std::size_t i = 0; i < beta.size(); ++i) bc += beta[i] * c(i, 0);
  return prefAbs * std::exp(pi * bc);
}

void ThetaPlan::init(const RMatrix& Y, std::vector<double> beta, double prefAbs) {
  if (!Y.square() || beta.size() != Y.rows()) throw DimensionError("ThetaPlan: shape mismatch");
  Y_ = Y;
  beta_ = std::move(beta);
  RMatrix bcol(beta_.size(), 1);
  for (std::size_t i = 0; i < beta_.size(); ++i) bcol(i, 0) = beta_[i];
  const RMatrix c = solve(Y_, bcol);
  c_.assign(c.data().begin(), c.data().end());
  prefAbs_ = prefAbs;
  K_ = dominant_scale(Y_, beta_, prefAbs);
  delta_ = shortest_vector_length(Y_);
}

double ThetaPlan::tail_at(double r) const { return K_ * gaussian_tail(r, delta_, Y_.rows()); }

ThetaPlan::ThetaPlan(const RMatrix& Y, std::vector<double> beta, double prefAbs, double eps,
                     std::size_t cap) {
  if (!(eps > 0.0)) throw PreconditionError("ThetaPlan: eps must be positive");
  init(Y, std::move(beta), prefAbs);
  double r = 1.0;
  while (tail_at(r) > eps) {
    r += 0.05;
    if (r > 1e4) throw ResourceError("ThetaPlan: no radius reaches the requested accuracy", tail_at(r));
  }
  auto pts = enumerate_ellipsoid(Y_, c_, r * r, cap);
  if (!pts) {
    double lo = 0.0, hi = r;
    for (int it = 0; it < 40; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (enumerate_ellipsoid(Y_, c_, mid * mid, cap)) lo = mid;
      else hi = mid;
    }
    throw ResourceError("theta truncation needs more than " + std::to_string(cap) + " terms",
                        tail_at(lo));
  }
  radius_ = r;
  tail_ = tail_at(r);
  pts_ = std::move(*pts);
}

ThetaPlan ThetaPlan::with_radius(const RMatrix& Y, std::vector<double> beta, double prefAbs, double r,
                                 std::size_t cap) {
  ThetaPlan p;
  p.init(Y, std::move(beta), prefAbs);
  auto pts = enumerate_ellipsoid(p.Y_, p.c_, r * r, cap);
  if (!pts) throw ResourceError("ThetaPlan: radius exceeds the term cap", p.tail_at(r));
  p.radius_ = r;
  p.tail_ = p.tail_at(r);
  p.pts_ = std::move(*pts);
  return p;
}

bool ThetaPlan::matches(const GaussianForm& f) const {
  if (f.dim() != Y_.rows()) return false;
  const double tol = 1e-10 * std::max(1.0, max_abs(Y_));
  if (max_abs_diff(imag_part(f.A), Y_) > tol) return false;
  for (std::size_t i = 0; i < f.dim(); ++i)
    if (std::abs(f.b[i].imag() - beta_[i]) > 1e-10 * std::max(1.0, std::abs(beta_[i]))) return false;
  return std::abs(f.pref) <= prefAbs_ * (1.0 + 1e-12);
}

cplx ThetaPlan::evaluate(const GaussianForm& f) const {
  if (!matches(f)) throw PreconditionError("ThetaPlan::evaluate: form not covered by this plan");
  return kernels::lattice_sum(pts_.points, pts_.dim, f.A, f.b, f.pref);
}

namespace {

std::vector<double> imag_vec(const std::vector<cplx>& b) {
  std::vector<double> r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i].imag();
  return r;
}

ThetaEvaluation from_plan(const ThetaPlan& plan, const GaussianForm& f, double eps) {
  return {plan.evaluate(f), plan.radius(), plan.termCount(), plan.tailBound(), eps, plan.dominantScale()};
}

/// eps relative to the dominant term size.
ThetaEvaluation lattice_sum_relative(const GaussianForm& f, double epsRel) {
  const RMatrix Y = imag_part(f.A);
  const auto beta = imag_vec(f.b);
  const double K = dominant_scale(Y, beta, std::abs(f.pref));
  const ThetaPlan plan(Y, beta, std::abs(f.pref), epsRel * K);
  return from_plan(plan, f, epsRel * K);
}

}  // namespace

ThetaEvaluation lattice_sum(const GaussianForm& f, double eps, std::size_t cap) {
  const ThetaPlan plan(imag_part(f.A), imag_vec(f.b), std::abs(f.pref), eps, cap);
  return from_plan(plan, f, eps);
}

ThetaEvaluation lattice_sum_radius(const GaussianForm& f, double radius, std::size_t cap) {
  const auto plan = ThetaPlan::with_radius(imag_part(f.A), imag_vec(f.b), std::abs(f.pref), radius, cap);
  return from_plan(plan, f, 0.0);
}

ThetaEvaluation theta_eval(const IndexMatrix& M, const SiegelJacobiPoint& p, double eps, std::size_t cap) {
  if (!M.positiveDefinite()) throw DomainError("theta_eval: M must be positive definite");
  if (M.m() != p.m()) throw DimensionError("theta_eval: dimension mismatch");
  if (!(eps > 0.0)) throw PreconditionError("theta_eval: eps must be positive");
  return lattice_sum(make_form(M.matrix(), p.Omega().matrix(), p.Z(), 1.0), eps, cap);
}

CharacterValue character_rho(const IndexMatrix& M, const Generator& g, std::size_t n) {
  const int m = static_cast<int>(M.m());
  switch (g.kind) {
    case GeneratorKind::Heisenberg: {
      if (!integral(g.h.lambda()) || !integral(g.h.mu()) || !integral(g.h.kappa()))
        throw PreconditionError("character_rho: Heisenberg part must be integral");
      const double s = trace(M.matrix() * (g.h.kappa() + g.h.mu() * g.h.lambda().transpose()));
      return {expi_pi(-s)};
    }
    case GeneratorKind::Translation:
      if (!integral(g.b.matrix())) throw PreconditionError("character_rho: b must be integral");
      return {1.0};
    case GeneratorKind::Scaling: {
      if (!integral(g.alpha)) throw PreconditionError("character_rho: alpha must be integral");
      const double det = determinant(g.alpha);
      if (std::abs(std::abs(det) - 1.0) > 1e-9) throw PreconditionError("character_rho: alpha not in GL(n, Z)");
      return {principal_half_power(std::round(det), -m)};
    }
    case GeneratorKind::Sigma:
      return {principal_half_power(cplx(0.0, -1.0), m * static_cast<int>(n))};
  }
  throw PreconditionError("character_rho: unknown generator");
}

bool in_gamma12(const Word& w) {
  for (const auto& g : w) {
    switch (g.kind) {
      case GeneratorKind::Heisenberg:
        if (!integral(g.h.lambda()) || !integral(g.h.mu()) || !integral(g.h.kappa())) return false;
        break;
      case GeneratorKind::Translation: {
        const RMatrix& b = g.b.matrix();
        if (!integral(b)) return false;
        for (std::size_t i = 0; i < b.rows(); ++i)
          if (!near_integer(b(i, i) / 2.0)) return false;
        break;
      }
      case GeneratorKind::Scaling:
        if (!integral(g.alpha) || std::abs(std::abs(determinant(g.alpha)) - 1.0) > 1e-9) return false;
        break;
      case GeneratorKind::Sigma:
        break;
    }
  }
  return true;
}

ThetaTransformReport verify_theta_transformation(const IndexMatrix& M, const Word& word,
                                                 const SiegelJacobiPoint& p, double eps) {
  if (!M.positiveDefinite()) throw DomainError("verify_theta_transformation: M must be positive definite");
  const std::size_t n = p.n(), m = p.m();
  ThetaTransformReport r;
  r.strict = (M.unimodular() && M.even()) ||
             (M.integral() && std::abs(M.det() - 1.0) <= 1e-9 && in_gamma12(word));

  const JacobiElement x = word_element(word, n, m);
  const SiegelJacobiPoint px = act_jacobi(x, p);
  r.lhsEval = lattice_sum_relative(make_form(M.matrix(), px.Omega().matrix(), px.Z(), 1.0), eps);
  r.rhsEval = lattice_sum_relative(make_form(M.matrix(), p.Omega().matrix(), p.Z(), 1.0), eps);
  r.lhs = r.lhsEval.value;
  r.thetaP = r.rhsEval.value;
  r.jWord = automorphic_factor_J(M, x, p).value;

  r.jChain = 1.0;
  r.rhoPredicted = 1.0;
  bool rhoKnown = true;
  SiegelJacobiPoint cur = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const JacobiElement gx = it->element(n, m);
    ThetaStep step{*it, automorphic_factor_J(M, gx, cur).value, std::numeric_limits<double>::quiet_NaN()};
    try {
      step.rho = character_rho(M, *it, n).value;
    } catch (const PreconditionError&) {
      rhoKnown = false;
    }
    r.jChain *= step.J;
    r.rhoPredicted *= step.rho;
    r.steps.push_back(step);
    cur = act_jacobi(gx, cur);
  }
  std::reverse(r.steps.begin(), r.steps.end());

  r.cocycleDefect = std::abs(r.jWord / r.jChain - 1.0);
  r.rhoMeasured = r.lhs / (r.jWord * r.thetaP);
  {
    cplx s8 = r.rhoMeasured * r.rhoMeasured;
    s8 *= s8;
    s8 *= s8;
    r.rhoEighthDefect = std::abs(s8 - 1.0);
  }
  const cplx chained = r.rhoPredicted * r.jChain * r.thetaP;
  const cplx literal = r.rhoPredicted * r.jWord * r.thetaP;
  const double scale = std::max(std::abs(r.lhs), std::abs(r.jChain * r.thetaP));
  r.chainedResidual = std::abs(r.lhs - chained) / scale;
  r.literalResidual = std::abs(r.lhs - literal) / scale;
  r.truncationError = (r.lhsEval.tailBound + std::abs(r.jChain) * r.rhsEval.tailBound) / scale;
  if (!rhoKnown) r.strict = false;
  r.pass = r.strict && r.chainedResidual <= kThetaTransformTol && r.rhoEighthDefect <= kThetaTransformTol;
  return r;
}

PoissonReport poisson_check(const GaussianVector& v, double eps) {
  const std::size_t n = v.n(), m = v.m();
  const IndexMatrix& M = v.index();
  if (!M.positiveDefinite()) throw DomainError("poisson_check: M must be positive definite");
  PoissonReport r;
  r.lhsEval = lattice_sum_relative(v.form(), eps);
  r.lhs = r.lhsEval.value;

  // vhat(y) = c0 (det M)^{-n/2} det(Omega/i)^{-m/2} e^{-pi i tr(M (Z - y) Omega^{-1} (Z - y)^t)};
  // at y = M^{-1} eta this is again a Gaussian in eta, with index M^{-1},
  // Omega'' = -Omega^{-1} and Z'' = M Z Omega^{-1}.
  const CMatrix Winv = inverse(v.Omega().matrix());
  const CMatrix ZW = v.Z() * Winv;
  const CMatrix Mc = to_complex(M.matrix());
  const cplx q = trace(Mc * ZW * v.Z().transpose());
  cplx pref = v.prefactor() * std::pow(M.det(), -static_cast<double>(n) / 2.0);
  const cplx root = sqrt_det_omega_over_i(v.Omega());
  for (std::size_t k = 0; k < m; ++k) pref /= root;
  pref *= expi_pi(-q);
  const GaussianForm dual = make_form(inverse(M.matrix()), -Winv, Mc * ZW, pref);
  r.rhsEval = lattice_sum_relative(dual, eps);
  r.rhs = r.rhsEval.value;
  r.relError = std::abs(r.lhs - r.rhs) / std::abs(r.lhs);
  return r;
}

std::vector<QCoefficient> qexpansion(const IndexMatrix& M, std::size_t n, long maxOrder, std::size_t cap) {
  if (n != 1) throw PreconditionError("qexpansion: only n = 1 is supported");
  if (!M.even() || !M.positiveDefinite())
    throw PreconditionError("qexpansion: M must be even integral positive definite");
  if (maxOrder < 0) throw PreconditionError("qexpansion: maxOrder must be >= 0");
  const std::vector<double> zero(M.m(), 0.0);
  const auto pts = enumerate_ellipsoid(M.matrix(), zero, 2.0 * maxOrder + 0.5, cap);
  if (!pts) {
    long ok = maxOrder;
    while (ok > 0 && !enumerate_ellipsoid(M.matrix(), zero, 2.0 * ok + 0.5, cap)) ok /= 2;
    throw ResourceError("qexpansion: order " + std::to_string(maxOrder) + " exceeds the enumeration cap",
                        static_cast<double>(ok));
  }
  std::vector<QCoefficient> out;
  for (long k = 0; k <= maxOrder; ++k) out.push_back({k, 0});
  for (double q : pts->norms) {
    const long k = std::lround(q / 2.0);
    if (k <= maxOrder) ++out[static_cast<std::size_t>(k)].count;
  }
  return out;
}

cplx qseries_sum(const std::vector<QCoefficient>& coeffs, cplx omega) {
  const cplx q = std::exp(cplx(0.0, 2.0 * pi) * omega);
  cplx s = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    s += static_cast<double>(it->count) * std::pow(q, static_cast<int>(it->exponent));
  }
  return s;
}

}  // namespace sjt
