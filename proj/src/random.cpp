#include "sjt/random.hpp"

namespace sjt::rnd {

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

long integer(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

RMatrix matrix(Rng& rng, std::size_t r, std::size_t c, double scale) {
  RMatrix a(r, c);
  for (auto& v : a.data()) v = uniform(rng, -scale, scale);
  return a;
}

RealSymMatrix symmetric(Rng& rng, std::size_t k, double scale) {
  return RealSymMatrix::symmetrized(matrix(rng, k, k, scale));
}

RealSymMatrix spd(Rng& rng, std::size_t k, double scale, double minEig) {
  const RMatrix a = matrix(rng, k, k, scale);
  return RealSymMatrix::symmetrized(a * a.transpose() + minEig * RMatrix::identity(k));
}

RMatrix gl_plus(Rng& rng, std::size_t n) {
  // identity plus a perturbation keeps the singular values in [0.5, 1.5]
  RMatrix a = RMatrix::identity(n) + matrix(rng, n, n, 0.5 / static_cast<double>(n));
  if (uniform(rng, 0.0, 1.0) < 0.5) a = -a;
  if (determinant(a) < 0.0)
    for (std::size_t j = 0; j < n; ++j) a(0, j) = -a(0, j);
  return a;
}

SiegelJacobiPoint point(Rng& rng, std::size_t n, std::size_t m, const PointOptions& o) {
  const RMatrix X = symmetric(rng, n, o.reScale).matrix();
  const RMatrix Y = spd(rng, n, o.imScale, o.imMin).matrix();
  CMatrix Z = make_complex(matrix(rng, m, n, o.zScale), matrix(rng, m, n, o.zScale));
  return {ComplexSymMatrix(make_complex(X, Y)), std::move(Z)};
}

HeisenbergElement heisenberg(Rng& rng, std::size_t m, std::size_t n, double scale) {
  RMatrix lambda = matrix(rng, m, n, scale);
  RMatrix mu = matrix(rng, m, n, scale);
  RMatrix kappa = symmetric(rng, m, scale).matrix() - mu * lambda.transpose();
  return {std::move(lambda), std::move(mu), std::move(kappa)};
}

namespace {

RMatrix integer_matrix(Rng& rng, std::size_t r, std::size_t c, long bound) {
  RMatrix a(r, c);
  for (auto& v : a.data()) v = static_cast<double>(integer(rng, -bound, bound));
  return a;
}

RealSymMatrix integer_symmetric(Rng& rng, std::size_t k, long bound, bool evenDiagonal) {
  RMatrix a(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    a(i, i) = static_cast<double>(integer(rng, -bound, bound));
    if (evenDiagonal) a(i, i) *= 2.0;
    for (std::size_t j = i + 1; j < k; ++j) a(i, j) = a(j, i) = static_cast<double>(integer(rng, -bound, bound));
  }
  return RealSymMatrix(a);
}

// Product of a few elementary matrices times a signed permutation-free diagonal.
RMatrix unimodular(Rng& rng, std::size_t n) {
  RMatrix a = RMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    if (uniform(rng, 0.0, 1.0) < 0.5) a(i, i) = -1.0;
  if (n > 1) {
    for (int s = 0; s < 2; ++s) {
      const auto i = static_cast<std::size_t>(integer(rng, 0, static_cast<long>(n) - 1));
      auto j = static_cast<std::size_t>(integer(rng, 0, static_cast<long>(n) - 2));
      if (j >= i) ++j;
      RMatrix e = RMatrix::identity(n);
      e(i, j) = static_cast<double>(integer(rng, -1, 1));
      a = a * e;
    }
  }
  return a;
}

}  // namespace

HeisenbergElement integral_heisenberg(Rng& rng, std::size_t m, std::size_t n, long bound) {
  RMatrix lambda = integer_matrix(rng, m, n, bound);
  RMatrix mu = integer_matrix(rng, m, n, bound);
  RMatrix kappa = integer_symmetric(rng, m, bound, false).matrix() - mu * lambda.transpose();
  return {std::move(lambda), std::move(mu), std::move(kappa)};
}

Generator generator(Rng& rng, std::size_t n, std::size_t m, WordFlavor flavor) {
  const long pick = integer(rng, 0, 3);
  const bool real = flavor == WordFlavor::Real;
  switch (pick) {
    case 0:
      return Generator::heis(real ? heisenberg(rng, m, n, 0.5) : integral_heisenberg(rng, m, n, 1));
    case 1:
      return Generator::trans(real ? symmetric(rng, n, 1.0)
                                   : integer_symmetric(rng, n, 1, flavor == WordFlavor::Gamma12));
    case 2:
      return Generator::scale(real ? gl_plus(rng, n) : unimodular(rng, n));
    default:
      return Generator::sigma();
  }
}

Word word(Rng& rng, std::size_t length, std::size_t n, std::size_t m, WordFlavor flavor) {
  Word w;
  w.reserve(length);
  for (std::size_t k = 0; k < length; ++k) w.push_back(generator(rng, n, m, flavor));
  return w;
}

SymplecticElement symplectic(Rng& rng, std::size_t n, std::size_t length) {
  SymplecticElement g = SymplecticElement::identity(n);
  for (std::size_t k = 0; k < length; ++k) {
    switch (integer(rng, 0, 2)) {
      case 0:
        g = symplectic_mul(g, gen_t(symmetric(rng, n, 1.0)));
        break;
      case 1:
        g = symplectic_mul(g, gen_g(gl_plus(rng, n)));
        break;
      default:
        g = symplectic_mul(g, gen_sigma(n));
    }
  }
  return g;
}

double chain_min_imag(const Word& w, const SiegelJacobiPoint& p) {
  SiegelJacobiPoint q = p;
  double low = jacobi_eigen(q.Omega().imag()).values.front();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    q = act_jacobi(it->element(q.n(), q.m()), q);
    low = std::min(low, jacobi_eigen(q.Omega().imag()).values.front());
  }
  return low;
}

Word feasible_word(Rng& rng, std::size_t length, const SiegelJacobiPoint& p, WordFlavor flavor, double floor) {
  Word w(length);
  SiegelJacobiPoint q = p;
  for (std::size_t k = length; k-- > 0;) {
    bool placed = false;
    for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
      Generator g = generator(rng, q.n(), q.m(), flavor);
      SiegelJacobiPoint next = act_jacobi(g.element(q.n(), q.m()), q);
      if (jacobi_eigen(next.Omega().imag()).values.front() < floor) continue;
      w[k] = std::move(g);
      q = std::move(next);
      placed = true;
    }
    if (!placed) throw ResourceError("feasible_word: no letter keeps Im Omega above the floor", floor);
  }
  return w;
}

}  // namespace sjt::rnd
