#pragma once

// Seeded generators for random test data (points, group elements, words).
// Everything draws from std::mt19937_64, so a seed fixes the output.

#include <random>

#include "sjt/groups.hpp"

namespace sjt::rnd {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b);
long integer(Rng& rng, long lo, long hi);  // inclusive

RMatrix matrix(Rng& rng, std::size_t r, std::size_t c, double scale);
RealSymMatrix symmetric(Rng& rng, std::size_t k, double scale);
/// A A^t + minEig I with entries of A in [-scale, scale].
RealSymMatrix spd(Rng& rng, std::size_t k, double scale, double minEig);
/// Random invertible matrix with det > 0 and condition number kept moderate.
RMatrix gl_plus(Rng& rng, std::size_t n);

struct PointOptions {
  double reScale = 1.0;
  double imScale = 0.5;
  double imMin = 0.5;  // added to the diagonal of Im Omega
  double zScale = 0.5;
};
SiegelJacobiPoint point(Rng& rng, std::size_t n, std::size_t m, const PointOptions& o = {});

HeisenbergElement heisenberg(Rng& rng, std::size_t m, std::size_t n, double scale);
/// Entries of lambda, mu in [-bound, bound]; kappa integral as well.
HeisenbergElement integral_heisenberg(Rng& rng, std::size_t m, std::size_t n, long bound);

enum class WordFlavor {
  Real,      // real data: b symmetric, alpha in GL+, any Heisenberg element
  Integral,  // integral data: b integral, alpha in {+-1}-type unimodular, integral h
  Gamma12,   // as Integral, with b of even diagonal
};

Generator generator(Rng& rng, std::size_t n, std::size_t m, WordFlavor flavor);
Word word(Rng& rng, std::size_t length, std::size_t n, std::size_t m, WordFlavor flavor);

/// Product of `length` random letters t(b), g(alpha), sigma.
SymplecticElement symplectic(Rng& rng, std::size_t n, std::size_t length);

/// Smallest eigenvalue of Im Omega over the orbit p, g_k p, g_{k-1} g_k p, ...
/// of the word applied right to left.
double chain_min_imag(const Word& w, const SiegelJacobiPoint& p);

/// Word of the given length grown right to left from p: each new letter is
/// redrawn (up to 200 times) until the smallest eigenvalue of Im Omega at the
/// new orbit point is at least `floor`. Throws ResourceError if no letter fits.
Word feasible_word(Rng& rng, std::size_t length, const SiegelJacobiPoint& p, WordFlavor flavor, double floor);

}  // namespace sjt::rnd
