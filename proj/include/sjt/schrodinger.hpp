#pragma once

// Schrodinger representation W_c of the Heisenberg group on functions of
// lambda in R^{m x n}, discretised on a periodic uniform grid.

#include <utility>
#include <vector>

#include "sjt/groups.hpp"
#include "sjt/kernels.hpp"

namespace sjt {

/// Uniform periodic grid on [-L, L)^{m n}. Coordinates of a grid point are
/// stored in vec order: entry (a, j) of lambda is axis a*n + j.
class GridSpec {
 public:
  /// Throws PreconditionError unless L, delta > 0 and 2L/delta is an integer.
  GridSpec(std::size_t m, std::size_t n, double L = 8.0, double delta = 1.0 / 16.0);

  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return m_ * n_; }
  std::size_t points_per_axis() const noexcept { return P_; }
  std::size_t size() const noexcept { return shape_.size(); }
  double L() const noexcept { return L_; }
  double delta() const noexcept { return delta_; }
  const kernels::GridShape& shape() const noexcept { return shape_; }

  /// The point with flat index `flat` as an m x n matrix.
  RMatrix point(std::size_t flat) const;

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.L_ == b.L_ && a.delta_ == b.delta_;
  }

 private:
  std::size_t m_, n_, P_;
  double L_, delta_;
  kernels::GridShape shape_;
};

class GridFunction {
 public:
  explicit GridFunction(GridSpec spec);
  GridFunction(GridSpec spec, std::vector<cplx> values);

  const GridSpec& spec() const noexcept { return spec_; }
  std::span<const cplx> values() const noexcept { return values_; }
  std::span<cplx> values() noexcept { return values_; }
  cplx operator[](std::size_t i) const { return values_[i]; }

  /// Discrete L2 norm, (delta^d sum |f|^2)^{1/2}.
  double norm() const;

  GridFunction& operator+=(const GridFunction& o);
  GridFunction& operator-=(const GridFunction& o);
  GridFunction& operator*=(cplx s);
  friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
  friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
  friend GridFunction operator*(cplx s, GridFunction a) { return a *= s; }

 private:
  GridSpec spec_;
  std::vector<cplx> values_;
};

/// f(x) -> f(-x); grid index k goes to (P - k) mod P on every axis.
GridFunction parity(const GridFunction& f);

class CentralCharacter {
 public:
  /// Throws PreconditionError for c = 0.
  explicit CentralCharacter(RealSymMatrix c);
  const RealSymMatrix& c() const noexcept { return c_; }

 private:
  RealSymMatrix c_;
};

/// h = l o s with l = (0, mu; kappa + mu lambda^t), s = (lambda, 0; 0).
std::pair<HeisenbergElement, HeisenbergElement> mackey_decompose(const HeisenbergElement& h);

/// (W_c(h0) f)(lambda) = e^{pi i tr(c(kappa0 + mu0 lambda0^t + 2 lambda mu0^t))} f(lambda + lambda0).
/// lambda0 must be a whole number of grid steps in every entry.
GridFunction schrodinger_apply(const CentralCharacter& c, const HeisenbergElement& h0,
                               const GridFunction& f);

}  // namespace sjt
