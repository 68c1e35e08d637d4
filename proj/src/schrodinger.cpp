#include "sjt/schrodinger.hpp"

#include <numbers>

namespace sjt {

GridSpec::GridSpec(std::size_t m, std::size_t n, double L, double delta)
    : m_(m), n_(n), P_(0), L_(L), delta_(delta) {
  if (m == 0 || n == 0) throw DimensionError("GridSpec: empty shape");
  if (!(L > 0.0) || !(delta > 0.0)) throw PreconditionError("GridSpec: need L > 0 and delta > 0");
  const double p = 2.0 * L / delta;
  const double pr = std::round(p);
  if (pr < 1.0 || std::abs(p - pr) > 1e-9 * pr)
    throw PreconditionError("GridSpec: 2L/delta must be a positive integer");
  P_ = static_cast<std::size_t>(pr);
  shape_ = {m * n, P_, L, delta};
}

RMatrix GridSpec::point(std::size_t flat) const {
  std::vector<std::size_t> k(dim());
  kernels::detail::unflatten(flat, shape_, k.data());
  RMatrix x(m_, n_);
  for (std::size_t a = 0; a < dim(); ++a) x.data()[a] = kernels::detail::coord(k[a], shape_);
  return x;
}

GridFunction::GridFunction(GridSpec spec) : spec_(spec), values_(spec.size()) {}

GridFunction::GridFunction(GridSpec spec, std::vector<cplx> values)
    : spec_(spec), values_(std::move(values)) {
  if (values_.size() != spec_.size()) throw DimensionError("GridFunction: value count != grid size");
}

double GridFunction::norm() const {
  double s = 0.0;
  for (const auto& v : values_) s += std::norm(v);
  return std::sqrt(s * std::pow(spec_.delta(), static_cast<double>(spec_.dim())));
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
  if (!(spec_ == o.spec_)) throw DimensionError("GridFunction: grids differ");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
  if (!(spec_ == o.spec_)) throw DimensionError("GridFunction: grids differ");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

GridFunction& GridFunction::operator*=(cplx s) {
  for (auto& v : values_) v *= s;
  return *this;
}

GridFunction parity(const GridFunction& f) {
  const auto& g = f.spec().shape();
  GridFunction out(f.spec());
  std::vector<std::size_t> k(g.dim);
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    kernels::detail::unflatten(flat, g, k.data());
    std::size_t src = 0;
    for (std::size_t a = 0; a < g.dim; ++a) src = src * g.points + (g.points - k[a]) % g.points;
    out.values()[flat] = f[src];
  }
  return out;
}

CentralCharacter::CentralCharacter(RealSymMatrix c) : c_(std::move(c)) {
  if (max_abs(c_.matrix()) == 0.0) throw PreconditionError("CentralCharacter: c must be nonzero");
}

std::pair<HeisenbergElement, HeisenbergElement> mackey_decompose(const HeisenbergElement& h) {
  const std::size_t m = h.m(), n = h.n();
  HeisenbergElement l(RMatrix(m, n), h.mu(), h.kappa() + h.mu() * h.lambda().transpose());
  HeisenbergElement s(h.lambda(), RMatrix(m, n), RMatrix(m, m));
  return {std::move(l), std::move(s)};
}

GridFunction schrodinger_apply(const CentralCharacter& c, const HeisenbergElement& h0,
                               const GridFunction& f) {
  const auto& spec = f.spec();
  if (h0.m() != spec.m() || h0.n() != spec.n() || c.c().size() != spec.m())
    throw DimensionError("schrodinger_apply: dimension mismatch");
  const std::size_t d = spec.dim();
  std::vector<long> shift(d);
  for (std::size_t a = 0; a < d; ++a) {
    const double s = h0.lambda().data()[a] / spec.delta();
    const double sr = std::round(s);
    if (std::abs(s - sr) > 1e-9 * std::max(1.0, std::abs(s)))
      throw PreconditionError("schrodinger_apply: lambda0 is not a multiple of the grid spacing");
    shift[a] = static_cast<long>(sr);
  }
  const RMatrix& C = c.c().matrix();
  const double central =
      trace(C * (h0.kappa() + h0.mu() * h0.lambda().transpose()));
  const RMatrix cmu = C * h0.mu();
  const std::vector<double> w = vec(cmu);
  GridFunction out(spec);
  kernels::phase_shift(f.values(), out.values(), spec.shape(), shift, w,
                       std::polar(1.0, std::numbers::pi * central));
  return out;
}

}  // namespace sjt
