#include "diracosc/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace diracosc {

namespace {

void check_size(int n) {
  if (n < 16) throw std::invalid_argument("RadialGrid: need at least 16 interior points");
}

}  // namespace

RadialGrid RadialGrid::uniform(double r_max, int n) {
  if (!(r_max > 0.0)) throw std::invalid_argument("RadialGrid::uniform: r_max must be positive");
  return uniform_interval(0.0, r_max, n);
}

RadialGrid RadialGrid::uniform_interval(double r_lo, double r_hi, int n) {
  check_size(n);
  if (!(r_hi > r_lo)) throw std::invalid_argument("RadialGrid: empty interval");
  RadialGrid g;
  g.mapping = Mapping::Uniform;
  g.lo = r_lo;
  g.hi = r_hi;
  g.n = n;
  g.step = (r_hi - r_lo) / (n + 1);
  g.r.resize(n);
  // trapezoid over the closed interval with the Dirichlet boundary values:
  // each interior node carries h, the two boundary half-cells carry the
  // remaining h/2 + h/2 on the (zero) endpoint samples
  g.w.assign(n, g.step);
  for (int i = 0; i < n; ++i) g.r[i] = r_lo + (i + 1) * g.step;
  return g;
}

RadialGrid RadialGrid::log_mapped(double r_min, double r_max, int n) {
  check_size(n);
  if (!(r_min > 0.0) || !(r_max > r_min))
    throw std::invalid_argument("RadialGrid::log_mapped: need 0 < r_min < r_max");
  RadialGrid g;
  g.mapping = Mapping::LogMapped;
  g.lo = r_min;
  g.hi = r_max;
  g.n = n;
  const double s0 = std::log(r_min);
  g.step = (std::log(r_max) - s0) / (n + 1);
  g.r.resize(n);
  g.w.resize(n);
  for (int i = 0; i < n; ++i) {
    g.r[i] = std::exp(s0 + (i + 1) * g.step);
    g.w[i] = g.r[i] * g.step;  // trapezoid in s with Jacobian dr = r ds
  }
  return g;
}

RadialGrid RadialGrid::refined() const {
  const int n2 = 2 * n + 1;
  if (mapping == Mapping::LogMapped) return log_mapped(lo, hi, n2);
  return uniform_interval(lo, hi, n2);
}

}  // namespace diracosc
