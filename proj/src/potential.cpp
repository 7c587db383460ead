#include "qconf/potential.hpp"

#include <cmath>
#include <stdexcept>

#include "qconf/errors.hpp"

namespace qconf {

Potential Potential::zero() { return Potential{}; }

Potential Potential::harmonic(double omega) {
  if (!std::isfinite(omega)) throw std::invalid_argument("harmonic omega must be finite");
  Potential v;
  v.kind_ = Kind::harmonic;
  v.omega_ = omega;
  return v;
}

Potential Potential::square_well(double depth, double width) {
  if (!std::isfinite(depth) || !std::isfinite(width) || width <= 0.0)
    throw std::invalid_argument("square well needs finite depth and positive width");
  Potential v;
  v.kind_ = Kind::square_well;
  v.depth_ = depth;
  v.width_ = width;
  return v;
}

Potential Potential::tabulated(std::vector<std::pair<double, double>> nodes) {
  if (nodes.size() < 2)
    throw config_error(0, "tabulated potential needs at least 2 nodes");
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!(nodes[i].first < nodes[i + 1].first))
      throw config_error(0, "tabulated potential nodes must have strictly increasing x");
  }
  for (const auto& [x, val] : nodes) {
    if (!std::isfinite(x) || !std::isfinite(val))
      throw config_error(0, "tabulated potential nodes must be finite");
  }
  Potential v;
  v.kind_ = Kind::tabulated;
  v.nodes_ = std::move(nodes);
  return v;
}

Potential& Potential::set_quad_bound_k(double k) {
  if (!(k >= 0.0) || !std::isfinite(k))
    throw std::invalid_argument("quad_bound_k must be a finite nonnegative real");
  quad_bound_k_ = k;
  return *this;
}

double Potential::eval(double x) const {
  if (!std::isfinite(x)) throw std::invalid_argument("potential evaluated at non-finite x");
  switch (kind_) {
    case Kind::zero:
      return 0.0;
    case Kind::harmonic:
      return omega_ * omega_ * x * x;
    case Kind::square_well:
      return std::fabs(x) <= 0.5 * width_ ? depth_ : 0.0;
    case Kind::tabulated: {
      if (x <= nodes_.front().first) return nodes_.front().second;
      if (x >= nodes_.back().first) return nodes_.back().second;
      // nodes_ has >= 2 strictly increasing entries and x is interior here
      std::size_t hi = 1;
      while (nodes_[hi].first < x) ++hi;
      const auto& [x0, v0] = nodes_[hi - 1];
      const auto& [x1, v1] = nodes_[hi];
      const double t = (x - x0) / (x1 - x0);
      return v0 + t * (v1 - v0);
    }
  }
  throw std::logic_error("unreachable potential kind");
}

bool Potential::growth_condition_ok(double x0, double x_max, int samples_per_side) const {
  if (!(x_max > x0) || samples_per_side < 1)
    throw std::invalid_argument("growth check needs x_max > x0 and at least one sample");
  const double k = quad_bound_k_;
  for (int i = 1; i <= samples_per_side; ++i) {
    const double x = x0 + (x_max - x0) * i / samples_per_side;
    if (!(eval(x) > -k * x * x)) return false;
    if (!(eval(-x) > -k * x * x)) return false;
  }
  return true;
}

std::vector<double> eval_on_grid(const Potential& v, const NodeLayout& layout) {
  std::vector<double> values(layout.size());
  for (int i = 0; i < layout.size(); ++i) values[i] = v.eval(layout.x(i));
  return values;
}

}  // namespace qconf
