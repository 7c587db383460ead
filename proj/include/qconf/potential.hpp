#pragma once

#include <utility>
#include <vector>

#include "qconf/grid.hpp"

namespace qconf {

/// Regular real potential V(x): locally integrable and bounded below by
/// -k x^2 at large |x|. Immutable after construction; evaluation is pure.
class Potential {
 public:
  enum class Kind { zero, harmonic, square_well, tabulated };

  static Potential zero();
  /// V(x) = omega^2 x^2.
  static Potential harmonic(double omega);
  /// V(x) = depth for |x| <= width/2, 0 outside.
  static Potential square_well(double depth, double width);
  /// Piecewise-linear interpolation through (x, V) nodes with strictly
  /// increasing x; constant extension by the outermost nodal values.
  /// Fewer than 2 nodes or non-monotone x is a configuration error.
  static Potential tabulated(std::vector<std::pair<double, double>> nodes);

  Kind kind() const { return kind_; }

  /// Quadratic growth-bound constant k (the k in V(x) > -k x^2).
  double quad_bound_k() const { return quad_bound_k_; }
  Potential& set_quad_bound_k(double k);

  double eval(double x) const;

  /// True when V(x) > -k x^2 holds at every sample with x0 < |x| <= x_max.
  bool growth_condition_ok(double x0, double x_max, int samples_per_side) const;

 private:
  Potential() = default;
  Kind kind_ = Kind::zero;
  double omega_ = 0.0;
  double depth_ = 0.0;
  double width_ = 0.0;
  std::vector<std::pair<double, double>> nodes_;
  double quad_bound_k_ = 1.0;
};

inline double eval(const Potential& v, double x) { return v.eval(x); }

/// V sampled at every node of the layout, in operator-assembly order
/// (left block then right block).
std::vector<double> eval_on_grid(const Potential& v, const NodeLayout& layout);

}  // namespace qconf
