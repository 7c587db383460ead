#pragma once

#include <complex>
#include <vector>

#include "qconf/grid.hpp"

namespace qconf {

using cdouble = std::complex<double>;

/// Complex grid function over the interior nodes of an operator layout,
/// with the h-weighted inner product <a, b> = h * sum conj(a_j) b_j.
struct WaveFunction {
  NodeLayout layout;
  std::vector<cdouble> amp;

  explicit WaveFunction(const NodeLayout& l) : layout(l), amp(l.size(), cdouble{0.0, 0.0}) {}
  WaveFunction(const NodeLayout& l, std::vector<cdouble> a);

  int size() const { return static_cast<int>(amp.size()); }
};

cdouble inner(const WaveFunction& a, const WaveFunction& b);
double norm_squared(const WaveFunction& psi);
double norm(const WaveFunction& psi);

/// Multiplication by the characteristic function of region k: zeroes every
/// amplitude on nodes the layout assigns to the other region. Idempotent,
/// and project_region(psi, left) + project_region(psi, right) == psi.
WaveFunction project_region(const WaveFunction& psi, Region k);

/// ||P_k psi||^2 / ||psi||^2. Domain error on the zero state.
double region_probability(const WaveFunction& psi, Region k);

/// Probability carried by nodes within distance 2h of the truncation walls
/// at +-L; used to monitor whether the hard walls are being touched.
double wall_probability(const WaveFunction& psi);

}  // namespace qconf
