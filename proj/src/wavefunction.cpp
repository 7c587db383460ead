#include "qconf/wavefunction.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qconf {

WaveFunction::WaveFunction(const NodeLayout& l, std::vector<cdouble> a)
    : layout(l), amp(std::move(a)) {
  if (static_cast<int>(amp.size()) != layout.size())
    throw std::invalid_argument("wavefunction amplitude count does not match layout");
}

cdouble inner(const WaveFunction& a, const WaveFunction& b) {
  if (a.layout != b.layout) throw std::invalid_argument("inner product: layout mismatch");
  cdouble acc{0.0, 0.0};
  for (int i = 0; i < a.size(); ++i) acc += std::conj(a.amp[i]) * b.amp[i];
  return a.layout.grid().spacing() * acc;
}

double norm_squared(const WaveFunction& psi) {
  double acc = 0.0;
  for (const cdouble& z : psi.amp) acc += std::norm(z);
  return psi.layout.grid().spacing() * acc;
}

double norm(const WaveFunction& psi) { return std::sqrt(norm_squared(psi)); }

WaveFunction project_region(const WaveFunction& psi, Region k) {
  WaveFunction out = psi;
  for (int i = 0; i < out.size(); ++i)
    if (out.layout.region(i) != k) out.amp[i] = cdouble{0.0, 0.0};
  return out;
}

double region_probability(const WaveFunction& psi, Region k) {
  double total = 0.0;
  double in_region = 0.0;
  for (int i = 0; i < psi.size(); ++i) {
    const double w = std::norm(psi.amp[i]);
    total += w;
    if (psi.layout.region(i) == k) in_region += w;
  }
  if (total == 0.0) throw std::domain_error("region_probability of the zero state");
  return in_region / total;
}

double wall_probability(const WaveFunction& psi) {
  const double L = psi.layout.grid().half_width;
  const double h = psi.layout.grid().spacing();
  double total = 0.0;
  double near_wall = 0.0;
  for (int i = 0; i < psi.size(); ++i) {
    const double w = std::norm(psi.amp[i]);
    total += w;
    if (L - std::fabs(psi.layout.x(i)) <= 2.0 * h) near_wall += w;
  }
  if (total == 0.0) return 0.0;
  return near_wall / total;
}

}  // namespace qconf
