#pragma once

#include <optional>
#include <vector>

#include "qconf/operators.hpp"
#include "qconf/wavefunction.hpp"

namespace qconf {

struct PropagatorConfig {
  double dt = 0.0;            // > 0
  long n_steps = 1;           // >= 1
  long record_every = 1;      // >= 1
  bool store_snapshots = false;
};

/// Observables recorded along a unitary evolution. All columns share length
/// 1 + floor(n_steps / record_every), counting the initial record at t = 0.
/// wall_prob monitors how much probability sits within 2h of the truncation
/// walls; the CLI warns when it exceeds 1e-8.
struct Trajectory {
  std::vector<double> times;
  std::vector<double> norms;
  std::vector<double> region1_prob;
  std::vector<double> region2_prob;
  std::vector<double> energy;  // <psi, H psi>
  std::vector<double> wall_prob;
  std::vector<WaveFunction> snapshots;
};

/// Normalized Gaussian packet psi_j ~ exp(-(x_j-x0)^2/(4 sigma^2) + i p0 x_j).
/// With confine_to set, amplitudes on the other region are truncated to zero
/// before renormalization, making the state an exact eigenstate of the
/// discrete region projector.
WaveFunction gaussian_packet(const NodeLayout& layout, double x0, double p0, double sigma,
                             std::optional<Region> confine_to = std::nullopt);

/// True when sigma < 2h, i.e. the packet is too narrow for the grid.
bool packet_under_resolved(const Grid& grid, double sigma);

/// One Cayley step psi+ = (I + i dt/2 H)^{-1} (I - i dt/2 H) psi, the unitary
/// rational approximation of the evolution operator. For the confined
/// operator the two blocks are solved independently.
WaveFunction cayley_step(const GlobalHamiltonian& h, const WaveFunction& psi, double dt);
WaveFunction cayley_step(const ConfinedHamiltonian& h, const WaveFunction& psi, double dt);

Trajectory evolve(const GlobalHamiltonian& h, const WaveFunction& psi0, const PropagatorConfig& cfg);
Trajectory evolve(const ConfinedHamiltonian& h, const WaveFunction& psi0, const PropagatorConfig& cfg);

/// Accuracy-motivated default step for transported packets (Cayley is
/// unconditionally stable).
inline double default_time_step(const Grid& grid) {
  const double h = grid.spacing();
  return 0.5 * h * h;
}

}  // namespace qconf
