#include "qconf/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "qconf/tridiagonal.hpp"

namespace qconf {

namespace {

void validate(const PropagatorConfig& cfg) {
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt))
    throw std::invalid_argument("propagator dt must be positive and finite");
  if (cfg.n_steps < 1) throw std::invalid_argument("propagator n_steps must be >= 1");
  if (cfg.record_every < 1) throw std::invalid_argument("propagator record_every must be >= 1");
}

/// Precomputed complex tridiagonal factors of one Cayley block:
/// minus = I - i dt/2 H (applied), plus = I + i dt/2 H (solved).
struct CayleyBlock {
  std::vector<cdouble> plus_sub, plus_diag, plus_sup;
  std::vector<cdouble> minus_sub, minus_diag, minus_sup;

  CayleyBlock(const Tridiagonal& h, double dt) {
    const std::size_t n = h.size();
    const cdouble itau{0.0, 0.5 * dt};
    plus_diag.resize(n);
    minus_diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      plus_diag[i] = 1.0 + itau * h.diag[i];
      minus_diag[i] = 1.0 - itau * h.diag[i];
    }
    plus_sub.resize(n ? n - 1 : 0);
    plus_sup.resize(plus_sub.size());
    minus_sub.resize(plus_sub.size());
    minus_sup.resize(plus_sub.size());
    for (std::size_t i = 0; i + 1 < n; ++i) {
      plus_sub[i] = itau * h.sub[i];
      plus_sup[i] = itau * h.sup[i];
      minus_sub[i] = -itau * h.sub[i];
      minus_sup[i] = -itau * h.sup[i];
    }
  }

  void step(const cdouble* in, cdouble* out) const {
    const std::size_t n = plus_diag.size();
    std::vector<cdouble> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      cdouble acc = minus_diag[i] * in[i];
      if (i > 0) acc += minus_sub[i - 1] * in[i - 1];
      if (i + 1 < n) acc += minus_sup[i] * in[i + 1];
      rhs[i] = acc;
    }
    std::vector<cdouble> x = solve_tridiagonal(plus_sub, plus_diag, plus_sup, rhs);
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i];
  }
};

template <typename H>
Trajectory evolve_impl(const H& h, const WaveFunction& psi0, const PropagatorConfig& cfg,
                       const std::vector<const Tridiagonal*>& blocks,
                       const std::vector<int>& offsets) {
  validate(cfg);
  if (psi0.layout != h.layout)
    throw std::invalid_argument("evolve: wavefunction does not match operator layout");

  std::vector<CayleyBlock> cayley;
  cayley.reserve(blocks.size());
  for (const Tridiagonal* b : blocks) cayley.emplace_back(*b, cfg.dt);

  Trajectory traj;
  WaveFunction psi = psi0;
  auto record = [&](double t) {
    traj.times.push_back(t);
    traj.norms.push_back(norm(psi));
    traj.region1_prob.push_back(region_probability(psi, Region::left));
    traj.region2_prob.push_back(region_probability(psi, Region::right));
    traj.energy.push_back(inner(psi, apply(h, psi)).real());
    traj.wall_prob.push_back(wall_probability(psi));
    if (cfg.store_snapshots) traj.snapshots.push_back(psi);
  };

  record(0.0);
  WaveFunction next(psi.layout);
  for (long s = 1; s <= cfg.n_steps; ++s) {
    for (std::size_t b = 0; b < cayley.size(); ++b)
      cayley[b].step(psi.amp.data() + offsets[b], next.amp.data() + offsets[b]);
    std::swap(psi.amp, next.amp);
    if (s % cfg.record_every == 0) record(s * cfg.dt);
  }
  return traj;
}

}  // namespace

WaveFunction gaussian_packet(const NodeLayout& layout, double x0, double p0, double sigma,
                             std::optional<Region> confine_to) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_packet: sigma must be positive");
  if (!(std::fabs(x0) < layout.grid().half_width))
    throw std::invalid_argument("gaussian_packet: |x0| must be less than the grid half width");

  WaveFunction psi(layout);
  for (int i = 0; i < layout.size(); ++i) {
    const double x = layout.x(i);
    const double arg = (x - x0) / (2.0 * sigma);
    psi.amp[i] = std::exp(-arg * arg) * cdouble{std::cos(p0 * x), std::sin(p0 * x)};
  }
  if (confine_to) psi = project_region(psi, *confine_to);

  const double n = norm(psi);
  if (n == 0.0) throw std::invalid_argument("gaussian_packet: state vanishes on the grid");
  for (cdouble& a : psi.amp) a /= n;
  return psi;
}

bool packet_under_resolved(const Grid& grid, double sigma) {
  return sigma < 2.0 * grid.spacing();
}

WaveFunction cayley_step(const GlobalHamiltonian& h, const WaveFunction& psi, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("cayley_step: dt must be positive");
  if (psi.layout != h.layout)
    throw std::invalid_argument("cayley_step: wavefunction does not match operator layout");
  WaveFunction out(psi.layout);
  CayleyBlock block(h.matrix, dt);
  block.step(psi.amp.data(), out.amp.data());
  return out;
}

WaveFunction cayley_step(const ConfinedHamiltonian& h, const WaveFunction& psi, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("cayley_step: dt must be positive");
  if (psi.layout != h.layout)
    throw std::invalid_argument("cayley_step: wavefunction does not match operator layout");
  WaveFunction out(psi.layout);
  CayleyBlock left(h.left_block, dt);
  CayleyBlock right(h.right_block, dt);
  left.step(psi.amp.data(), out.amp.data());
  right.step(psi.amp.data() + h.layout.left_count(), out.amp.data() + h.layout.left_count());
  return out;
}

Trajectory evolve(const GlobalHamiltonian& h, const WaveFunction& psi0,
                  const PropagatorConfig& cfg) {
  return evolve_impl(h, psi0, cfg, {&h.matrix}, {0});
}

Trajectory evolve(const ConfinedHamiltonian& h, const WaveFunction& psi0,
                  const PropagatorConfig& cfg) {
  return evolve_impl(h, psi0, cfg, {&h.left_block, &h.right_block},
                     {0, h.layout.left_count()});
}

}  // namespace qconf
