#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qconf/grid.hpp"
#include "qconf/potential.hpp"

namespace qconf {

struct SpectrumConfig {
  int count = 1;
};

struct EvolveConfig {
  double x0 = 0.0;
  double p0 = 0.0;
  double sigma = 0.1;
  std::optional<double> dt;  // default h^2/2 when absent
  long n_steps = 1;
  long record_every = 1;
  bool confine_to_region = false;  // truncate the packet to the region containing x0
  bool use_global = false;  // evolve under H0 instead of the confined operator
};

struct SweepConfig {
  std::vector<std::optional<double>> lambdas;  // nullopt encodes "inf"
  int count = 1;
  Region side = Region::right;
};

struct VerifyConfig {
  std::uint64_t seed = 20240101;
  int cases_per_pair = 200;
  bool flip_b1_sign = false;
};

/// One scenario: grid + potential + boundary conditions, plus per-subcommand
/// blocks. Parsing is total: malformed lines, unknown sections, unknown or
/// duplicate keys all raise config_error with a line number.
struct ScenarioConfig {
  Grid grid{1.0, 3};
  Potential potential = Potential::zero();
  BoundaryParam bc_left = BoundaryParam::dirichlet();
  BoundaryParam bc_right = BoundaryParam::dirichlet();
  std::optional<SpectrumConfig> spectrum;
  std::optional<EvolveConfig> evolve;
  std::optional<SweepConfig> sweep;
  std::optional<VerifyConfig> verify;
};

ScenarioConfig parse_scenario(const std::string& text);
ScenarioConfig load_scenario_file(const std::string& path);

}  // namespace qconf
