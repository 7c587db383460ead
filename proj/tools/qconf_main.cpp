// Scenario runner for the confined-Hamiltonian library: assembles operators
// from a structured-text config and emits machine-parseable CSV/JSON into the
// output directory. Diagnostics go to stderr only; identical config + seed
// yields byte-identical outputs.
//
// Exit codes: 0 success, 2 config error, 3 numerical failure,
//             4 verification contract failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qconf/config.hpp"
#include "qconf/dynamics.hpp"
#include "qconf/errors.hpp"
#include "qconf/operators.hpp"
#include "qconf/spectral.hpp"
#include "qconf/theorem2_suite.hpp"

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::ofstream open_output(const std::string& out_dir, const std::string& name) {
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path path = std::filesystem::path(out_dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path.string());
  return out;
}

int run_spectrum(const qconf::ScenarioConfig& cfg, const std::string& out_dir) {
  if (!cfg.spectrum) throw qconf::config_error(0, "spectrum subcommand needs a [spectrum] section");
  const qconf::ConfinedHamiltonian h =
      qconf::build_confined(cfg.grid, cfg.potential, cfg.bc_left, cfg.bc_right);
  const qconf::EigenDecomposition eig = qconf::eigen_confined(h, cfg.spectrum->count);

  std::ofstream out = open_output(out_dir, "spectrum.csv");
  out << "index,region,eigenvalue,residual\n";
  for (int i = 0; i < eig.count(); ++i) {
    qconf::WaveFunction psi(h.layout);
    for (int j = 0; j < psi.size(); ++j) psi.amp[j] = eig.eigenvectors[i][j];
    const double res = qconf::residual(h, eig.eigenvalues[i], psi);
    out << i << ',' << (eig.region_tags[i] == qconf::SpectrumTag::left ? "left" : "right") << ','
        << fmt(eig.eigenvalues[i]) << ',' << fmt(res) << '\n';
  }
  return 0;
}

int run_evolve(const qconf::ScenarioConfig& cfg, const std::string& out_dir) {
  if (!cfg.evolve) throw qconf::config_error(0, "evolve subcommand needs an [evolve] section");
  const qconf::EvolveConfig& ev = *cfg.evolve;

  if (qconf::packet_under_resolved(cfg.grid, ev.sigma))
    std::cerr << "warning: sigma < 2h, the packet is under-resolved on this grid\n";

  std::optional<qconf::Region> confine_to;
  if (ev.confine_to_region) {
    if (ev.x0 == 0.0)
      throw qconf::config_error(0, "confine_to_region = true needs a nonzero x0 to pick a region");
    confine_to = ev.x0 < 0.0 ? qconf::Region::left : qconf::Region::right;
  }

  qconf::PropagatorConfig pcfg;
  pcfg.dt = ev.dt.value_or(qconf::default_time_step(cfg.grid));
  pcfg.n_steps = ev.n_steps;
  pcfg.record_every = ev.record_every;

  qconf::Trajectory traj;
  if (ev.use_global) {
    const qconf::GlobalHamiltonian h = qconf::build_h0(cfg.grid, cfg.potential);
    traj = qconf::evolve(h, qconf::gaussian_packet(h.layout, ev.x0, ev.p0, ev.sigma, confine_to),
                         pcfg);
  } else {
    const qconf::ConfinedHamiltonian h =
        qconf::build_confined(cfg.grid, cfg.potential, cfg.bc_left, cfg.bc_right);
    traj = qconf::evolve(h, qconf::gaussian_packet(h.layout, ev.x0, ev.p0, ev.sigma, confine_to),
                         pcfg);
  }

  for (double wp : traj.wall_prob) {
    if (wp > 1e-8) {
      std::cerr << "warning: probability within 2h of the +-L walls reached " << wp
                << "; the truncation boundary is being touched\n";
      break;
    }
  }

  std::ofstream out = open_output(out_dir, "trajectory.csv");
  out << "t,norm,prob_region1,prob_region2,energy\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    out << fmt(traj.times[i]) << ',' << fmt(traj.norms[i]) << ',' << fmt(traj.region1_prob[i])
        << ',' << fmt(traj.region2_prob[i]) << ',' << fmt(traj.energy[i]) << '\n';
  }
  return 0;
}

int run_sweep(const qconf::ScenarioConfig& cfg, const std::string& out_dir) {
  if (!cfg.sweep) throw qconf::config_error(0, "sweep-lambda subcommand needs a [sweep] section");
  const qconf::SweepConfig& sw = *cfg.sweep;

  std::ofstream out = open_output(out_dir, "sweep.csv");
  out << "lambda,eigen_index,eigenvalue\n";
  for (const std::optional<double>& lam : sw.lambdas) {
    const qconf::BoundaryParam swept =
        lam ? qconf::BoundaryParam::robin(*lam) : qconf::BoundaryParam::dirichlet();
    const qconf::BoundaryParam bc_left = sw.side == qconf::Region::left ? swept : cfg.bc_left;
    const qconf::BoundaryParam bc_right = sw.side == qconf::Region::right ? swept : cfg.bc_right;
    const qconf::ConfinedHamiltonian h =
        qconf::build_confined(cfg.grid, cfg.potential, bc_left, bc_right);
    const qconf::Tridiagonal& block =
        sw.side == qconf::Region::left ? h.left_block : h.right_block;
    const int count = std::min<int>(sw.count, static_cast<int>(block.size()));
    const qconf::EigenDecomposition eig = qconf::eigen_tridiagonal(block, count);
    for (int i = 0; i < eig.count(); ++i) {
      out << (lam ? fmt(*lam) : std::string("inf")) << ',' << i << ','
          << fmt(eig.eigenvalues[i]) << '\n';
    }
  }
  return 0;
}

int run_verify(const qconf::ScenarioConfig& cfg, const std::string& out_dir,
               std::optional<std::uint64_t> seed_override) {
  qconf::Theorem2Options options;
  if (cfg.verify) {
    options.seed = cfg.verify->seed;
    options.cases_per_pair = cfg.verify->cases_per_pair;
    options.flip_b1_sign = cfg.verify->flip_b1_sign;
  }
  if (seed_override) options.seed = *seed_override;

  const qconf::Theorem2Report report = qconf::run_theorem2_suite(options);

  nlohmann::ordered_json j;
  j["cases_on_domain"] = report.cases_on_domain;
  j["cases_off_domain"] = report.cases_off_domain;
  j["max_on_domain_residue"] = report.max_on_domain_residue.to_string();
  j["min_off_domain_residue_norm"] = report.min_off_domain_residue_norm.to_string();
  j["oracle_max_deviation"] = report.oracle_max_deviation;
  j["seed"] = options.seed;
  j["contract_ok"] = report.contract_ok;

  std::ofstream out = open_output(out_dir, "theorem2.json");
  out << j.dump(2) << '\n';

  if (!report.contract_ok) {
    std::cerr << "verification contract failed: " << report.first_violation << '\n';
    return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Confined-Hamiltonian scenario runner"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed_override;

  CLI::App* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the confined operator");
  CLI::App* evolve = app.add_subcommand("evolve", "Cayley time evolution of a Gaussian packet");
  CLI::App* verify =
      app.add_subcommand("verify-theorem2", "Exact boundary-potential identity sweep");
  CLI::App* sweep = app.add_subcommand("sweep-lambda", "Lowest eigenvalues along a lambda ladder");
  for (CLI::App* sub : {spectrum, evolve, verify, sweep}) {
    sub->add_option("config", config_path, "Scenario config file")->required();
    sub->add_option("--out-dir", out_dir, "Directory for CSV/JSON outputs");
    sub->add_option("--seed", seed_override, "Override the verification seed");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const qconf::ScenarioConfig cfg = qconf::load_scenario_file(config_path);
    if (app.got_subcommand(spectrum)) return run_spectrum(cfg, out_dir);
    if (app.got_subcommand(evolve)) return run_evolve(cfg, out_dir);
    if (app.got_subcommand(sweep)) return run_sweep(cfg, out_dir);
    return run_verify(cfg, out_dir, seed_override);
  } catch (const qconf::config_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const qconf::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
