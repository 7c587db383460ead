#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "qconf/config.hpp"
#include "qconf/errors.hpp"

using namespace qconf;

namespace {

const std::string kBase =
    "[grid]\n"
    "L = 1.0\n"
    "n_per_side = 400\n"
    "\n"
    "[potential]\n"
    "kind = zero\n"
    "\n"
    "[bc]\n"
    "lambda_left = inf\n"
    "lambda_right = 0\n";

int error_line(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const config_error& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("a minimal scenario parses") {
  const ScenarioConfig cfg = parse_scenario(kBase);
  CHECK(cfg.grid.half_width == 1.0);
  CHECK(cfg.grid.n_per_side == 400);
  CHECK(cfg.potential.kind() == Potential::Kind::zero);
  CHECK(cfg.bc_left.is_dirichlet());
  CHECK(cfg.bc_right.is_robin());
  CHECK(cfg.bc_right.lambda() == 0.0);
  CHECK_FALSE(cfg.spectrum.has_value());
  CHECK_FALSE(cfg.evolve.has_value());
}

TEST_CASE("comments and blank lines are skipped") {
  const ScenarioConfig cfg = parse_scenario("# leading comment\n; alt comment\n" + kBase);
  CHECK(cfg.grid.n_per_side == 400);
}

TEST_CASE("mode sections parse with defaults") {
  const ScenarioConfig cfg = parse_scenario(kBase +
                                            "[spectrum]\n"
                                            "count = 4\n"
                                            "[evolve]\n"
                                            "x0 = -0.5\n"
                                            "p0 = 5\n"
                                            "sigma = 0.1\n"
                                            "n_steps = 100\n"
                                            "confine_to_region = true\n"
                                            "[sweep]\n"
                                            "lambdas = 0, 1, 10, 100, 1e4, inf\n"
                                            "[verify]\n"
                                            "seed = 99\n");
  REQUIRE(cfg.spectrum.has_value());
  CHECK(cfg.spectrum->count == 4);
  REQUIRE(cfg.evolve.has_value());
  CHECK(cfg.evolve->x0 == -0.5);
  CHECK(cfg.evolve->confine_to_region);
  CHECK_FALSE(cfg.evolve->use_global);
  CHECK(cfg.evolve->record_every == 1);
  CHECK_FALSE(cfg.evolve->dt.has_value());
  REQUIRE(cfg.sweep.has_value());
  REQUIRE(cfg.sweep->lambdas.size() == 6);
  CHECK(cfg.sweep->lambdas[4].value() == 1e4);
  CHECK_FALSE(cfg.sweep->lambdas[5].has_value());  // inf
  CHECK(cfg.sweep->side == Region::right);
  REQUIRE(cfg.verify.has_value());
  CHECK(cfg.verify->seed == 99);
  CHECK(cfg.verify->cases_per_pair == 200);
}

TEST_CASE("parse failures carry line numbers") {
  // lambda_left = abc sits on line 9 of the base config
  const std::string bad = [] {
    std::string s = kBase;
    const auto pos = s.find("lambda_left = inf");
    return s.replace(pos, 17, "lambda_left = abc");
  }();
  CHECK(error_line(bad) == 9);
  CHECK(error_line(kBase + "[grid]\n") == 11);        // duplicate section
  CHECK(error_line(kBase + "[unknown]\n") == 11);     // unknown section
  CHECK(error_line(kBase + "[sweep]\nlambdas = 1\nbogus = 1\n") == 13);  // unknown key
  CHECK(error_line(kBase + "[sweep]\nlambdas = \n") == 12); // empty ladder
  CHECK(error_line("L = 1\n" + kBase) == 1);          // key outside a section
  CHECK(error_line(kBase + "[spectrum]\ncount = 1\ncount = 2\n") == 13);  // duplicate key
  CHECK(error_line(kBase + "[evolve]\nnoise\n") == 12);  // not key = value
}

TEST_CASE("missing required pieces are rejected") {
  CHECK_THROWS_AS(parse_scenario("[grid]\nL = 1\nn_per_side = 4\n"), config_error);
  CHECK_THROWS_AS(parse_scenario(kBase + "[spectrum]\n"), config_error);  // missing count
  CHECK_THROWS_AS(parse_scenario(kBase + "[evolve]\nx0 = 0\n"), config_error);
}

TEST_CASE("potential blocks for every kind") {
  const std::string grid_bc =
      "[grid]\nL = 2\nn_per_side = 8\n[bc]\nlambda_left = 1\nlambda_right = -1\n";

  const ScenarioConfig harm =
      parse_scenario(grid_bc + "[potential]\nkind = harmonic\nomega = 2.0\n");
  CHECK(harm.potential.eval(1.0) == 4.0);

  const ScenarioConfig well = parse_scenario(
      grid_bc + "[potential]\nkind = square_well\ndepth = -5\nwidth = 1\n");
  CHECK(well.potential.eval(0.0) == -5.0);

  const ScenarioConfig tab = parse_scenario(
      grid_bc + "[potential]\nkind = tabulated\nnodes = -1:0, 1:2\nquad_bound_k = 2\n");
  CHECK(tab.potential.eval(0.0) == 1.0);
  CHECK(tab.potential.quad_bound_k() == 2.0);

  CHECK_THROWS_AS(parse_scenario(grid_bc + "[potential]\nkind = coulomb\n"), config_error);
  // keys from another kind are unknown keys here
  CHECK_THROWS_AS(parse_scenario(grid_bc + "[potential]\nkind = zero\nomega = 1\n"),
                  config_error);
  CHECK_THROWS_AS(parse_scenario(grid_bc + "[potential]\nkind = tabulated\nnodes = 1:0, -1:2\n"),
                  config_error);
}

TEST_CASE("numeric validation") {
  CHECK_THROWS_AS(
      parse_scenario("[grid]\nL = -1\nn_per_side = 4\n[potential]\nkind = zero\n[bc]\n"
                     "lambda_left = 0\nlambda_right = 0\n"),
      config_error);
  CHECK_THROWS_AS(parse_scenario(kBase + "[evolve]\nx0 = 0\np0 = 0\nsigma = 1\nn_steps = 0\n"),
                  config_error);
  CHECK_THROWS_AS(parse_scenario(kBase + "[spectrum]\ncount = -1\n"), config_error);
  CHECK_THROWS_AS(parse_scenario(kBase + "[sweep]\nlambdas = 1\nside = up\n"), config_error);
}
