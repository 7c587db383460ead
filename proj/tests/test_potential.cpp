#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qconf/errors.hpp"
#include "qconf/potential.hpp"

using namespace qconf;

TEST_CASE("zero potential vanishes everywhere") {
  const Potential v = Potential::zero();
  CHECK(v.eval(3.7) == 0.0);
  CHECK(v.eval(-123.0) == 0.0);
  CHECK(v.eval(0.0) == 0.0);
}

TEST_CASE("harmonic potential is omega^2 x^2") {
  const Potential v = Potential::harmonic(1.0);
  CHECK(v.eval(2.0) == 4.0);
  CHECK(v.eval(-2.0) == 4.0);
  const Potential v3 = Potential::harmonic(3.0);
  CHECK(v3.eval(2.0) == doctest::Approx(36.0));
}

TEST_CASE("square well is depth inside, zero outside") {
  const Potential v = Potential::square_well(-5.0, 1.0);
  CHECK(v.eval(0.25) == -5.0);
  CHECK(v.eval(-0.25) == -5.0);
  CHECK(v.eval(0.5) == -5.0);  // boundary inclusive
  CHECK(v.eval(1.5) == 0.0);
  CHECK(v.eval(-1.5) == 0.0);
}

TEST_CASE("tabulated potential interpolates linearly and extends constantly") {
  const Potential v = Potential::tabulated({{-1.0, 0.0}, {1.0, 2.0}});
  CHECK(v.eval(0.0) == doctest::Approx(1.0));
  CHECK(v.eval(-1.0) == 0.0);
  CHECK(v.eval(1.0) == 2.0);
  // constant extension beyond the table
  CHECK(v.eval(5.0) == 2.0);
  CHECK(v.eval(-5.0) == 0.0);
}

TEST_CASE("tabulated potential rejects bad node lists") {
  CHECK_THROWS_AS(Potential::tabulated({{0.0, 1.0}}), config_error);
  CHECK_THROWS_AS(Potential::tabulated({{1.0, 0.0}, {-1.0, 0.0}}), config_error);
  CHECK_THROWS_AS(Potential::tabulated({{0.0, 1.0}, {0.0, 2.0}}), config_error);
}

TEST_CASE("eval is pure: repeated calls agree bit-for-bit") {
  const Potential v = Potential::tabulated({{-1.0, 0.3}, {0.5, -2.0}, {2.0, 1.0}});
  for (double x : {-3.0, -0.7, 0.0, 0.49, 1.1, 4.0}) CHECK(v.eval(x) == v.eval(x));
}

TEST_CASE("eval_on_grid follows the operator assembly ordering") {
  const Grid grid(1.0, 2);  // h = 0.5

  SUBCASE("zero potential on a Robin/Robin layout gives 2n zeros") {
    const NodeLayout layout =
        NodeLayout::confined(grid, BoundaryParam::robin(0.0), BoundaryParam::robin(1.0));
    const auto vals = eval_on_grid(Potential::zero(), layout);
    REQUIRE(vals.size() == 4);  // n per block, interface node duplicated
    for (double v : vals) CHECK(v == 0.0);
  }

  SUBCASE("harmonic samples x^2 at the Dirichlet/Dirichlet nodes +-0.5") {
    const NodeLayout layout =
        NodeLayout::confined(grid, BoundaryParam::dirichlet(), BoundaryParam::dirichlet());
    const auto vals = eval_on_grid(Potential::harmonic(1.0), layout);
    REQUIRE(vals.size() == 2);
    CHECK(vals[0] == doctest::Approx(0.25));
    CHECK(vals[1] == doctest::Approx(0.25));
  }

  SUBCASE("square well sampled inside and outside on a wider grid") {
    const Grid wide(2.0, 8);  // h = 0.25, global nodes at +-0.25, ..., +-1.75
    const NodeLayout layout = NodeLayout::global(wide);
    const Potential v = Potential::square_well(-5.0, 1.0);
    const auto vals = eval_on_grid(v, layout);
    auto value_at = [&](double x) {
      for (int i = 0; i < layout.size(); ++i)
        if (layout.x(i) == x) return vals[i];
      FAIL("node not found");
      return 0.0;
    };
    CHECK(value_at(0.25) == -5.0);
    CHECK(value_at(-0.25) == -5.0);
    CHECK(value_at(1.5) == 0.0);
    CHECK(value_at(-1.5) == 0.0);
  }
}

TEST_CASE("growth condition holds for the built-in confining kinds") {
  for (double k : {1e-6, 0.5, 1.0, 100.0}) {
    Potential zero = Potential::zero();
    zero.set_quad_bound_k(k);
    CHECK(zero.growth_condition_ok(1.0, 50.0, 200));

    Potential harm = Potential::harmonic(0.3);
    harm.set_quad_bound_k(k);
    CHECK(harm.growth_condition_ok(1.0, 50.0, 200));
  }

  // A potential sinking faster than -k x^2 fails the sampler.
  Potential bad = Potential::tabulated({{-1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, {10.0, -500.0}});
  bad.set_quad_bound_k(1.0);
  CHECK_FALSE(bad.growth_condition_ok(1.0, 10.0, 100));
}
