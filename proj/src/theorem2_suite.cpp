#include "qconf/theorem2_suite.hpp"

#include <cmath>
#include <optional>
#include <random>

namespace qconf {

namespace {

/// Draws routed through raw mt19937_64 words so frozen expectations do not
/// depend on std::uniform_int_distribution internals.
long long draw_int(std::mt19937_64& rng, long long lo, long long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long long>(rng() % span);
}

Rational draw_rational(std::mt19937_64& rng) {
  return Rational(draw_int(rng, -9, 9), draw_int(rng, 1, 9));
}

Rational draw_nonzero_rational(std::mt19937_64& rng) {
  for (;;) {
    Rational r = draw_rational(rng);
    if (!r.is_zero()) return r;
  }
}

/// Random degree-4 local representative satisfying the boundary condition,
/// optionally shifted off-domain by epsilon (Robin: slope excess; Dirichlet:
/// boundary value).
Polynomial draw_piece(std::mt19937_64& rng, const ExactBoundary& bc, const Rational& epsilon) {
  std::vector<Rational> c(5);
  for (Rational& coeff : c) coeff = draw_rational(rng);
  if (bc.is_dirichlet()) {
    c[0] = epsilon;
  } else {
    c[1] = bc.lambda() * c[0] + epsilon;
  }
  return Polynomial(std::move(c));
}

Rational residue_norm(const SingularDistribution& d) {
  Rational acc = abs(d.c_delta) + abs(d.c_delta_prime);
  for (const Rational& c : d.regular_left.coeffs()) acc += abs(c);
  for (const Rational& c : d.regular_right.coeffs()) acc += abs(c);
  return acc;
}

Rational singular_norm(const SingularDistribution& d) {
  return abs(d.c_delta) + abs(d.c_delta_prime);
}

SingularDistribution residual_with_flip(const PiecewisePolyState& psi, const LocalPotential& V,
                                        const ExactBoundary& bcl, const ExactBoundary& bcr,
                                        bool flip_b1) {
  if (!flip_b1) return theorem2_residual(psi, V, bcl, bcr);
  return apply_H0_distributional(psi, V) + apply_B(1, bcl, psi) + apply_B(2, bcr, psi) -
         apply_direct_sum(psi, V);
}

/// Pairing of B_k psi with t by the raw term-by-term distributional
/// calculus of the boundary operator: <delta' phi, t> = -(phi t)'(0) with
/// the product differentiated as a polynomial, and the composite term
/// integrated by parts against t. Exact rational evaluation; independent of
/// the collapsed two-coefficient formulas in apply_B.
double oracle_B_pairing(int k, const ExactBoundary& bc, const PiecewisePolyState& psi,
                        const TestFunction& t) {
  const Polynomial& p = k == 1 ? psi.p1 : psi.p2;
  const Rational p0 = p.coeff(0), p1 = p.coeff(1);
  const Rational t0 = t.profile.coeff(0), t1 = t.profile.coeff(1);
  const Rational sign(k == 1 ? -1 : 1);  // (-1)^k
  const Rational product_slope = p0 * t1 + p1 * t0;  // (phi_k t)'(0)

  if (bc.is_dirichlet()) {
    // <B psi, t> = -<delta' phi_k, t> + (-1)^k <delta phi_k, t>
    //            = (phi_k t)'(0) + (-1)^k phi_k(0) t(0)
    return (product_slope + sign * p0 * t0).to_double();
  }
  const Rational& lam = bc.lambda();
  // <delta' phi_k, t> + 2 lambda <delta phi_k, t>
  //   + (-1)^k <(d/dx)[(phi_k' - lambda phi_k)(0) delta], t>
  // = -(phi_k t)'(0) + 2 lambda phi_k(0) t(0) - (-1)^k (phi_k'(0) - lambda phi_k(0)) t'(0)
  return (-product_slope + Rational(2) * lam * p0 * t0 - sign * (p1 - lam * p0) * t1).to_double();
}

}  // namespace

double oracle_residual_pairing(const PiecewisePolyState& psi, const LocalPotential& V,
                               const ExactBoundary& bc_left, const ExactBoundary& bc_right,
                               const TestFunction& t, bool flip_b1_sign) {
  // <H0 psi, t> by the adjoint route <psi, H0 t>: pure quadrature, no jump
  // bookkeeping anywhere.
  const Polynomial h0_t = -t.profile.derivative().derivative() + V.v * t.profile;
  const double h0_term = gauss_legendre(-t.half_width, 0.0, psi.p1, h0_t) +
                         gauss_legendre(0.0, t.half_width, psi.p2, h0_t);
  // <direct-sum psi, t> by plain quadrature of the regular action.
  const Polynomial act1 = -psi.p1.derivative().derivative() + V.v * psi.p1;
  const Polynomial act2 = -psi.p2.derivative().derivative() + V.v * psi.p2;
  const double ds_term = gauss_legendre(-t.half_width, 0.0, act1, t.profile) +
                         gauss_legendre(0.0, t.half_width, act2, t.profile);

  const double b1 = oracle_B_pairing(1, bc_left, psi, t);
  const double b2 = oracle_B_pairing(2, bc_right, psi, t);
  return h0_term + (flip_b1_sign ? b1 : -b1) + b2 - ds_term;
}

Theorem2Report run_theorem2_suite(const Theorem2Options& options) {
  Theorem2Report report;
  report.max_on_domain_residue = Rational(0);
  std::optional<Rational> min_off_norm;

  std::mt19937_64 rng(options.seed);

  std::vector<ExactBoundary> ladder;
  for (long long lam : {-5LL, -1LL, 0LL, 1LL, 5LL}) ladder.push_back(ExactBoundary::robin(Rational(lam)));
  ladder.push_back(ExactBoundary::dirichlet());

  const LocalPotential v_zero = LocalPotential::zero();
  const LocalPotential v_quad(Polynomial::monomial(2));

  auto fail = [&](const std::string& why) {
    if (report.first_violation.empty()) report.first_violation = why;
  };

  for (const ExactBoundary& bcl : ladder) {
    for (const ExactBoundary& bcr : ladder) {
      for (int c = 0; c < options.cases_per_pair; ++c) {
        // --- on-domain case ---
        PiecewisePolyState psi(draw_piece(rng, bcl, Rational(0)),
                               draw_piece(rng, bcr, Rational(0)));
        const auto ok = in_domain(psi, bcl, bcr);
        if (!ok.first || !ok.second) fail("constructed on-domain state failed in_domain");

        SingularDistribution res = residual_with_flip(psi, v_zero, bcl, bcr, options.flip_b1_sign);
        const Rational on_norm = residue_norm(res);
        if (on_norm > report.max_on_domain_residue) report.max_on_domain_residue = on_norm;
        ++report.cases_on_domain;

        // V-independence of the singular part.
        SingularDistribution res_v =
            residual_with_flip(psi, v_quad, bcl, bcr, options.flip_b1_sign);
        if (res_v.c_delta != res.c_delta || res_v.c_delta_prime != res.c_delta_prime)
          fail("singular residue depends on V");

        // Oracle pairing on two random bumps.
        for (int b = 0; b < 2; ++b) {
          Polynomial q({draw_rational(rng), draw_rational(rng), draw_rational(rng)});
          const TestFunction t =
              polynomial_bump(q, Rational(draw_int(rng, 1, 4), draw_int(rng, 4, 8)));
          const double dev =
              std::fabs(pair_with_test(res, t) -
                        oracle_residual_pairing(psi, v_zero, bcl, bcr, t, options.flip_b1_sign));
          report.oracle_max_deviation = std::max(report.oracle_max_deviation, dev);
        }

        // --- off-domain case: violate left only, right only, or both in
        // rotation, and check exact linearity in the violation. ---
        const bool violate_left = c % 3 != 1;
        const bool violate_right = c % 3 != 0;
        const Rational eps_l = violate_left ? draw_nonzero_rational(rng) : Rational(0);
        const Rational eps_r = violate_right ? draw_nonzero_rational(rng) : Rational(0);

        std::mt19937_64 replay(rng());  // shared coefficients for psi_eps and psi_2eps
        std::mt19937_64 replay2 = replay;
        PiecewisePolyState psi_eps(draw_piece(replay, bcl, eps_l), draw_piece(replay, bcr, eps_r));
        PiecewisePolyState psi_2eps(draw_piece(replay2, bcl, Rational(2) * eps_l),
                                    draw_piece(replay2, bcr, Rational(2) * eps_r));

        const auto off_ok = in_domain(psi_eps, bcl, bcr);
        if (off_ok.first != !violate_left || off_ok.second != !violate_right)
          fail("in_domain disagrees with the constructed violation");

        SingularDistribution res_eps =
            residual_with_flip(psi_eps, v_zero, bcl, bcr, options.flip_b1_sign);
        SingularDistribution res_2eps =
            residual_with_flip(psi_2eps, v_zero, bcl, bcr, options.flip_b1_sign);
        ++report.cases_off_domain;

        if (!res_eps.regular_left.is_zero() || !res_eps.regular_right.is_zero())
          fail("residual acquired a regular part");
        const Rational off_norm = singular_norm(res_eps);
        if (!min_off_norm || off_norm < *min_off_norm) min_off_norm = off_norm;

        if (res_2eps.c_delta != Rational(2) * res_eps.c_delta ||
            res_2eps.c_delta_prime != Rational(2) * res_eps.c_delta_prime)
          fail("residue is not exactly linear in the violation");

        for (int b = 0; b < 2; ++b) {
          Polynomial q({draw_rational(rng), draw_rational(rng), draw_rational(rng)});
          const TestFunction t =
              polynomial_bump(q, Rational(draw_int(rng, 1, 4), draw_int(rng, 4, 8)));
          const double dev = std::fabs(
              pair_with_test(res_eps, t) -
              oracle_residual_pairing(psi_eps, v_zero, bcl, bcr, t, options.flip_b1_sign));
          report.oracle_max_deviation = std::max(report.oracle_max_deviation, dev);
        }
      }
    }
  }

  report.min_off_domain_residue_norm = min_off_norm.value_or(Rational(0));
  if (!report.max_on_domain_residue.is_zero()) fail("on-domain residue is nonzero");
  if (report.min_off_domain_residue_norm.is_zero()) fail("an off-domain residue vanished");
  if (report.oracle_max_deviation > 1e-9) fail("quadrature oracle deviates beyond 1e-9");
  report.contract_ok = report.first_violation.empty();
  return report;
}

}  // namespace qconf
