#include "qconf/boundary_potential.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qconf {

PiecewisePolyState::PiecewisePolyState(Polynomial phi1, Polynomial phi2, double a, int max_degree)
    : p1(std::move(phi1)), p2(std::move(phi2)), window(a) {
  if (!(a > 0.0)) throw std::invalid_argument("state window must be positive");
  if (p1.degree() > max_degree || p2.degree() > max_degree)
    throw std::invalid_argument("state polynomial degree exceeds the declared bound");
}

PiecewisePolyState scale(const Rational& s, const PiecewisePolyState& psi) {
  return PiecewisePolyState(s * psi.p1, s * psi.p2, psi.window,
                            std::max(psi.p1.degree(), psi.p2.degree()));
}

PiecewisePolyState add(const PiecewisePolyState& a, const PiecewisePolyState& b) {
  const Polynomial q1 = a.p1 + b.p1;
  const Polynomial q2 = a.p2 + b.p2;
  const int bound = std::max({q1.degree(), q2.degree(), 0});
  return PiecewisePolyState(q1, q2, std::min(a.window, b.window), bound);
}

namespace {

void require_same_window(const SingularDistribution& a, const SingularDistribution& b) {
  if (a.window != b.window)
    throw std::invalid_argument("singular distributions live on different windows");
}

}  // namespace

SingularDistribution operator+(const SingularDistribution& a, const SingularDistribution& b) {
  require_same_window(a, b);
  return SingularDistribution{a.regular_left + b.regular_left, a.regular_right + b.regular_right,
                              a.c_delta + b.c_delta, a.c_delta_prime + b.c_delta_prime, a.window};
}

SingularDistribution operator-(const SingularDistribution& a, const SingularDistribution& b) {
  require_same_window(a, b);
  return SingularDistribution{a.regular_left - b.regular_left, a.regular_right - b.regular_right,
                              a.c_delta - b.c_delta, a.c_delta_prime - b.c_delta_prime, a.window};
}

SingularDistribution operator*(const Rational& s, const SingularDistribution& d) {
  return SingularDistribution{s * d.regular_left, s * d.regular_right, s * d.c_delta,
                              s * d.c_delta_prime, d.window};
}

std::pair<bool, bool> in_domain(const PiecewisePolyState& psi, const ExactBoundary& bc_left,
                                const ExactBoundary& bc_right) {
  auto side_ok = [](const Polynomial& p, const ExactBoundary& bc) {
    if (bc.is_dirichlet()) return p.value_at_zero().is_zero();
    return p.derivative_at_zero() == bc.lambda() * p.value_at_zero();
  };
  return {side_ok(psi.p1, bc_left), side_ok(psi.p2, bc_right)};
}

SingularDistribution apply_direct_sum(const PiecewisePolyState& psi, const LocalPotential& V) {
  return SingularDistribution{-psi.p1.derivative().derivative() + V.v * psi.p1,
                              -psi.p2.derivative().derivative() + V.v * psi.p2, Rational(0),
                              Rational(0), psi.window};
}

SingularDistribution apply_H0_distributional(const PiecewisePolyState& psi,
                                             const LocalPotential& V) {
  SingularDistribution out = apply_direct_sum(psi, V);
  // (chi_1 phi_1 + chi_2 phi_2)' picks up (phi_2(0) - phi_1(0)) delta; the
  // second derivative promotes it to delta' and adds the slope jump, and the
  // leading minus sign of -d^2/dx^2 flips both.
  out.c_delta_prime = -(psi.p2.value_at_zero() - psi.p1.value_at_zero());
  out.c_delta = -(psi.p2.derivative_at_zero() - psi.p1.derivative_at_zero());
  return out;
}

SingularDistribution apply_B(int k, const ExactBoundary& bc, const PiecewisePolyState& psi) {
  if (k != 1 && k != 2) throw std::invalid_argument("apply_B: k must be 1 or 2");
  const Polynomial& p = k == 1 ? psi.p1 : psi.p2;
  const Rational sign(k == 1 ? -1 : 1);  // (-1)^k
  const Rational p0 = p.value_at_zero();
  const Rational dp0 = p.derivative_at_zero();

  SingularDistribution out;
  out.window = psi.window;
  if (bc.is_dirichlet()) {
    out.c_delta_prime = -p0;
    out.c_delta = dp0 + sign * p0;
  } else {
    const Rational& lambda = bc.lambda();
    out.c_delta_prime = p0 + sign * (dp0 - lambda * p0);
    out.c_delta = Rational(2) * lambda * p0 - dp0;
  }
  return out;
}

SingularDistribution theorem2_residual(const PiecewisePolyState& psi, const LocalPotential& V,
                                       const ExactBoundary& bc_left,
                                       const ExactBoundary& bc_right) {
  return apply_H0_distributional(psi, V) - apply_B(1, bc_left, psi) + apply_B(2, bc_right, psi) -
         apply_direct_sum(psi, V);
}

TestFunction polynomial_bump(const Polynomial& q, const Rational& half_width) {
  if (!(half_width > Rational(0)))
    throw std::invalid_argument("test function half width must be positive");
  // (1 - (x/a)^2)^4, exactly.
  const Rational inv_a2 = Rational(1) / (half_width * half_width);
  const Polynomial base({Rational(1), Rational(0), -inv_a2});
  const Polynomial base2 = base * base;
  return TestFunction{q * (base2 * base2), half_width.to_double()};
}

namespace {

struct GaussRule {
  std::array<double, 32> nodes;
  std::array<double, 32> weights;
};

/// Nodes and weights of the 32-point Gauss-Legendre rule on [-1, 1], by
/// Newton iteration on P_32.
const GaussRule& gauss_rule() {
  static const GaussRule rule = [] {
    GaussRule r{};
    constexpr int n = 32;
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
          const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-15) break;
      }
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      r.nodes[i] = -x;
      r.weights[i] = w;
      r.nodes[n - 1 - i] = x;
      r.weights[n - 1 - i] = w;
    }
    return r;
  }();
  return rule;
}

}  // namespace

double gauss_legendre(double a, double b, const Polynomial& f) {
  const GaussRule& rule = gauss_rule();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 32; ++i) acc += rule.weights[i] * f.eval(mid + half * rule.nodes[i]);
  return half * acc;
}

double gauss_legendre(double a, double b, const Polynomial& f, const Polynomial& g) {
  const GaussRule& rule = gauss_rule();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 32; ++i) {
    const double x = mid + half * rule.nodes[i];
    acc += rule.weights[i] * f.eval(x) * g.eval(x);
  }
  return half * acc;
}

double pair_with_test(const SingularDistribution& d, const TestFunction& t) {
  if (t.half_width > d.window)
    throw std::invalid_argument("test function support exceeds the distribution window");
  double acc = gauss_legendre(-t.half_width, 0.0, d.regular_left, t.profile) +
               gauss_legendre(0.0, t.half_width, d.regular_right, t.profile);
  acc += d.c_delta.to_double() * t.value_at_zero();
  acc -= d.c_delta_prime.to_double() * t.slope_at_zero();
  return acc;
}

}  // namespace qconf
