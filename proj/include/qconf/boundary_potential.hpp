#pragma once

#include <utility>

#include "qconf/polynomial.hpp"
#include "qconf/rational.hpp"

namespace qconf {

/// Boundary condition with exact rational data, mirroring BoundaryParam for
/// the symbolic path: Theorem 2 is an identity and the domain test
/// phi'(0) = lambda phi(0) must distinguish 0 from 1e-16, so lambda is kept
/// as a rational here rather than a double.
class ExactBoundary {
 public:
  static ExactBoundary robin(const Rational& lambda) { return ExactBoundary(true, lambda); }
  static ExactBoundary dirichlet() { return ExactBoundary(false, Rational(0)); }

  bool is_dirichlet() const { return !robin_; }
  bool is_robin() const { return robin_; }
  const Rational& lambda() const { return lambda_; }

 private:
  ExactBoundary(bool robin, Rational lambda) : robin_(robin), lambda_(std::move(lambda)) {}
  bool robin_;
  Rational lambda_;
};

/// Element of the maximal-operator domain near x = 0: the pair of local
/// polynomial representatives (phi_1 on the left of 0, phi_2 on the right),
/// valid on (-window, window). Only values and derivatives at 0 feed the
/// singular algebra; the regular parts are full polynomials.
struct PiecewisePolyState {
  Polynomial p1;
  Polynomial p2;
  double window = 1.0;

  PiecewisePolyState(Polynomial phi1, Polynomial phi2, double a = 1.0, int max_degree = 6);
};

PiecewisePolyState scale(const Rational& s, const PiecewisePolyState& psi);
PiecewisePolyState add(const PiecewisePolyState& a, const PiecewisePolyState& b);

/// V restricted to a neighborhood of the interface, as an exact polynomial.
struct LocalPotential {
  Polynomial v;
  LocalPotential() = default;
  explicit LocalPotential(Polynomial p) : v(std::move(p)) {}
  static LocalPotential zero() { return LocalPotential(); }
};

/// Distribution of the form (regular piecewise polynomial) +
/// c_delta * delta(x) + c_delta_prime * delta'(x). Belongs to L^2 iff both
/// singular coefficients vanish.
struct SingularDistribution {
  Polynomial regular_left;   // valid on (-window, 0)
  Polynomial regular_right;  // valid on (0, window)
  Rational c_delta;
  Rational c_delta_prime;
  double window = 1.0;

  bool singular_part_is_zero() const { return c_delta.is_zero() && c_delta_prime.is_zero(); }
  bool is_zero() const {
    return singular_part_is_zero() && regular_left.is_zero() && regular_right.is_zero();
  }
};

SingularDistribution operator+(const SingularDistribution& a, const SingularDistribution& b);
SingularDistribution operator-(const SingularDistribution& a, const SingularDistribution& b);
SingularDistribution operator*(const Rational& s, const SingularDistribution& d);

/// Whether each local representative satisfies its boundary condition at 0,
/// by exact rational comparison: p'(0) = lambda p(0), or p(0) = 0 for
/// Dirichlet.
std::pair<bool, bool> in_domain(const PiecewisePolyState& psi, const ExactBoundary& bc_left,
                                const ExactBoundary& bc_right);

/// Action of H_1 (+) H_2 on the state: (-p_k'' + V p_k) per piece, no
/// singular part by construction.
SingularDistribution apply_direct_sum(const PiecewisePolyState& psi, const LocalPotential& V);

/// Action of the distributional extension of H0 = -d^2/dx^2 + V: the same
/// regular part plus the jump terms produced by differentiating the
/// characteristic functions twice,
///   c_delta_prime = -(p2(0) - p1(0)),  c_delta = -(p2'(0) - p1'(0)).
SingularDistribution apply_H0_distributional(const PiecewisePolyState& psi,
                                             const LocalPotential& V);

/// The boundary potential B_k^lambda applied to the state; purely singular.
/// Finite lambda:
///   c_delta_prime = p_k(0) + (-1)^k (p_k'(0) - lambda p_k(0))
///   c_delta       = 2 lambda p_k(0) - p_k'(0)
/// Dirichlet:
///   c_delta_prime = -p_k(0)
///   c_delta       = p_k'(0) + (-1)^k p_k(0)
/// The composite term delta_k(x)(d/dx - lambda) is read as "apply
/// (d/dx - lambda) to phi_k, then multiply by delta(x) and collapse"; this is
/// the reading under which the on-domain residue of Theorem 2 cancels.
SingularDistribution apply_B(int k, const ExactBoundary& bc, const PiecewisePolyState& psi);

/// [H0_distributional - B_1 + B_2 - direct_sum](psi), exactly. The regular
/// part is identically zero; the singular part vanishes iff the state is in
/// the operator domain.
SingularDistribution theorem2_residual(const PiecewisePolyState& psi, const LocalPotential& V,
                                       const ExactBoundary& bc_left,
                                       const ExactBoundary& bc_right);

/// Smooth compactly-supported test function t(x) = q(x) (1 - (x/a)^2)^4,
/// represented exactly as a polynomial profile on [-a, a] so its moments
/// have closed forms.
struct TestFunction {
  Polynomial profile;
  double half_width = 1.0;

  double operator()(double x) const { return profile.eval(x); }
  double value_at_zero() const { return profile.coeff(0).to_double(); }
  double slope_at_zero() const { return profile.coeff(1).to_double(); }
};

TestFunction polynomial_bump(const Polynomial& q, const Rational& half_width);

/// <d, t> = integral of regular * t (each piece by Gauss-Legendre
/// quadrature) + c_delta * t(0) - c_delta_prime * t'(0). The independent
/// numerical cross-check for the symbolic coefficients. Requires t to be
/// supported inside the distribution window.
double pair_with_test(const SingularDistribution& d, const TestFunction& t);

/// Gauss-Legendre quadrature over [a, b] (32 nodes; exact for polynomial
/// integrands up to degree 63). The two-polynomial overload integrates the
/// product f*g, evaluating the factors separately.
double gauss_legendre(double a, double b, const Polynomial& f);
double gauss_legendre(double a, double b, const Polynomial& f, const Polynomial& g);

}  // namespace qconf
