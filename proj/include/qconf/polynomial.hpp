#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qconf/rational.hpp"

namespace qconf {

/// Univariate polynomial with exact rational coefficients, stored in
/// ascending degree with trailing zeros trimmed. The zero polynomial has an
/// empty coefficient list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> ascending_coeffs)
      : coeffs_(ascending_coeffs) {
    trim();
  }
  explicit Polynomial(std::vector<Rational> ascending_coeffs)
      : coeffs_(std::move(ascending_coeffs)) {
    trim();
  }
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// x^k
  static Polynomial monomial(int k, const Rational& c = Rational(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : Rational(0);
  }

  Rational value_at_zero() const { return coeff(0); }
  Rational derivative_at_zero() const { return coeff(1); }

  Polynomial derivative() const;
  /// Antiderivative with zero constant term (exact).
  Polynomial antiderivative() const;

  Rational eval(const Rational& x) const;
  double eval(double x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  Polynomial operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Human-readable form like "1/2 - 3*x + x^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

}  // namespace qconf
