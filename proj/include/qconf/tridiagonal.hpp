#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qconf/errors.hpp"

namespace qconf {

/// Real tridiagonal matrix with sub- and superdiagonal stored separately, so
/// symmetry is a checkable property of the stored entries rather than an
/// assumption baked into the representation. All assembly routines fill
/// sub == sup entry-wise.
struct Tridiagonal {
  std::vector<double> diag;  // size n
  std::vector<double> sub;   // size n-1, A(i+1, i)
  std::vector<double> sup;   // size n-1, A(i, i+1)

  Tridiagonal() = default;
  explicit Tridiagonal(std::size_t n) : diag(n, 0.0), sub(n ? n - 1 : 0, 0.0), sup(n ? n - 1 : 0, 0.0) {}
  Tridiagonal(std::vector<double> d, std::vector<double> offdiag)
      : diag(std::move(d)), sub(offdiag), sup(std::move(offdiag)) {
    if (diag.size() != sub.size() + 1 && !(diag.empty() && sub.empty()))
      throw std::invalid_argument("offdiagonal must have size n-1");
  }

  std::size_t size() const { return diag.size(); }

  /// max |A_ij - A_ji| over stored entries; exactly 0 for every assembled
  /// operator.
  double symmetry_defect() const {
    double defect = 0.0;
    for (std::size_t i = 0; i < sub.size(); ++i)
      defect = std::max(defect, std::fabs(sub[i] - sup[i]));
    return defect;
  }

  /// Largest absolute row sum; used for scale-aware tolerances.
  double inf_norm() const {
    double norm = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
      double row = std::fabs(diag[i]);
      if (i > 0) row += std::fabs(sub[i - 1]);
      if (i + 1 < size()) row += std::fabs(sup[i]);
      norm = std::max(norm, row);
    }
    return norm;
  }

  template <typename Scalar>
  void apply(const Scalar* in, Scalar* out) const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      Scalar acc = diag[i] * in[i];
      if (i > 0) acc += sub[i - 1] * in[i - 1];
      if (i + 1 < n) acc += sup[i] * in[i + 1];
      out[i] = acc;
    }
  }

  template <typename Scalar>
  std::vector<Scalar> apply(const std::vector<Scalar>& in) const {
    if (in.size() != size()) throw std::invalid_argument("tridiagonal apply: dimension mismatch");
    std::vector<Scalar> out(size());
    apply(in.data(), out.data());
    return out;
  }
};

/// Thomas algorithm for a general tridiagonal system. No pivoting; an exact
/// zero pivot raises numerical_error. The Cayley matrices I + i*(dt/2)*H used
/// here are nonsingular and effectively diagonally dominant, so breakdown is
/// an internal-error signal rather than an expected path.
template <typename Scalar>
std::vector<Scalar> solve_tridiagonal(const std::vector<Scalar>& sub,
                                      const std::vector<Scalar>& diag,
                                      const std::vector<Scalar>& sup,
                                      const std::vector<Scalar>& rhs) {
  const std::size_t n = diag.size();
  if (rhs.size() != n || (n > 0 && (sub.size() != n - 1 || sup.size() != n - 1)))
    throw std::invalid_argument("solve_tridiagonal: dimension mismatch");
  if (n == 0) return {};

  std::vector<Scalar> c_prime(n, Scalar{});
  std::vector<Scalar> x(n, Scalar{});

  Scalar pivot = diag[0];
  if (pivot == Scalar{}) throw numerical_error("tridiagonal solve: zero pivot at row 0");
  if (n > 1) c_prime[0] = sup[0] / pivot;
  x[0] = rhs[0] / pivot;

  for (std::size_t i = 1; i < n; ++i) {
    pivot = diag[i] - sub[i - 1] * c_prime[i - 1];
    if (pivot == Scalar{})
      throw numerical_error("tridiagonal solve: zero pivot at row " + std::to_string(i));
    if (i + 1 < n) c_prime[i] = sup[i] / pivot;
    x[i] = (rhs[i] - sub[i - 1] * x[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c_prime[i] * x[i + 1];
  return x;
}

}  // namespace qconf
