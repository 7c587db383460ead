#include "qconf/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qconf/errors.hpp"

namespace qconf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Number of eigenvalues strictly below x, from the signs of the LDL^T
/// pivots of (A - x I). Pivots too close to zero are replaced by -pivmin
/// (Barth-Martin-Wilkinson safeguard).
int sturm_count_below(const std::vector<double>& d, const std::vector<double>& e2, double x,
                      double pivmin) {
  int count = 0;
  double q = 1.0;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    q = d[i] - x - (i > 0 ? e2[i - 1] / q : 0.0);
    if (std::fabs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

double bisect_eigenvalue(const std::vector<double>& d, const std::vector<double>& e2, int k,
                         double lo, double hi, double pivmin) {
  for (int it = 0; it < 200; ++it) {
    const double width_tol = 4.0 * kEps * std::max(std::fabs(lo), std::fabs(hi)) +
                             2.0 * std::numeric_limits<double>::min();
    if (hi - lo <= width_tol) break;
    const double mid = 0.5 * (lo + hi);
    if (sturm_count_below(d, e2, mid, pivmin) <= k)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// Shifted Thomas solve (A - sigma I) x = b with zero-pivot substitution:
/// near-singular shifts are exactly what inverse iteration wants, so a
/// vanishing pivot is replaced by a tiny value instead of failing.
void solve_shifted(const std::vector<double>& d, const std::vector<double>& e, double sigma,
                   std::vector<double>& x, double pivmin) {
  const std::size_t n = d.size();
  std::vector<double> c_prime(n, 0.0);
  double pivot = d[0] - sigma;
  if (std::fabs(pivot) < pivmin) pivot = pivmin;
  if (n > 1) c_prime[0] = e[0] / pivot;
  x[0] /= pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = d[i] - sigma - e[i - 1] * c_prime[i - 1];
    if (std::fabs(pivot) < pivmin) pivot = pivmin;
    if (i + 1 < n) c_prime[i] = e[i] / pivot;
    x[i] = (x[i] - e[i - 1] * x[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c_prime[i] * x[i + 1];
}

double vec_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double a : v) s += a * a;
  return std::sqrt(s);
}

void normalize(std::vector<double>& v) {
  const double n = vec_norm(v);
  if (n == 0.0) throw numerical_error("inverse iteration produced the zero vector");
  for (double& a : v) a /= n;
}

EigenDecomposition eigen_symmetric_tridiagonal(const std::vector<double>& d,
                                               const std::vector<double>& e, int count,
                                               SpectrumTag tag) {
  const int n = static_cast<int>(d.size());
  if (n == 0) throw std::invalid_argument("eigen_tridiagonal: empty matrix");
  if (static_cast<int>(e.size()) != n - 1)
    throw std::invalid_argument("eigen_tridiagonal: offdiagonal must have size n-1");
  if (count < 0 || count > n)
    throw std::invalid_argument("eigen_tridiagonal: count must lie in [0, n]");

  EigenDecomposition out;
  if (count == 0) return out;

  std::vector<double> e2(e.size());
  double max_e2 = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    e2[i] = e[i] * e[i];
    max_e2 = std::max(max_e2, e2[i]);
  }
  const double pivmin = std::max(max_e2, 1.0) * std::numeric_limits<double>::min() / kEps;

  // Gershgorin bracket for the whole spectrum.
  double lo = d[0], hi = d[0];
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::fabs(e[i - 1]);
    if (i < n - 1) r += std::fabs(e[i]);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  const double pad = kEps * std::max({std::fabs(lo), std::fabs(hi), 1.0});
  lo -= pad;
  hi += pad;

  const double matrix_norm = std::max({std::fabs(lo), std::fabs(hi), 1.0});

  for (int k = 0; k < count; ++k) {
    const double E = bisect_eigenvalue(d, e2, k, lo, hi, pivmin);
    out.eigenvalues.push_back(E);

    // Inverse iteration with the ledgered shift perturbation.
    const double sigma = E * (1.0 + 1e-8);
    std::vector<double> v(n);
    std::uint64_t state = 0x9e3779b97f4a7c15ull + 0x517cc1b727220a95ull * (k + 1);
    for (int i = 0; i < n; ++i) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      v[i] = static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
    }
    normalize(v);

    bool converged = false;
    for (int it = 0; it < 50; ++it) {
      solve_shifted(d, e, sigma, v, pivmin);
      // Re-orthogonalize inside near-degenerate clusters.
      for (int j = 0; j < k; ++j) {
        if (std::fabs(out.eigenvalues[j] - E) < 1e-6 * matrix_norm) {
          double proj = 0.0;
          for (int i = 0; i < n; ++i) proj += out.eigenvectors[j][i] * v[i];
          for (int i = 0; i < n; ++i) v[i] -= proj * out.eigenvectors[j][i];
        }
      }
      normalize(v);
      std::vector<double> av(n);
      for (int i = 0; i < n; ++i) {
        double acc = d[i] * v[i];
        if (i > 0) acc += e[i - 1] * v[i - 1];
        if (i < n - 1) acc += e[i] * v[i + 1];
        av[i] = acc;
      }
      for (int i = 0; i < n; ++i) av[i] -= E * v[i];
      if (vec_norm(av) <= 32.0 * kEps * matrix_norm) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw numerical_error("inverse iteration did not converge within 50 iterations at index " +
                            std::to_string(k));
    if (v[0] < 0.0 || (v[0] == 0.0 && n > 1 && v[1] < 0.0))
      for (double& a : v) a = -a;  // deterministic sign convention
    out.eigenvectors.push_back(std::move(v));
    out.region_tags.push_back(tag);
  }
  return out;
}

}  // namespace

EigenDecomposition eigen_tridiagonal(const Tridiagonal& m, int count) {
  if (m.symmetry_defect() != 0.0)
    throw std::invalid_argument("eigen_tridiagonal requires an exactly symmetric matrix");
  return eigen_symmetric_tridiagonal(m.diag, m.sub, count, SpectrumTag::global);
}

EigenDecomposition eigen_tridiagonal(const std::vector<double>& diag,
                                     const std::vector<double>& offdiag, int count) {
  return eigen_symmetric_tridiagonal(diag, offdiag, count, SpectrumTag::global);
}

EigenDecomposition eigen_global(const GlobalHamiltonian& h, int count) {
  EigenDecomposition d = eigen_tridiagonal(h.matrix, count);
  const double inv_sqrt_h = 1.0 / std::sqrt(h.grid.spacing());
  for (auto& v : d.eigenvectors)
    for (double& a : v) a *= inv_sqrt_h;
  return d;
}

EigenDecomposition eigen_confined(const ConfinedHamiltonian& h, int count_per_block) {
  const int nl = h.layout.left_count();
  const int total = h.layout.size();
  const int count_left = std::min<int>(count_per_block, static_cast<int>(h.left_block.size()));
  const int count_right = std::min<int>(count_per_block, static_cast<int>(h.right_block.size()));

  EigenDecomposition left = eigen_tridiagonal(h.left_block, count_left);
  EigenDecomposition right = eigen_tridiagonal(h.right_block, count_right);

  const double inv_sqrt_h = 1.0 / std::sqrt(h.grid.spacing());

  EigenDecomposition out;
  std::size_t i = 0, j = 0;
  while (i < left.eigenvalues.size() || j < right.eigenvalues.size()) {
    // Ascending merge; exact ties resolve left-first.
    const bool take_left = j >= right.eigenvalues.size() ||
                           (i < left.eigenvalues.size() &&
                            left.eigenvalues[i] <= right.eigenvalues[j]);
    std::vector<double> embedded(total, 0.0);
    if (take_left) {
      for (int p = 0; p < nl; ++p) embedded[p] = left.eigenvectors[i][p] * inv_sqrt_h;
      out.eigenvalues.push_back(left.eigenvalues[i]);
      out.region_tags.push_back(SpectrumTag::left);
      ++i;
    } else {
      for (int p = nl; p < total; ++p) embedded[p] = right.eigenvectors[j][p - nl] * inv_sqrt_h;
      out.eigenvalues.push_back(right.eigenvalues[j]);
      out.region_tags.push_back(SpectrumTag::right);
      ++j;
    }
    out.eigenvectors.push_back(std::move(embedded));
  }
  return out;
}

namespace {

/// Matching function F(E) = cos(kL) + lambda sin(kL)/k with k = sqrt(E),
/// continued through E <= 0 (cosh/sinh branch; F(0) = 1 + lambda L). Roots
/// are the Robin levels. For deeply negative E only the sign matters; the
/// positive cosh factor is dropped there to avoid overflow.
double robin_matching(double E, double L, double lambda) {
  if (E > 0.0) {
    const double k = std::sqrt(E);
    return std::cos(k * L) + lambda * std::sin(k * L) / k;
  }
  if (E < 0.0) {
    const double kappa = std::sqrt(-E);
    if (kappa * L > 30.0) return 1.0 + (lambda / kappa) * std::tanh(kappa * L);
    return std::cosh(kappa * L) + lambda * std::sinh(kappa * L) / kappa;
  }
  return 1.0 + lambda * L;
}

}  // namespace

std::vector<double> robin_box_levels(double L, BoundaryParam bc, int count) {
  if (!(L > 0.0)) throw std::invalid_argument("robin_box_levels: L must be positive");
  if (count < 0) throw std::invalid_argument("robin_box_levels: count must be nonnegative");

  std::vector<double> levels;
  levels.reserve(count);
  const double pi = std::numbers::pi;

  if (bc.is_dirichlet()) {
    for (int m = 1; m <= count; ++m) levels.push_back((m * pi / L) * (m * pi / L));
    return levels;
  }

  const double lambda = bc.lambda();
  for (int m = 1; m <= count; ++m) {
    // The m-th Robin level interlaces the Dirichlet ladder:
    // it lies in (E^D_{m-1}, E^D_m), where E^D_0 is below any possible
    // boundary-bound state (E > -lambda^2 for lambda < 0).
    double a = (m == 1) ? (lambda >= 0.0 ? 0.0 : -lambda * lambda - 1.0)
                        : ((m - 1) * pi / L) * ((m - 1) * pi / L);
    double b = (m * pi / L) * (m * pi / L);
    double fa = robin_matching(a, L, lambda);
    double fb = robin_matching(b, L, lambda);
    if (fa == 0.0) {
      levels.push_back(a);
      continue;
    }
    if ((fa > 0.0) == (fb > 0.0))
      throw numerical_error("robin_box_levels: bracket failure at level " + std::to_string(m));
    for (int it = 0; it < 200; ++it) {
      if (b - a <= 4.0 * kEps * std::max(std::fabs(a), std::fabs(b)) +
                       2.0 * std::numeric_limits<double>::min())
        break;
      const double mid = 0.5 * (a + b);
      const double fm = robin_matching(mid, L, lambda);
      if ((fm > 0.0) == (fa > 0.0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    levels.push_back(0.5 * (a + b));
  }
  return levels;
}

double residual(const Tridiagonal& m, double E, const std::vector<double>& v) {
  const double nv = vec_norm(v);
  if (nv == 0.0) throw std::domain_error("residual of the zero vector");
  std::vector<double> r = m.apply(v);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= E * v[i];
  return vec_norm(r) / nv;
}

namespace {

template <typename H>
double residual_impl(const H& h, double E, const WaveFunction& psi) {
  const double np = norm(psi);
  if (np == 0.0) throw std::domain_error("residual of the zero state");
  WaveFunction r = apply(h, psi);
  for (int i = 0; i < r.size(); ++i) r.amp[i] -= E * psi.amp[i];
  return norm(r) / np;
}

}  // namespace

double residual(const GlobalHamiltonian& h, double E, const WaveFunction& psi) {
  return residual_impl(h, E, psi);
}

double residual(const ConfinedHamiltonian& h, double E, const WaveFunction& psi) {
  return residual_impl(h, E, psi);
}

}  // namespace qconf
