#pragma once

#include <vector>

#include "qconf/grid.hpp"
#include "qconf/operators.hpp"
#include "qconf/tridiagonal.hpp"
#include "qconf/wavefunction.hpp"

namespace qconf {

enum class SpectrumTag { left, right, global };

/// Eigenpairs in ascending eigenvalue order. For block decompositions exact
/// ties are ordered left before right. Eigenvectors from eigen_confined are
/// orthonormal in the h-weighted inner product and vanish identically on the
/// opposite block; eigen_tridiagonal normalizes in the plain Euclidean norm.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
  std::vector<SpectrumTag> region_tags;

  int count() const { return static_cast<int>(eigenvalues.size()); }
};

/// The `count` lowest eigenpairs of a symmetric tridiagonal matrix:
/// eigenvalues by bisection on the Sturm sign-count, eigenvectors by inverse
/// iteration with shift E*(1 + 1e-8). Inverse iteration failing to converge
/// within 50 iterations raises numerical_error naming the offending index.
EigenDecomposition eigen_tridiagonal(const Tridiagonal& m, int count);
EigenDecomposition eigen_tridiagonal(const std::vector<double>& diag,
                                     const std::vector<double>& offdiag, int count);

/// Lowest eigenvalues of the global operator, tagged global, eigenvectors
/// h-weight normalized on the global layout.
EigenDecomposition eigen_global(const GlobalHamiltonian& h, int count);

/// Per-block eigenpairs of the confined operator, merged and sorted; each
/// eigenvector lives on the full confined layout and is exactly zero on the
/// opposite block.
EigenDecomposition eigen_confined(const ConfinedHamiltonian& h, int count_per_block);

/// Analytic oracle: the `count` lowest eigenvalues E of -psi'' = E psi on
/// (0, L) with psi(L) = 0 and psi'(0) = lambda psi(0) (Dirichlet: psi(0)=0).
/// Dirichlet levels are (m pi / L)^2 in closed form; Robin levels come from
/// bisection on the matching function cos(kL) + lambda sin(kL)/k continued
/// through E <= 0, bracketed between consecutive Dirichlet levels.
std::vector<double> robin_box_levels(double L, BoundaryParam bc, int count);

/// ||H psi - E psi|| / ||psi|| in the h-weighted norm. Domain error on psi = 0.
double residual(const GlobalHamiltonian& h, double E, const WaveFunction& psi);
double residual(const ConfinedHamiltonian& h, double E, const WaveFunction& psi);
double residual(const Tridiagonal& m, double E, const std::vector<double>& v);

}  // namespace qconf
