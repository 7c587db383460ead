#pragma once

#include "qconf/grid.hpp"
#include "qconf/potential.hpp"
#include "qconf/tridiagonal.hpp"
#include "qconf/wavefunction.hpp"

namespace qconf {

/// Discrete H0 = -d^2/dx^2 + V on the full interval (-L, L): the standard
/// 3-point Laplacian plus the diagonal potential, with Dirichlet truncation
/// rows at +-L. The node at x = 0 is an ordinary interior node; nothing
/// couples differently across the interface.
struct GlobalHamiltonian {
  Tridiagonal matrix;
  Grid grid;
  Potential potential;
  NodeLayout layout;
};

/// Discrete H^{lambda1,lambda2} = H_1 (+) H_2: two decoupled symmetric
/// tridiagonal blocks, one per half line, each with its own boundary
/// condition at x = 0 and a Dirichlet truncation row at -L resp. +L.
/// No stored entry couples a left node to a right node.
struct ConfinedHamiltonian {
  Tridiagonal left_block;
  Tridiagonal right_block;
  BoundaryParam bc_left;
  BoundaryParam bc_right;
  Grid grid;
  Potential potential;
  NodeLayout layout;
};

GlobalHamiltonian build_h0(const Grid& grid, const Potential& v);

/// Robin rows use second-order ghost-node elimination. Eliminating the ghost
/// gives the row [-2/h^2, 2/h^2 -+ 2*lambda/h + V(0)]; a diagonal similarity
/// rescaling of the interface node turns the -2/h^2 / -1/h^2 pair into
/// -sqrt(2)/h^2 on both sides of the diagonal, keeping the block exactly
/// symmetric with unchanged eigenvalues.
ConfinedHamiltonian build_confined(const Grid& grid, const Potential& v,
                                   BoundaryParam bc_left, BoundaryParam bc_right);

WaveFunction apply(const GlobalHamiltonian& h, const WaveFunction& psi);
WaveFunction apply(const ConfinedHamiltonian& h, const WaveFunction& psi);

double symmetry_defect(const GlobalHamiltonian& h);
double symmetry_defect(const ConfinedHamiltonian& h);

/// [P_k, H] psi = P_k(H psi) - H(P_k psi). Exactly the zero vector for every
/// confined operator; nonzero for the global operator on states coupling
/// across the interface.
WaveFunction commutator_projector(const GlobalHamiltonian& h, const WaveFunction& psi, Region k);
WaveFunction commutator_projector(const ConfinedHamiltonian& h, const WaveFunction& psi, Region k);

}  // namespace qconf
