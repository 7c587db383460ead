#include "qconf/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace qconf {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void fill_standard_rows(Tridiagonal& m, const NodeLayout& layout, int begin, int end,
                        const Potential& v, double h) {
  const double inv_h2 = 1.0 / (h * h);
  for (int i = begin; i < end; ++i) {
    m.diag[i - begin] = 2.0 * inv_h2 + v.eval(layout.x(i));
    if (i + 1 < end) {
      m.sub[i - begin] = -inv_h2;
      m.sup[i - begin] = -inv_h2;
    }
  }
}

}  // namespace

GlobalHamiltonian build_h0(const Grid& grid, const Potential& v) {
  const NodeLayout layout = NodeLayout::global(grid);
  Tridiagonal m(static_cast<std::size_t>(layout.size()));
  fill_standard_rows(m, layout, 0, layout.size(), v, grid.spacing());
  return GlobalHamiltonian{std::move(m), grid, v, layout};
}

ConfinedHamiltonian build_confined(const Grid& grid, const Potential& v,
                                   BoundaryParam bc_left, BoundaryParam bc_right) {
  const NodeLayout layout = NodeLayout::confined(grid, bc_left, bc_right);
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);

  Tridiagonal left(static_cast<std::size_t>(layout.left_count()));
  fill_standard_rows(left, layout, 0, layout.left_count(), v, h);
  if (bc_left.is_robin()) {
    // Interface node x = 0 is the last row of the left block.
    const std::size_t last = left.size() - 1;
    left.diag[last] = 2.0 * inv_h2 - 2.0 * bc_left.lambda() / h + v.eval(0.0);
    left.sub[last - 1] = -kSqrt2 * inv_h2;
    left.sup[last - 1] = -kSqrt2 * inv_h2;
  }

  Tridiagonal right(static_cast<std::size_t>(layout.right_count()));
  fill_standard_rows(right, layout, layout.left_count(), layout.size(), v, h);
  if (bc_right.is_robin()) {
    // Interface node x = 0 is the first row of the right block.
    right.diag[0] = 2.0 * inv_h2 + 2.0 * bc_right.lambda() / h + v.eval(0.0);
    right.sub[0] = -kSqrt2 * inv_h2;
    right.sup[0] = -kSqrt2 * inv_h2;
  }

  return ConfinedHamiltonian{std::move(left), std::move(right), bc_left, bc_right, grid, v, layout};
}

WaveFunction apply(const GlobalHamiltonian& h, const WaveFunction& psi) {
  if (psi.layout != h.layout) throw std::invalid_argument("apply: wavefunction does not match operator layout");
  WaveFunction out(h.layout);
  h.matrix.apply(psi.amp.data(), out.amp.data());
  return out;
}

WaveFunction apply(const ConfinedHamiltonian& h, const WaveFunction& psi) {
  if (psi.layout != h.layout) throw std::invalid_argument("apply: wavefunction does not match operator layout");
  WaveFunction out(h.layout);
  const int nl = h.layout.left_count();
  h.left_block.apply(psi.amp.data(), out.amp.data());
  h.right_block.apply(psi.amp.data() + nl, out.amp.data() + nl);
  return out;
}

double symmetry_defect(const GlobalHamiltonian& h) { return h.matrix.symmetry_defect(); }

double symmetry_defect(const ConfinedHamiltonian& h) {
  return std::max(h.left_block.symmetry_defect(), h.right_block.symmetry_defect());
}

namespace {

template <typename H>
WaveFunction commutator_impl(const H& h, const WaveFunction& psi, Region k) {
  WaveFunction a = project_region(apply(h, psi), k);
  WaveFunction b = apply(h, project_region(psi, k));
  for (int i = 0; i < a.size(); ++i) a.amp[i] -= b.amp[i];
  return a;
}

}  // namespace

WaveFunction commutator_projector(const GlobalHamiltonian& h, const WaveFunction& psi, Region k) {
  return commutator_impl(h, psi, k);
}

WaveFunction commutator_projector(const ConfinedHamiltonian& h, const WaveFunction& psi, Region k) {
  return commutator_impl(h, psi, k);
}

}  // namespace qconf
