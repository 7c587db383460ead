#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

namespace qconf {

/// The two half lines meeting at the interface x = 0. Region::left is
/// (-inf, 0), Region::right is (0, +inf); the interface node itself is
/// assigned by the layout rules below.
enum class Region { left, right };

inline int region_index(Region r) { return r == Region::left ? 1 : 2; }

inline Region region_from_index(int k) {
  if (k != 1 && k != 2) throw std::invalid_argument("region index must be 1 or 2");
  return k == 1 ? Region::left : Region::right;
}

/// Uniform grid on [-L, L] with the interface at x = 0 and hard Dirichlet
/// truncation walls at +-L. Node positions are integer multiples of the
/// spacing h = L / n_per_side, so mirror nodes are exact negations.
struct Grid {
  double half_width = 1.0;  // L
  int n_per_side = 3;

  Grid() = default;
  Grid(double L, int n) : half_width(L), n_per_side(n) {
    if (!(L > 0.0) || !std::isfinite(L))
      throw std::invalid_argument("grid half width must be positive and finite");
    if (n < 2) throw std::invalid_argument("n_per_side must be at least 2");
  }

  double spacing() const { return half_width / n_per_side; }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.half_width == b.half_width && a.n_per_side == b.n_per_side;
  }
};

/// Boundary condition at x = 0 for one half-line block: either the Robin
/// condition phi'(0) = lambda * phi(0) with finite real lambda, or the
/// Dirichlet condition phi(0) = 0 (the lambda = infinity member of the
/// family). lambda = 0 is Robin (Neumann), never Dirichlet.
class BoundaryParam {
 public:
  static BoundaryParam robin(double lambda) {
    if (!std::isfinite(lambda))
      throw std::invalid_argument("Robin lambda must be finite; use dirichlet() for the infinite case");
    BoundaryParam b;
    b.lambda_ = lambda;
    return b;
  }
  static BoundaryParam dirichlet() { return BoundaryParam{}; }

  bool is_dirichlet() const { return !lambda_.has_value(); }
  bool is_robin() const { return lambda_.has_value(); }
  double lambda() const {
    if (!lambda_) throw std::logic_error("Dirichlet boundary has no finite lambda");
    return *lambda_;
  }

  friend bool operator==(const BoundaryParam& a, const BoundaryParam& b) {
    return a.lambda_ == b.lambda_;
  }

 private:
  BoundaryParam() = default;
  std::optional<double> lambda_;
};

/// Enumerates the degrees of freedom of an assembled operator: left-block
/// nodes in ascending x, then right-block nodes in ascending x.
///
/// Interface-node ownership:
///  - global layout: one node at x = 0, tagged Region::right;
///  - confined layout: the left block ends at x = 0 iff bc_left is Robin,
///    the right block starts at x = 0 iff bc_right is Robin. With two Robin
///    conditions the node is duplicated, one copy per block, so the blocks
///    stay fully decoupled; with two Dirichlet conditions it is dropped.
class NodeLayout {
 public:
  static NodeLayout global(const Grid& grid) {
    NodeLayout l;
    l.grid_ = grid;
    l.left_count_ = grid.n_per_side - 1;       // x = -L+h .. -h
    l.right_count_ = grid.n_per_side;          // x = 0 .. L-h (0 tagged right)
    l.right_excludes_zero_ = false;
    l.split_ = false;
    return l;
  }

  static NodeLayout confined(const Grid& grid, BoundaryParam bc_left, BoundaryParam bc_right) {
    NodeLayout l;
    l.grid_ = grid;
    l.left_count_ = bc_left.is_robin() ? grid.n_per_side : grid.n_per_side - 1;
    l.right_count_ = bc_right.is_robin() ? grid.n_per_side : grid.n_per_side - 1;
    l.right_excludes_zero_ = bc_right.is_dirichlet();
    l.split_ = true;
    return l;
  }

  const Grid& grid() const { return grid_; }
  int size() const { return left_count_ + right_count_; }
  int left_count() const { return left_count_; }
  int right_count() const { return right_count_; }
  bool is_split() const { return split_; }

  Region region(int i) const { return i < left_count_ ? Region::left : Region::right; }

  /// Node position; exact mirror symmetry because every x is an integer
  /// multiple of h.
  double x(int i) const {
    const double h = grid_.spacing();
    if (i < left_count_) return (i + 1 - grid_.n_per_side) * h;
    const int m = i - left_count_;
    return (m + (right_excludes_zero_ ? 1 : 0)) * h;
  }

  friend bool operator==(const NodeLayout& a, const NodeLayout& b) {
    return a.grid_ == b.grid_ && a.left_count_ == b.left_count_ &&
           a.right_count_ == b.right_count_ &&
           a.right_excludes_zero_ == b.right_excludes_zero_ && a.split_ == b.split_;
  }
  friend bool operator!=(const NodeLayout& a, const NodeLayout& b) { return !(a == b); }

 private:
  NodeLayout() = default;
  Grid grid_;
  int left_count_ = 0;
  int right_count_ = 0;
  bool right_excludes_zero_ = true;
  bool split_ = false;
};

}  // namespace qconf
