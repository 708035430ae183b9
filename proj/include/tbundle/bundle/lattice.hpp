#pragma once

#include "tbundle/bundle/torus_bundle.hpp"

#include <cstddef>
#include <vector>

namespace tbundle {

/// Saturated sublattice of Z^2. Rank-1 bases hold one primitive vector whose
/// first nonzero coordinate is positive; a rank-2 saturated lattice is Z^2 and
/// is stored with the standard basis.
struct Lattice {
  std::size_t rank = 0;
  std::vector<Vec2> basis;

  /// v lies in the lattice (for saturated lattices: in its rational span).
  bool contains(const Vec2& v) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;
};

/// Columns of `span` (2 x k) saturated into a Lattice.
Lattice lattice_from_columns(const la::IntMatrix& span);

/// {z : A_i z = z for all i}.
Lattice fixed_sublattice(const TorusBundle& bundle);

/// Saturation of S = <A_i x1 - x1, A_i x2 - x2>.
Lattice s_sublattice(const TorusBundle& bundle);

/// 4g x 2: the blocks (A_i - I) stacked vertically.
la::IntMatrix stacked_monodromy_minus_identity(const TorusBundle& bundle);

/// 2 x 4g: the blocks (A_i - I) side by side; its columns generate S.
la::IntMatrix relation_columns(const TorusBundle& bundle);

}  // namespace tbundle
