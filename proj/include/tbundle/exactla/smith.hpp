#pragma once

#include "tbundle/exactla/abelian_group.hpp"
#include "tbundle/exactla/int_matrix.hpp"

#include <cstddef>

namespace tbundle::la {

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., all d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Number of nonzero diagonal entries (= rank of M over Q).
  std::size_t rank() const;
};

SmithForm snf(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Z^rows / column-span(m): columns are relations written in a free basis of
/// rank m.rows().
AbelianGroup cokernel_structure(const IntMatrix& m);

/// Basis (as columns) of the saturated lattice {v : m v = 0}. Each column is
/// sign-normalized so its first nonzero entry is positive.
IntMatrix integer_kernel(const IntMatrix& m);

/// Basis (as columns) of (Q-span of the columns of m) intersected with Z^rows.
IntMatrix saturated_column_span(const IntMatrix& m);

}  // namespace tbundle::la
