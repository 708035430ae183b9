#include "tbundle/bundle/lattice.hpp"

#include "tbundle/exactla/smith.hpp"

namespace tbundle {

bool Lattice::contains(const Vec2& v) const {
  if (rank == 2) return true;
  if (v[0] == 0 && v[1] == 0) return true;
  if (rank == 0) return false;
  const Vec2& z = basis.front();
  // z is primitive, so v in Q z already forces v in Z z.
  return z[0] * v[1] - z[1] * v[0] == 0;
}

Lattice lattice_from_columns(const la::IntMatrix& span) {
  const la::IntMatrix sat = la::saturated_column_span(span);
  Lattice out;
  out.rank = sat.cols();
  if (out.rank == 2) {
    out.basis = {Vec2{1, 0}, Vec2{0, 1}};
  } else if (out.rank == 1) {
    // saturated_column_span hands back a Hermite-reduced primitive column
    // with positive leading entry.
    out.basis = {Vec2{sat(0, 0), sat(1, 0)}};
  }
  return out;
}

la::IntMatrix stacked_monodromy_minus_identity(const TorusBundle& bundle) {
  const auto& mono = bundle.monodromy();
  la::IntMatrix out(2 * mono.size(), 2);
  const la::IntMatrix id = la::IntMatrix::identity(2);
  for (std::size_t i = 0; i < mono.size(); ++i) out.set_block(2 * i, 0, mono[i].matrix() - id);
  return out;
}

la::IntMatrix relation_columns(const TorusBundle& bundle) {
  const auto& mono = bundle.monodromy();
  la::IntMatrix out(2, 2 * mono.size());
  const la::IntMatrix id = la::IntMatrix::identity(2);
  for (std::size_t i = 0; i < mono.size(); ++i) out.set_block(0, 2 * i, mono[i].matrix() - id);
  return out;
}

Lattice fixed_sublattice(const TorusBundle& bundle) {
  return lattice_from_columns(la::integer_kernel(stacked_monodromy_minus_identity(bundle)));
}

Lattice s_sublattice(const TorusBundle& bundle) {
  return lattice_from_columns(relation_columns(bundle));
}

}  // namespace tbundle
