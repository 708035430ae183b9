#pragma once

#include "tbundle/bundle/lattice.hpp"
#include "tbundle/exactla/abelian_group.hpp"

#include <cstddef>
#include <string_view>

namespace tbundle::homology {

enum class Trichotomy { TrivialBundle, NontrivialWithCircleAction, NoCircleAction };

std::string_view to_string(Trichotomy t);

struct Betti {
  std::size_t b1 = 0;
  std::size_t b2 = 0;

  friend bool operator==(const Betti&, const Betti&) = default;
};

/// Relation matrix of H1(E) restricted to the fiber generators x1, x2: the
/// columns (A_i - I) e_j, followed by (m, n) when the bundle is not flat.
la::IntMatrix fiber_relations(const TorusBundle& bundle);

/// H1(E) = Z^{2g} + Z^2 / <(A_i - I) x_j, m x1 + n x2>.
la::AbelianGroup h1_total_space(const TorusBundle& bundle);

/// H1 of the circle bundle over Sigma_g with Euler number n: Z^{2g} + Z_|n|,
/// which is Z^{2g+1} for n = 0.
la::AbelianGroup h1_circle_bundle(int genus, const BigInt& n);

/// b1 from H1(E); b2 = 2 b1 - 2 since chi(E) = 0.
Betti betti(const TorusBundle& bundle);

/// Flat bundles only; throws NotFlatError otherwise.
Trichotomy trichotomy(const TorusBundle& bundle);

/// A free fiber-preserving circle action exists iff the monodromy has a
/// common nonzero fixed vector. Independent of the Euler class.
bool has_fiber_circle_action(const TorusBundle& bundle);

}  // namespace tbundle::homology
