#pragma once

#include "tbundle/bundle/torus_bundle.hpp"
#include "tbundle/exactla/int_matrix.hpp"

#include <cstddef>
#include <vector>

namespace tbundle::spectral {

/// Boundary maps of Z^2_rho (x)_{Z Pi} C_*(universal cover of Sigma_g):
///
///   Z^2 --D2--> Z^{4g} --D1--> Z^2
///
/// The coefficient module is Z^2 as row vectors with v.g = v rho(g); written
/// for column vectors, block j of D1 is rho(x_j)^T - I and block j of D2 is
/// rho(dr/dx_j)^T, r the surface relator. D1 * D2 = 0 whenever rho(r) = I.
struct FoxComplex {
  la::IntMatrix d2;  // 4g x 2
  la::IntMatrix d1;  // 2 x 4g
};

/// Throws NotARepresentation if the tuple violates the surface relation and
/// ValidationError on wrong arity.
FoxComplex fox_boundary_matrices(int genus, const std::vector<SL2Z>& monodromy);

/// Ranks of E^2_{pq} = H_p(Sigma_g; H_q(T^2)).
struct E2Ranks {
  std::size_t e00 = 0, e10 = 0, e20 = 0;
  std::size_t e01 = 0, e11 = 0, e21 = 0;
  std::size_t e02 = 0, e12 = 0, e22 = 0;

  friend bool operator==(const E2Ranks&, const E2Ranks&) = default;
};

E2Ranks e2_ranks(int genus, const std::vector<SL2Z>& monodromy);

/// [T^2] != 0 in H2(E; R), decided as b2(E) == 2 + rank E^2_{11}.
bool fiber_class_via_spectral(const TorusBundle& bundle);

}  // namespace tbundle::spectral
