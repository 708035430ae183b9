#include "tbundle/spectral/spectral.hpp"

#include "tbundle/errors.hpp"
#include "tbundle/exactla/smith.hpp"
#include "tbundle/homology/homology.hpp"
#include "tbundle/spectral/fox.hpp"

#include <string>

namespace tbundle::spectral {

FoxComplex fox_boundary_matrices(int genus, const std::vector<SL2Z>& monodromy) {
  // Reuse the bundle validation for genus and arity.
  TorusBundle(genus, monodromy, Vec2{0, 0}).require_representation();

  const std::size_t gens = monodromy.size();
  const Word relator = surface_relator(genus);
  const la::IntMatrix id = la::IntMatrix::identity(2);

  FoxComplex cx{la::IntMatrix(2 * gens, 2), la::IntMatrix(2, 2 * gens)};
  for (std::size_t j = 0; j < gens; ++j) {
    cx.d1.set_block(0, 2 * j, monodromy[j].matrix().transpose() - id);
    cx.d2.set_block(2 * j, 0, evaluate(fox_derivative(relator, j), monodromy).transpose());
  }
  return cx;
}

E2Ranks e2_ranks(int genus, const std::vector<SL2Z>& monodromy) {
  const FoxComplex cx = fox_boundary_matrices(genus, monodromy);
  const std::size_t rank_d1 = la::rank(cx.d1);
  const std::size_t rank_d2 = la::rank(cx.d2);
  const std::size_t g2 = 2 * static_cast<std::size_t>(genus);

  E2Ranks r;
  r.e00 = r.e20 = r.e02 = r.e22 = 1;
  r.e10 = r.e12 = g2;
  r.e01 = 2 - rank_d1;                   // coinvariants, coker D1
  r.e21 = 2 - rank_d2;                   // invariants, ker D2
  r.e11 = (2 * g2 - rank_d1) - rank_d2;  // ker D1 / im D2
  return r;
}

bool fiber_class_via_spectral(const TorusBundle& bundle) {
  const E2Ranks r = e2_ranks(bundle.genus(), bundle.monodromy());
  return homology::betti(bundle).b2 == r.e20 + r.e11 + r.e02;
}

}  // namespace tbundle::spectral
