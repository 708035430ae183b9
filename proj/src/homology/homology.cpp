#include "tbundle/homology/homology.hpp"

#include "tbundle/errors.hpp"
#include "tbundle/exactla/smith.hpp"

#include <stdexcept>

namespace tbundle::homology {

std::string_view to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::TrivialBundle: return "trivial bundle";
    case Trichotomy::NontrivialWithCircleAction: return "nontrivial, fiber circle action";
    case Trichotomy::NoCircleAction: return "no fiber circle action";
  }
  return "?";
}

la::IntMatrix fiber_relations(const TorusBundle& bundle) {
  la::IntMatrix rel = relation_columns(bundle);
  if (bundle.is_flat()) return rel;
  la::IntMatrix euler(2, 1);
  euler(0, 0) = bundle.m();
  euler(1, 0) = bundle.n();
  return la::hconcat(rel, euler);
}

la::AbelianGroup h1_total_space(const TorusBundle& bundle) {
  const auto base = la::AbelianGroup::free(2 * static_cast<std::size_t>(bundle.genus()));
  return base.direct_sum(la::cokernel_structure(fiber_relations(bundle)));
}

la::AbelianGroup h1_circle_bundle(int genus, const BigInt& n) {
  if (genus < 2) throw std::invalid_argument("h1_circle_bundle: genus must be at least 2");
  return {2 * static_cast<std::size_t>(genus), {n}};
}

Betti betti(const TorusBundle& bundle) {
  const std::size_t b1 = h1_total_space(bundle).free_rank();
  return {b1, 2 * b1 - 2};
}

Trichotomy trichotomy(const TorusBundle& bundle) {
  if (!bundle.is_flat())
    throw NotFlatError("trichotomy: bundle has Euler class (" + bundle.m().get_str() + ", " +
                       bundle.n().get_str() + "), expected a flat bundle");
  if (bundle.has_trivial_monodromy()) return Trichotomy::TrivialBundle;
  return fixed_sublattice(bundle).rank == 1 ? Trichotomy::NontrivialWithCircleAction
                                            : Trichotomy::NoCircleAction;
}

bool has_fiber_circle_action(const TorusBundle& bundle) {
  return fixed_sublattice(bundle).rank >= 1;
}

}  // namespace tbundle::homology
