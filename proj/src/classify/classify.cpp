#include "tbundle/classify/classify.hpp"

#include "tbundle/bundle/lattice.hpp"
#include "tbundle/errors.hpp"
#include "tbundle/spectral/spectral.hpp"

namespace tbundle::classify {

namespace {

std::string euler_text(const TorusBundle& b) {
  return "(" + b.m().get_str() + ", " + b.n().get_str() + ")";
}

std::string vec_text(const Vec2& v) { return "(" + v[0].get_str() + ", " + v[1].get_str() + ")"; }

// Governing rule for the verdict, mirroring fiber_class_nonzero.
std::vector<RationaleEntry> explain(const TorusBundle& b, const Lattice& fixed, bool nonzero) {
  std::vector<RationaleEntry> why;
  if (b.has_trivial_monodromy()) {
    if (b.is_flat()) {
      why.push_back({"trivial bundle T^2 x Sigma_g",
                     "product of symplectic manifolds; fiber class nonzero"});
    } else if (b.m() != 0 && b.n() != 0) {
      why.push_back({"principal, mn != 0",
                     "zero class is the only possible basic class and its Seiberg-Witten "
                     "invariant is even, contradicting Taubes' sw = +-1 for symplectic manifolds"});
    } else {
      why.push_back({"principal, exactly one of m, n zero",
                     "Etgu: a nontrivial circle bundle over Sigma_g does not fiber over the circle"});
    }
    why.push_back({"fiber class", "[T^2] = 0 for every nontrivial principal bundle"});
    return why;
  }
  if (fixed.rank == 0) {
    why.push_back({"no fiber-preserving circle action",
                   "rank E^2_11 depends only on the monodromy and b2 = 2 + rank E^2_11 holds for "
                   "the flat twin, so [T^2] != 0; Thurston's construction gives a compatible form"});
    return why;
  }
  const Vec2& z = fixed.basis.front();
  why.push_back({"fiber-preserving circle action with orbit class " + vec_text(z),
                 "quotient is a circle bundle; symplectic only if it is Sigma_g x S^1"});
  if (nonzero) {
    why.push_back({"Euler class " + euler_text(b) + " is a multiple of the orbit class",
                   "quotient Sigma_g x S^1 with L != A, invariant symplectic form exists"});
  } else {
    why.push_back({"Euler class " + euler_text(b) + " is not a multiple of the orbit class",
                   "quotient is a nontrivial circle bundle over Sigma_g; [T^2] = 0"});
  }
  return why;
}

}  // namespace

bool fiber_class_nonzero(const TorusBundle& bundle) {
  if (bundle.has_trivial_monodromy()) return bundle.is_flat();
  const Lattice fixed = fixed_sublattice(bundle);
  if (fixed.rank == 0) return true;
  return fixed.contains(bundle.euler());
}

bool fiber_class_via_flat_twin(const TorusBundle& bundle) {
  return homology::betti(bundle.flat_twin()).b1 == homology::betti(bundle).b1;
}

ClassificationReport is_symplectic(const TorusBundle& bundle) {
  bundle.require_representation();

  ClassificationReport rep;
  rep.h1 = homology::h1_total_space(bundle);
  rep.betti = {rep.h1.free_rank(), 2 * rep.h1.free_rank() - 2};
  const Lattice fixed = fixed_sublattice(bundle);
  rep.fixed_rank = fixed.rank;
  rep.has_circle_action = fixed.rank >= 1;
  rep.fiber_class_nonzero = fiber_class_nonzero(bundle);
  rep.symplectic = rep.fiber_class_nonzero;
  rep.rationale = explain(bundle, fixed, rep.fiber_class_nonzero);
  rep.rationale.push_back({rep.symplectic ? "symplectic" : "not symplectic",
                           "a T^2 bundle over Sigma_g (g > 1) is symplectic iff [T^2] != 0"});

  rep.cross_checks.flat_twin_b1 = fiber_class_via_flat_twin(bundle) == rep.fiber_class_nonzero;
  rep.cross_checks.spectral = spectral::fiber_class_via_spectral(bundle) == rep.fiber_class_nonzero;
  if (!rep.cross_checks.flat_twin_b1 || !rep.cross_checks.spectral)
    throw InternalInconsistency("classification oracles disagree for genus " +
                                std::to_string(bundle.genus()) + ", Euler class " +
                                euler_text(bundle));
  return rep;
}

}  // namespace tbundle::classify
