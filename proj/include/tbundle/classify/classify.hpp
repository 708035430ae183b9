#pragma once

#include "tbundle/bundle/torus_bundle.hpp"
#include "tbundle/homology/homology.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tbundle::classify {

/// One step of the decision: which rule fired and the result it rests on.
struct RationaleEntry {
  std::string rule;
  std::string citation;

  friend bool operator==(const RationaleEntry&, const RationaleEntry&) = default;
};

struct CrossChecks {
  /// b1(flat twin) == b1(E) agrees with the rule-based fiber-class verdict.
  bool flat_twin_b1 = false;
  /// b2(E) == 2 + rank E^2_11 agrees with the rule-based verdict.
  bool spectral = false;

  friend bool operator==(const CrossChecks&, const CrossChecks&) = default;
};

struct ClassificationReport {
  la::AbelianGroup h1;
  homology::Betti betti;
  std::size_t fixed_rank = 0;
  bool has_circle_action = false;
  bool fiber_class_nonzero = false;
  bool symplectic = false;
  std::vector<RationaleEntry> rationale;
  CrossChecks cross_checks;
};

/// Rule-based decision of [T^2] != 0 in H2(E; R):
///   trivial monodromy: only for (m, n) = (0, 0);
///   no common fixed vector: always;
///   fixed line Z z: exactly when (m, n) is a multiple of z.
bool fiber_class_nonzero(const TorusBundle& bundle);

/// The independent homological oracle: rank drops when the Euler relation is
/// added iff the fiber class dies.
bool fiber_class_via_flat_twin(const TorusBundle& bundle);

/// E is symplectic iff [T^2] != 0. Runs the rule, the flat-twin b1 oracle and
/// the spectral oracle; throws InternalInconsistency if they disagree and
/// NotARepresentation if the monodromy is not a surface group representation.
ClassificationReport is_symplectic(const TorusBundle& bundle);

}  // namespace tbundle::classify
