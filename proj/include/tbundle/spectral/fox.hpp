#pragma once

#include "tbundle/bundle/torus_bundle.hpp"

#include <cstddef>
#include <vector>

namespace tbundle::spectral {

/// Generator index with exponent +1 or -1. Generators of the surface group are
/// numbered a1 = 0, b1 = 1, ..., ag = 2g-2, bg = 2g-1.
struct Letter {
  std::size_t gen;
  int exp;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// r = [a1,b1] ... [ag,bg] with [a,b] = a b a^-1 b^-1.
Word surface_relator(int genus);

/// Element of the integral group ring of the free group: sum of coeff * word.
struct GroupRingTerm {
  long coeff;
  Word word;
};
using GroupRingElement = std::vector<GroupRingTerm>;

/// Left Fox derivative d(word)/d(gen): d(uv) = du + u dv, dx/dx = 1,
/// d(x^-1)/dx = -x^-1. Terms are not collected.
GroupRingElement fox_derivative(const Word& word, std::size_t gen);

/// rho(w) for the homomorphism sending generator i to images[i].
SL2Z evaluate(const Word& word, const std::vector<SL2Z>& images);

/// Linear extension of rho to the group ring.
la::IntMatrix evaluate(const GroupRingElement& element, const std::vector<SL2Z>& images);

}  // namespace tbundle::spectral
