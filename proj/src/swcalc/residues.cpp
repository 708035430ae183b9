#include "tbundle/swcalc/residues.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace tbundle::sw {

bool ResidueSet::contains(long residue) const {
  return std::binary_search(members.begin(), members.end(), mod_floor(residue, modulus));
}

ResidueSet subgroup_A(long m, long n) {
  if (n == 0) throw std::invalid_argument("subgroup_A: n must be nonzero");
  const long modulus = std::labs(n);
  // <m> in Z_N is the set of multiples of gcd(m, N).
  const long step = std::gcd(mod_floor(m, modulus), modulus);
  ResidueSet out{modulus, {}};
  for (long x = 0; x < modulus; x += step) out.members.push_back(x);
  return out;
}

}  // namespace tbundle::sw
