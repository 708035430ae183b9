#pragma once

#include <vector>

namespace tbundle::sw {

/// Subset of Z_modulus, members sorted ascending in [0, modulus).
struct ResidueSet {
  long modulus = 1;
  std::vector<long> members;

  bool contains(long residue) const;
  std::size_t size() const noexcept { return members.size(); }

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
};

/// Canonical representative of x in [0, modulus).
inline long mod_floor(long x, long modulus) {
  const long r = x % modulus;
  return r < 0 ? r + modulus : r;
}

/// A_{m,n}: the cyclic subgroup of Z_|n| generated by m. Throws
/// std::invalid_argument for n = 0.
ResidueSet subgroup_A(long m, long n);

}  // namespace tbundle::sw
