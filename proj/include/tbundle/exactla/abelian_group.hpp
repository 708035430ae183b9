#pragma once

#include "tbundle/exactla/bigint.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tbundle::la {

/// Finitely generated abelian group Z^r + Z_{d1} + ... + Z_{dk} in invariant
/// factor form: every d_i >= 2 and d_i | d_{i+1}.
class AbelianGroup {
public:
  AbelianGroup() = default;
  /// Normalizes arbitrary cyclic orders: 0 becomes a free summand, 1 and -1
  /// are dropped, and the rest is brought to a divisibility chain.
  AbelianGroup(std::size_t free_rank, std::vector<BigInt> cyclic_orders);

  static AbelianGroup free(std::size_t rank) { return {rank, {}}; }

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<BigInt>& invariant_factors() const noexcept { return factors_; }
  bool is_free() const noexcept { return factors_.empty(); }

  AbelianGroup direct_sum(const AbelianGroup& other) const;

  /// "Z^4 + Z_2", "Z", "0".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
  std::size_t free_rank_ = 0;
  std::vector<BigInt> factors_;
};

}  // namespace tbundle::la
