#include "tbundle/exactla/abelian_group.hpp"

#include <vector>

namespace tbundle::la {

namespace {

// Pairwise (gcd, lcm) replacement; after pass i, entry i divides every later
// entry. Works without factoring.
std::vector<BigInt> invariant_chain(std::vector<BigInt> f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      BigInt g = gcd(f[i], f[j]);
      BigInt l = lcm(f[i], f[j]);
      f[i] = g;
      f[j] = l;
    }
  std::erase_if(f, [](const BigInt& d) { return d == 1; });
  return f;
}

}  // namespace

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<BigInt> cyclic_orders)
    : free_rank_(free_rank) {
  std::vector<BigInt> finite;
  bool already_chain = true;
  for (auto& d : cyclic_orders) {
    d = abs(d);
    if (d == 0) {
      ++free_rank_;
    } else if (d != 1) {
      if (!finite.empty() && d % finite.back() != 0) already_chain = false;
      finite.push_back(d);
    }
  }
  factors_ = already_chain ? std::move(finite) : invariant_chain(finite);
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const {
  std::vector<BigInt> orders = factors_;
  orders.insert(orders.end(), other.factors_.begin(), other.factors_.end());
  return {free_rank_ + other.free_rank_, std::move(orders)};
}

std::string AbelianGroup::to_string() const {
  std::string out;
  if (free_rank_ == 1) out = "Z";
  else if (free_rank_ > 1) out = "Z^" + std::to_string(free_rank_);
  for (const auto& d : factors_) {
    if (!out.empty()) out += " + ";
    out += "Z_" + d.get_str();
  }
  return out.empty() ? "0" : out;
}

}  // namespace tbundle::la
