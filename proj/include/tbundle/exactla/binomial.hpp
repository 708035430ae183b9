#pragma once

#include "tbundle/exactla/bigint.hpp"

namespace tbundle::la {

/// C(p, q) for p >= 0, extended by zero: C(p, q) = 0 when q < 0 or q > p.
/// Throws std::invalid_argument for p < 0.
BigInt binomial(long p, long q);

}  // namespace tbundle::la
