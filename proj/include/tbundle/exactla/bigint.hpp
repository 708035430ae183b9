#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace tbundle {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

// long is 64 bits on every platform we build for (LP64).
static_assert(sizeof(long) == sizeof(std::int64_t));

inline std::optional<std::int64_t> to_int64(const BigInt& x) {
  if (!x.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(x.get_si());
}

inline BigInt from_int64(std::int64_t v) { return BigInt(static_cast<long>(v)); }

}  // namespace tbundle
