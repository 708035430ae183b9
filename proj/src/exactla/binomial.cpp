#include "tbundle/exactla/binomial.hpp"

#include <stdexcept>
#include <string>

namespace tbundle::la {

BigInt binomial(long p, long q) {
  if (p < 0) throw std::invalid_argument("binomial: negative upper index " + std::to_string(p));
  if (q < 0 || q > p) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(q));
  return out;
}

}  // namespace tbundle::la
