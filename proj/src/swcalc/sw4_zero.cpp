#include "tbundle/swcalc/sw4_zero.hpp"

#include "tbundle/errors.hpp"
#include "tbundle/swcalc/residues.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tbundle::sw {

namespace {

void check_args(int genus, long n, const char* who) {
  if (genus < 2) throw std::invalid_argument(std::string(who) + ": genus must be at least 2");
  if (n == 0) throw std::invalid_argument(std::string(who) + ": n must be nonzero");
}

void check_parity(long m, long n, const char* who) {
  if (!closed_form_defined(m, n))
    throw UnsupportedParity(std::string(who) + ": no closed form for n even and m odd (m=" +
                            std::to_string(m) + ", n=" + std::to_string(n) +
                            "); use the coset formula");
}

// sum over exponents i in [0, |n|) with gcd(|m|,|n|) | i (and 2 | i for even n)
// of the coefficient of t^i, without the sign(n) factor.
BigInt inner_sum(int genus, long m, long n) {
  const long modulus = std::labs(n);
  const long d = std::gcd(std::labs(m), modulus);
  BigInt acc = 0;
  for (long i = 0; i < modulus; i += d) {
    if (n % 2 != 0) {
      acc += alternating_binomial_fold(genus, i, modulus);
    } else if (i % 2 == 0) {
      // t^i with i even carries index i/2 of the t^{2i} expansion.
      acc += alternating_binomial_fold(genus, i / 2, modulus / 2);
    }
  }
  return acc;
}

}  // namespace

BigInt sw4_zero_coset(const SWPolynomial& circle_poly, long m, long n) {
  if (n == 0) throw std::invalid_argument("sw4_zero_coset: n must be nonzero");
  if (circle_poly.modulus != std::labs(n))
    throw std::invalid_argument("sw4_zero_coset: polynomial modulus does not match n");
  const ResidueSet a = subgroup_A(m, n);
  const ResidueSet a2 = subgroup_A(2 * m, n);
  BigInt acc = 0;
  for (long i : a.members)
    for (long k : a2.members) acc += circle_poly[mod_floor(i - k, a.modulus)];
  return acc;
}

BigInt sw4_zero_coset(int genus, long m, long n) {
  check_args(genus, n, "sw4_zero_coset");
  return sw4_zero_coset(sw_poly_circle_bundle(genus, n), m, n);
}

bool closed_form_defined(long m, long n) { return n % 2 != 0 || m % 2 == 0; }

BigInt sw4_zero_closed(int genus, long m, long n) {
  check_args(genus, n, "sw4_zero_closed");
  check_parity(m, n, "sw4_zero_closed");
  const long modulus = std::labs(n);
  const long d = std::gcd(std::labs(m), modulus);
  long x = 1;
  if (n % 2 == 0 && std::gcd(2 * std::labs(m), modulus) == 2 * d) x = 2;
  BigInt value = (modulus / (x * d)) * inner_sum(genus, m, n);
  return n > 0 ? value : BigInt(-value);
}

BigInt sw4_zero_nonpullback(int genus, long m, long n) {
  check_args(genus, n, "sw4_zero_nonpullback");
  check_parity(m, n, "sw4_zero_nonpullback");
  BigInt value = inner_sum(genus, m, n);
  return n > 0 ? value : BigInt(-value);
}

}  // namespace tbundle::sw
