#pragma once

#include "tbundle/exactla/bigint.hpp"

#include <string>
#include <vector>

namespace tbundle::sw {

/// sum_k coeffs[k] t^k with t^|n| = 1. Only the representative with the
/// sign(n) prefactor is produced; SW invariants are defined up to a global sign.
struct SWPolynomial {
  long modulus = 1;
  std::vector<BigInt> coeffs;

  const BigInt& operator[](long k) const { return coeffs[static_cast<std::size_t>(k)]; }
  bool is_zero() const;
  BigInt coefficient_sum() const;

  /// "-2 + 1*t^1 + 1*t^4": zero terms omitted, "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const SWPolynomial&, const SWPolynomial&) = default;
};

/// Seiberg-Witten invariants of S^1 x Sigma_g on the classes s * pr^*(lambda),
/// s = -(g-1) .. g-1: c_s = (-1)^(g-1+s) C(2g-2, g-1+s). Element [s + g - 1].
std::vector<BigInt> product_sw_coefficients(int genus);

/// sum_{k=-(2g-2)}^{2g-2} (-1)^((g-1)+i+k*step) C(2g-2, (g-1)+i+k*step)
BigInt alternating_binomial_fold(int genus, long i, long step);

/// Closed formula for the circle bundle over Sigma_g with Euler number n:
/// n = 2l even puts mass only on t^{2i}, 0 <= i < |l|, with step |l|; n odd
/// fills t^i, 0 <= i < |n|, with step |n|. Throws for n = 0 or genus < 2.
SWPolynomial sw_poly_circle_bundle(int genus, long n);

/// The same polynomial obtained by folding product_sw_coefficients: c_s lands
/// on t^(s mod |n|) for odd n and on t^(2 (s mod |n|/2)) for even n.
SWPolynomial fold_product_poly(int genus, long n);

}  // namespace tbundle::sw
