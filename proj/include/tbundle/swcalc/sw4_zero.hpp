#pragma once

#include "tbundle/exactla/bigint.hpp"
#include "tbundle/swcalc/sw_polynomial.hpp"

namespace tbundle::sw {

/// Seiberg-Witten invariant of the zero class of the principal T^2 bundle with
/// Euler class (m, n), from the coset description: sum over i in A_{m,|n|} and
/// j in Z_|n| with i - j in A_{2m,|n|} of sw^3_M(t^j), M the circle bundle with
/// Euler number n.
BigInt sw4_zero_coset(int genus, long m, long n);

/// Same, with the circle-bundle polynomial supplied (must be the one for n).
BigInt sw4_zero_coset(const SWPolynomial& circle_poly, long m, long n);

/// true when the closed form is available: n odd, or n and m both even.
bool closed_form_defined(long m, long n);

/// Closed form: sign(n) * |n| / (x gcd(|m|,|n|)) * inner sum, x = 1 for odd n
/// and x in {1, 2} for even n according to gcd(2|m|, |n|) / gcd(|m|, |n|).
/// The inner sum runs over exponents i of t divisible by gcd(|m|,|n|) (and by
/// 2 when n is even) and adds the coefficient of t^i in SW^3_M written through
/// alternating_binomial_fold. Throws UnsupportedParity for n even, m odd.
BigInt sw4_zero_closed(int genus, long m, long n);

/// sign(n) times the inner sum only: the invariant when the Euler class is not
/// a pullback. Always even. Throws UnsupportedParity for n even, m odd.
BigInt sw4_zero_nonpullback(int genus, long m, long n);

}  // namespace tbundle::sw
