#include "tbundle/swcalc/sw_polynomial.hpp"

#include "tbundle/exactla/binomial.hpp"
#include "tbundle/swcalc/residues.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace tbundle::sw {

namespace {

void check_args(int genus, long n, const char* who) {
  if (genus < 2) throw std::invalid_argument(std::string(who) + ": genus must be at least 2");
  if (n == 0) throw std::invalid_argument(std::string(who) + ": n must be nonzero");
}

int sign(long n) { return n > 0 ? 1 : -1; }

bool odd(long x) { return (x % 2) != 0; }

}  // namespace

bool SWPolynomial::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

BigInt SWPolynomial::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& c : coeffs) s += c;
  return s;
}

std::string SWPolynomial::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const BigInt& c = coeffs[k];
    if (c == 0) continue;
    std::string mag = BigInt(abs(c)).get_str();
    if (k > 0) mag += "*t^" + std::to_string(k);
    if (out.empty()) out = (c < 0 ? "-" : "") + mag;
    else out += (c < 0 ? " - " : " + ") + mag;
  }
  return out.empty() ? "0" : out;
}

std::vector<BigInt> product_sw_coefficients(int genus) {
  if (genus < 2) throw std::invalid_argument("product_sw_coefficients: genus must be at least 2");
  const long h = genus - 1;
  std::vector<BigInt> c;
  c.reserve(static_cast<std::size_t>(2 * h + 1));
  for (long s = -h; s <= h; ++s) {
    BigInt v = la::binomial(2 * h, h + s);
    c.push_back(odd(h + s) ? BigInt(-v) : v);
  }
  return c;
}

BigInt alternating_binomial_fold(int genus, long i, long step) {
  const long h = genus - 1;
  BigInt acc = 0;
  for (long k = -2 * h; k <= 2 * h; ++k) {
    const long q = h + i + k * step;
    if (q < 0 || q > 2 * h) continue;
    if (odd(q)) acc -= la::binomial(2 * h, q);
    else acc += la::binomial(2 * h, q);
  }
  return acc;
}

SWPolynomial sw_poly_circle_bundle(int genus, long n) {
  check_args(genus, n, "sw_poly_circle_bundle");
  const long modulus = std::labs(n);
  SWPolynomial p{modulus, std::vector<BigInt>(static_cast<std::size_t>(modulus))};
  if (odd(n)) {
    for (long i = 0; i < modulus; ++i)
      p.coeffs[static_cast<std::size_t>(i)] = alternating_binomial_fold(genus, i, modulus);
  } else {
    const long l = modulus / 2;
    for (long i = 0; i < l; ++i)
      p.coeffs[static_cast<std::size_t>(2 * i)] = alternating_binomial_fold(genus, i, l);
  }
  if (n < 0)
    for (auto& c : p.coeffs) c = -c;
  return p;
}

SWPolynomial fold_product_poly(int genus, long n) {
  check_args(genus, n, "fold_product_poly");
  const long modulus = std::labs(n);
  const long h = genus - 1;
  const std::vector<BigInt> c = product_sw_coefficients(genus);
  SWPolynomial p{modulus, std::vector<BigInt>(static_cast<std::size_t>(modulus))};
  for (long s = -h; s <= h; ++s) {
    const long index = odd(n) ? mod_floor(s, modulus) : 2 * mod_floor(s, modulus / 2);
    p.coeffs[static_cast<std::size_t>(index)] += sign(n) * c[static_cast<std::size_t>(s + h)];
  }
  return p;
}

}  // namespace tbundle::sw
