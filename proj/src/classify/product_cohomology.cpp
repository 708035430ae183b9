#include "tbundle/classify/product_cohomology.hpp"

#include "tbundle/exactla/smith.hpp"

#include <stdexcept>
#include <string>

namespace tbundle::classify {

namespace {

void check(int genus, std::size_t len, const char* who) {
  if (genus < 2) throw std::invalid_argument(std::string(who) + ": genus must be at least 2");
  if (len != 2 * static_cast<std::size_t>(genus))
    throw std::invalid_argument(std::string(who) + ": expected 2g surface coefficients");
}

}  // namespace

la::IntMatrix cup_functional(int genus, const ProductClassH2& c1) {
  check(genus, c1.kvec.size(), "cup_functional");
  const std::size_t g2 = c1.kvec.size();
  la::IntMatrix f(1, g2 + 1);
  // (J kvec) for J = diag([[0,1],[-1,0]]).
  for (std::size_t i = 0; i < g2; i += 2) {
    f(0, i) = c1.kvec[i + 1];
    f(0, i + 1) = -c1.kvec[i];
  }
  f(0, g2) = c1.n;
  return f;
}

la::IntMatrix l_subspace(int genus, const ProductClassH2& c1) {
  return la::integer_kernel(cup_functional(genus, c1));
}

bool invariant_symplectic_exists(int genus, const ProductClassH2& c1) {
  const la::IntMatrix l = l_subspace(genus, c1);
  const std::size_t s1 = l.rows() - 1;
  for (std::size_t c = 0; c < l.cols(); ++c)
    if (l(s1, c) != 0) return true;
  return false;
}

BigInt thurston_norm_product(int genus, const ProductClassH1& x) {
  check(genus, x.b.size(), "thurston_norm_product");
  return abs(x.k) * (2 * genus - 2);
}

}  // namespace tbundle::classify
