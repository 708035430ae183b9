#include "doctest.h"

#include "support/generators.hpp"
#include "tbundle/classify/classify.hpp"
#include "tbundle/classify/product_cohomology.hpp"
#include "tbundle/errors.hpp"
#include "tbundle/spectral/spectral.hpp"

using namespace tbundle;
using namespace tbundle::classify;
using testing::Rng;

namespace {

const SL2Z kU = testing::unipotent_upper();
const SL2Z kR = testing::quarter_turn();

TorusBundle with_first(const SL2Z& a1, Vec2 euler) {
  return {2, {a1, SL2Z(), SL2Z(), SL2Z()}, std::move(euler)};
}

ProductClassH2 c1(long n, std::vector<long> kvec) {
  ProductClassH2 c{n, {}};
  for (long k : kvec) c.kvec.emplace_back(k);
  return c;
}

}  // namespace

TEST_CASE("fiber class examples") {
  CHECK(fiber_class_nonzero(TorusBundle::principal(2, {0, 0})));
  CHECK_FALSE(fiber_class_nonzero(TorusBundle::principal(2, {1, 1})));
  CHECK(fiber_class_nonzero(with_first(kU, {2, 0})));
  CHECK(fiber_class_via_flat_twin(with_first(kU, {2, 0})));
  CHECK_FALSE(fiber_class_nonzero(with_first(kU, {0, 1})));
  CHECK(fiber_class_nonzero(with_first(kR, {5, 7})));
  CHECK(fiber_class_nonzero(with_first(kU, {0, 0})));
}

TEST_CASE("is_symplectic examples") {
  const auto principal = is_symplectic(TorusBundle::principal(2, {2, 3}));
  CHECK_FALSE(principal.symplectic);
  CHECK(principal.rationale.front().rule == "principal, mn != 0");
  CHECK(principal.rationale.back().rule == "not symplectic");

  const auto one_zero = is_symplectic(TorusBundle::principal(2, {0, 3}));
  CHECK_FALSE(one_zero.symplectic);
  CHECK(one_zero.rationale.front().rule == "principal, exactly one of m, n zero");

  const auto rot = is_symplectic(with_first(kR, {5, 7}));
  CHECK(rot.symplectic);
  CHECK(rot.fixed_rank == 0);
  CHECK_FALSE(rot.has_circle_action);
  CHECK(rot.rationale.front().rule == "no fiber-preserving circle action");

  const auto uni = is_symplectic(with_first(kU, {0, 1}));
  CHECK_FALSE(uni.symplectic);
  CHECK(uni.has_circle_action);
  CHECK(uni.betti == homology::Betti{4, 6});
  CHECK(uni.cross_checks.flat_twin_b1);
  CHECK(uni.cross_checks.spectral);

  const auto trivial = is_symplectic(TorusBundle::principal(2, {0, 0}));
  CHECK(trivial.symplectic);
  CHECK(trivial.h1 == la::AbelianGroup::free(6));
  CHECK(trivial.rationale.front().rule == "trivial bundle T^2 x Sigma_g");
}

TEST_CASE("is_symplectic requires a representation") {
  CHECK_THROWS_AS(is_symplectic(TorusBundle(2, {kU, kR, SL2Z(), SL2Z()}, {0, 0})), NotARepresentation);
}

TEST_CASE("triple agreement on random bundles") {
  Rng rng(71);
  for (int i = 0; i < 400; ++i) {
    const auto b = testing::random_bundle(rng, 2 + i % 2, 5);
    const bool rule = fiber_class_nonzero(b);
    CHECK(rule == fiber_class_via_flat_twin(b));
    CHECK(rule == spectral::fiber_class_via_spectral(b));
    const auto rep = is_symplectic(b);
    CHECK(rep.symplectic == rep.fiber_class_nonzero);
    CHECK(rep.cross_checks == CrossChecks{true, true});
    CHECK(rep.betti.b2 == 2 * rep.betti.b1 - 2);
    CHECK_FALSE(rep.rationale.empty());
  }
}

TEST_CASE("verdicts are invariant under change of fiber basis") {
  Rng rng(73);
  for (int i = 0; i < 200; ++i) {
    const auto b = testing::random_bundle(rng, 2, 5);
    const auto moved = b.change_fiber_basis(testing::random_word(rng, 5));
    const auto r0 = is_symplectic(b);
    const auto r1 = is_symplectic(moved);
    CHECK(r0.symplectic == r1.symplectic);
    CHECK(r0.h1 == r1.h1);
    CHECK(r0.fixed_rank == r1.fixed_rank);
    CHECK(r0.has_circle_action == r1.has_circle_action);
  }
}

TEST_CASE("principal bundles are symplectic only when trivial") {
  for (int g = 2; g <= 4; ++g)
    for (long m = -5; m <= 5; ++m)
      for (long n = -5; n <= 5; ++n) {
        const auto rep = is_symplectic(TorusBundle::principal(g, {m, n}));
        CHECK(rep.symplectic == (m == 0 && n == 0));
      }
}

TEST_CASE("fixed line membership governs unipotent bundles") {
  for (long m = -5; m <= 5; ++m)
    for (long n = -5; n <= 5; ++n) CHECK(fiber_class_nonzero(with_first(kU, {m, n})) == (n == 0));
}

TEST_CASE("L subspace examples") {
  CHECK(l_subspace(2, c1(0, {0, 0, 0, 0})).cols() == 5);
  const auto pullbacks = l_subspace(2, c1(3, {0, 0, 0, 0}));
  CHECK(pullbacks.cols() == 4);
  for (std::size_t j = 0; j < pullbacks.cols(); ++j) CHECK(pullbacks(4, j) == 0);

  const auto l = l_subspace(2, c1(0, {1, 0, 0, 0}));
  CHECK(l.cols() == 4);
  CHECK((cup_functional(2, c1(0, {1, 0, 0, 0})) * l).is_zero());
  bool has_circle = false;
  for (std::size_t j = 0; j < l.cols(); ++j) has_circle = has_circle || l(4, j) != 0;
  CHECK(has_circle);
}

TEST_CASE("L is the kernel of the cup functional") {
  Rng rng(79);
  for (int i = 0; i < 100; ++i) {
    const int g = 2 + i % 3;
    ProductClassH2 c{testing::uniform(rng, -3, 3), {}};
    for (int k = 0; k < 2 * g; ++k) c.kvec.emplace_back(testing::uniform(rng, -2, 2));
    const auto f = cup_functional(g, c);
    const auto l = l_subspace(g, c);
    CHECK((f * l).is_zero());
    CHECK(l.cols() == (f.is_zero() ? 2u * g + 1 : 2u * g));
  }
}

TEST_CASE("invariant symplectic form criterion") {
  CHECK(invariant_symplectic_exists(2, c1(0, {0, 0, 0, 0})));
  CHECK_FALSE(invariant_symplectic_exists(2, c1(4, {0, 0, 0, 0})));
  CHECK(invariant_symplectic_exists(2, c1(4, {0, 1, 0, 0})));
  CHECK(invariant_symplectic_exists(3, c1(0, {0, 0, 0, 0, 2, 0})));
  CHECK(invariant_symplectic_exists(2, c1(0, {0, 0, 0, 0})) ==
        fiber_class_nonzero(TorusBundle::principal(2, {0, 0})));
  CHECK_THROWS_AS(l_subspace(2, c1(0, {1, 0})), std::invalid_argument);
}

TEST_CASE("Thurston norm on the product") {
  CHECK(thurston_norm_product(2, {1, {5, -3, 2, 7}}) == 2);
  CHECK(thurston_norm_product(3, {-2, {0, 0, 0, 0, 0, 0}}) == 8);
  CHECK(thurston_norm_product(4, {0, {1, 2, 3, 4, 5, 6, 7, 8}}) == 0);
}
