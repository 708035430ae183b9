#include "tbundle/bundle/torus_bundle.hpp"

#include "tbundle/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace tbundle {

SL2Z::SL2Z(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const BigInt det = a_ * d_ - b_ * c_;
  if (det != 1)
    throw ValidationError("matrix", "determinant is " + det.get_str() + ", expected 1");
}

SL2Z SL2Z::inverse() const { return {d_, -b_, -c_, a_}; }

SL2Z SL2Z::transpose() const { return {a_, c_, b_, d_}; }

Vec2 SL2Z::apply(const Vec2& v) const {
  return {a_ * v[0] + b_ * v[1], c_ * v[0] + d_ * v[1]};
}

la::IntMatrix SL2Z::matrix() const {
  la::IntMatrix m(2, 2);
  m(0, 0) = a_;
  m(0, 1) = b_;
  m(1, 0) = c_;
  m(1, 1) = d_;
  return m;
}

SL2Z operator*(const SL2Z& x, const SL2Z& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
          x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
}

SL2Z commutator(const SL2Z& x, const SL2Z& y) { return x * y * x.inverse() * y.inverse(); }

TorusBundle::TorusBundle(int genus, std::vector<SL2Z> monodromy, Vec2 euler)
    : genus_(genus), monodromy_(std::move(monodromy)), euler_(std::move(euler)) {
  if (genus_ < 2)
    throw ValidationError("genus", "must be at least 2, got " + std::to_string(genus_));
  const std::size_t want = 2 * static_cast<std::size_t>(genus_);
  if (monodromy_.size() != want)
    throw ValidationError("monodromy", "expected " + std::to_string(want) + " matrices, got " +
                                           std::to_string(monodromy_.size()));
}

TorusBundle TorusBundle::principal(int genus, Vec2 euler) {
  return {genus, std::vector<SL2Z>(2 * static_cast<std::size_t>(std::max(genus, 0))),
          std::move(euler)};
}

bool TorusBundle::has_trivial_monodromy() const {
  for (const auto& a : monodromy_)
    if (!a.is_identity()) return false;
  return true;
}

bool TorusBundle::satisfies_surface_relation() const {
  SL2Z product;
  for (std::size_t i = 0; i + 1 < monodromy_.size(); i += 2)
    product = product * commutator(monodromy_[i], monodromy_[i + 1]);
  return product.is_identity();
}

void TorusBundle::require_representation() const {
  if (!satisfies_surface_relation())
    throw NotARepresentation(
        "monodromy does not satisfy prod [A_(2i-1), A_(2i)] = I; not a surface group "
        "representation");
}

TorusBundle TorusBundle::flat_twin() const { return {genus_, monodromy_, Vec2{0, 0}}; }

TorusBundle TorusBundle::change_fiber_basis(const SL2Z& p) const {
  std::vector<SL2Z> conj;
  conj.reserve(monodromy_.size());
  const SL2Z p_inv = p.inverse();
  for (const auto& a : monodromy_) conj.push_back(p * a * p_inv);
  return {genus_, std::move(conj), p.apply(euler_)};
}

}  // namespace tbundle
