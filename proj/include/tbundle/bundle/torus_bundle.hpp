#pragma once

#include "tbundle/exactla/bigint.hpp"
#include "tbundle/exactla/int_matrix.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace tbundle {

/// Integer column vector in the fiber basis x1 = (1,0), x2 = (0,1).
using Vec2 = std::array<BigInt, 2>;

/// 2x2 integer matrix of determinant 1, acting on column vectors from the left.
class SL2Z {
public:
  /// Identity.
  SL2Z() : a_(1), b_(0), c_(0), d_(1) {}
  /// Throws ValidationError("matrix", ...) unless ad - bc = 1.
  SL2Z(BigInt a, BigInt b, BigInt c, BigInt d);

  static SL2Z identity() { return {}; }

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  const BigInt& c() const noexcept { return c_; }
  const BigInt& d() const noexcept { return d_; }

  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }
  SL2Z inverse() const;
  SL2Z transpose() const;
  Vec2 apply(const Vec2& v) const;
  la::IntMatrix matrix() const;

  friend SL2Z operator*(const SL2Z& x, const SL2Z& y);
  friend bool operator==(const SL2Z&, const SL2Z&) = default;

private:
  BigInt a_, b_, c_, d_;
};

/// [x, y] = x y x^-1 y^-1
SL2Z commutator(const SL2Z& x, const SL2Z& y);

/// Orientable T^2 bundle over a closed surface of genus g >= 2, presented by
/// the images of a1, b1, ..., ag, bg in SL(2,Z) and the Euler pair (m, n).
///
/// The constructor checks genus, arity and (through SL2Z) determinants. It does
/// not insist that the tuple satisfies the surface relation; see
/// satisfies_surface_relation().
class TorusBundle {
public:
  TorusBundle(int genus, std::vector<SL2Z> monodromy, Vec2 euler);

  /// Product T^2 x Sigma_g with the given Euler pair (trivial monodromy).
  static TorusBundle principal(int genus, Vec2 euler);

  int genus() const noexcept { return genus_; }
  const std::vector<SL2Z>& monodromy() const noexcept { return monodromy_; }
  const Vec2& euler() const noexcept { return euler_; }
  const BigInt& m() const noexcept { return euler_[0]; }
  const BigInt& n() const noexcept { return euler_[1]; }

  bool is_flat() const { return euler_[0] == 0 && euler_[1] == 0; }
  bool has_trivial_monodromy() const;

  /// prod_i [rho(a_i), rho(b_i)] == I.
  bool satisfies_surface_relation() const;
  /// Throws NotARepresentation unless satisfies_surface_relation().
  void require_representation() const;

  /// Same monodromy, Euler class zeroed.
  TorusBundle flat_twin() const;
  /// Change of fiber basis: every A_i -> P A_i P^-1 and (m, n) -> P (m, n).
  TorusBundle change_fiber_basis(const SL2Z& p) const;

  friend bool operator==(const TorusBundle&, const TorusBundle&) = default;

private:
  int genus_;
  std::vector<SL2Z> monodromy_;
  Vec2 euler_;
};

}  // namespace tbundle
