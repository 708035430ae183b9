#pragma once

#include "tbundle/exactla/bigint.hpp"
#include "tbundle/exactla/int_matrix.hpp"

#include <vector>

namespace tbundle::classify {

// Cohomology of N = Sigma_g x S^1. Classes on Sigma_g use a symplectic basis
// b_1..b_2g (pairs a_i, b_i) with intersection form J = diag([[0,1],[-1,0]]).

/// k [S^1]^* + sum b_i pr^* b_i in H^1(N).
struct ProductClassH1 {
  BigInt k;
  std::vector<BigInt> b;  // 2g entries
};

/// n * (volume class of Sigma_g) + sum kvec_i (b_i x S^1) in H^2(N).
struct ProductClassH2 {
  BigInt n;
  std::vector<BigInt> kvec;  // 2g entries
};

/// Linear functional x -> x_b . J kvec + x_k n on H^1 coordinates (x_b, x_k),
/// as a 1 x (2g+1) row; its kernel is L = {alpha : alpha cup c1 = 0}.
la::IntMatrix cup_functional(int genus, const ProductClassH2& c1);

/// Basis of L as columns of a (2g+1) x dim matrix, last coordinate the
/// S^1 direction.
la::IntMatrix l_subspace(int genus, const ProductClassH2& c1);

/// An invariant symplectic form exists iff L differs from the subspace A of
/// pullbacks from Sigma_g, i.e. L has a class with nonzero S^1 component.
bool invariant_symplectic_exists(int genus, const ProductClassH2& c1);

/// Thurston norm on Sigma_g x S^1: ||k[S^1] + b|| = |k| (2g - 2).
BigInt thurston_norm_product(int genus, const ProductClassH1& x);

}  // namespace tbundle::classify
