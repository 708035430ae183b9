#pragma once

// Seeded random inputs shared by the unit and acceptance suites.

#include "tbundle/bundle/torus_bundle.hpp"
#include "tbundle/exactla/int_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace tbundle::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline la::IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo = -9,
                                   long hi = 9) {
  la::IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, lo, hi);
  return m;
}

inline const SL2Z& unipotent_upper() {
  static const SL2Z u(1, 1, 0, 1);
  return u;
}
inline const SL2Z& unipotent_lower() {
  static const SL2Z l(1, 0, 1, 1);
  return l;
}
inline const SL2Z& quarter_turn() {
  static const SL2Z r(0, -1, 1, 0);
  return r;
}

inline SL2Z power(const SL2Z& a, long k) {
  SL2Z out;
  const SL2Z step = k >= 0 ? a : a.inverse();
  for (long i = 0; i < (k >= 0 ? k : -k); ++i) out = out * step;
  return out;
}

/// Product of up to max_len letters from {U, L, R}^{+-1}.
inline SL2Z random_word(Rng& rng, int max_len) {
  const SL2Z* gens[] = {&unipotent_upper(), &unipotent_lower(), &quarter_turn()};
  SL2Z out;
  const long len = uniform(rng, 0, max_len);
  for (long i = 0; i < len; ++i) {
    const SL2Z& g = *gens[uniform(rng, 0, 2)];
    out = out * (uniform(rng, 0, 1) ? g : g.inverse());
  }
  return out;
}

/// Random surface-group representation rho(a1), rho(b1), ..., built from
/// blocks whose commutator product is trivial, then conjugated by a random
/// word. Three families: general words, a common parabolic subgroup (so a
/// fixed vector exists), and trivial monodromy.
inline std::vector<SL2Z> random_representation(Rng& rng, int genus, int max_len) {
  using Block = std::vector<SL2Z>;  // 2 or 4 matrices
  std::vector<Block> blocks;
  const long family = uniform(rng, 0, 19);
  if (family < 3) {
    return std::vector<SL2Z>(2 * static_cast<std::size_t>(genus));
  } else if (family < 10) {
    const SL2Z sign = uniform(rng, 0, 3) == 0 ? SL2Z(-1, 0, 0, -1) : SL2Z();
    for (int i = 0; i < genus; ++i) {
      const SL2Z a = power(unipotent_upper(), uniform(rng, -3, 3));
      const SL2Z b = power(unipotent_upper(), uniform(rng, -3, 3));
      blocks.push_back({uniform(rng, 0, 4) == 0 ? sign * a : a, b});
    }
  } else {
    int pairs = 0;
    while (pairs < genus) {
      if (pairs + 1 < genus && uniform(rng, 0, 1)) {
        const SL2Z a = random_word(rng, max_len);
        const SL2Z b = random_word(rng, max_len);
        const long k = uniform(rng, 0, 2);
        if (uniform(rng, 0, 1)) blocks.push_back({a, b, b * power(a, k), a});
        else blocks.push_back({a, b, b, a * power(b, k)});
        pairs += 2;
      } else {
        const SL2Z a = random_word(rng, max_len);
        switch (uniform(rng, 0, 2)) {
          case 0: blocks.push_back({a, power(a, uniform(rng, -2, 2))}); break;
          case 1: blocks.push_back({a, SL2Z()}); break;
          default: blocks.push_back({SL2Z(), a}); break;
        }
        pairs += 1;
      }
    }
  }
  std::shuffle(blocks.begin(), blocks.end(), rng);
  const SL2Z p = random_word(rng, max_len);
  const SL2Z p_inv = p.inverse();
  std::vector<SL2Z> out;
  for (const auto& b : blocks)
    for (const auto& a : b) out.push_back(p * a * p_inv);
  return out;
}

/// Representation plus an Euler pair in [-5, 5]^2; part of the time the pair
/// is chosen on the line of a common fixed vector when one exists.
inline TorusBundle random_bundle(Rng& rng, int genus, int max_len, long euler_bound = 5) {
  std::vector<SL2Z> mono = random_representation(rng, genus, max_len);
  Vec2 euler{uniform(rng, -euler_bound, euler_bound), uniform(rng, -euler_bound, euler_bound)};
  if (uniform(rng, 0, 3) == 0) {
    // When a fixed line exists, every nonzero column of A_i - I lies on it.
    for (const auto& a : mono) {
      if (a.is_identity()) continue;
      Vec2 z{a.a() - 1, a.c()};
      if (z[0] == 0 && z[1] == 0) z = {a.b(), a.d() - 1};
      const BigInt g = gcd(z[0], z[1]);
      z = {z[0] / g, z[1] / g};
      const long k = uniform(rng, -3, 3);
      Vec2 cand{k * z[0], k * z[1]};
      if (abs(cand[0]) <= euler_bound && abs(cand[1]) <= euler_bound) euler = cand;
      break;
    }
  }
  return {genus, std::move(mono), std::move(euler)};
}

}  // namespace tbundle::testing
