#pragma once

#include <cstdint>
#include <random>

#include "cayley/matrix.hpp"

namespace cayley {

/// Product of 50 + 10n random elementary matrices e_{i,j}^t. Not uniform on
/// SL_n(Z/kZ), but every element has positive probability.
template <class Rng>
Matrix random_special(std::size_t n, const Modulus& mod, Rng& rng) {
  Matrix m = Matrix::identity(n, mod);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<std::int64_t> value(0, mod.value() - 1);
  const std::size_t steps = 50 + 10 * n;
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    std::int64_t t = value(rng);
    // Left-multiply: row i += t * row j.
    for (std::size_t c = 0; c < n; ++c)
      m.data()[i * n + c] = mod.add(m(i, c), mod.mul(t, m(j, c)));
  }
  return m;
}

/// Deterministic per-sample generator: sample i of a run seeded with `seed`.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace cayley
