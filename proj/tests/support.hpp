#pragma once

// Independent oracles shared by the test suites.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cayley/cayley.hpp"

namespace cayley::testing {

// Letter-by-letter product of generator matrices, bypassing the Evaluator.
inline Matrix naive_eval(const Word& w, std::size_t n, const Modulus& mod) {
  const Matrix a = generator(Gen::A, n, mod);
  const Matrix b = generator(Gen::B, n, mod);
  const Matrix ai = power(a, static_cast<std::uint64_t>(mod.value() - 1));
  const Matrix bi = power(b, 2 * n - 1);
  Matrix x = Matrix::identity(n, mod);
  for (const Run& r : w.runs()) {
    const Matrix& g = r.letter == Gen::A ? (r.exp > 0 ? a : ai) : (r.exp > 0 ? b : bi);
    for (std::int64_t i = 0; i < (r.exp < 0 ? -r.exp : r.exp); ++i) x = x * g;
  }
  return x;
}

inline Matrix elementary(std::size_t n, std::size_t i, std::size_t j, std::int64_t t, const Modulus& mod) {
  Matrix m = Matrix::identity(n, mod);
  m.set(i, j, t);
  return m;
}

// The ideal a(Z/kZ), as a set of residues.
inline std::set<std::int64_t> ideal(std::int64_t k, std::initializer_list<std::int64_t> gens) {
  std::set<std::int64_t> out{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::int64_t> cur(out.begin(), out.end());
    for (std::int64_t x : cur)
      for (std::int64_t g : gens)
        if (out.insert(((x + g) % k + k) % k).second) grew = true;
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, int runs, int max_exp) {
  std::uniform_int_distribution<int> e(-max_exp, max_exp);
  Word w;
  for (int i = 0; i < runs; ++i) w.append(i % 2 ? Gen::B : Gen::A, e(rng));
  return w;
}

inline std::vector<std::int64_t> random_entries(std::mt19937_64& rng, std::size_t n, std::size_t skip,
                                                std::int64_t lo, std::int64_t hi, const Modulus& mod) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  std::vector<std::int64_t> v(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    if (j != skip) v[j] = mod.reduce(d(rng));
  return v;
}

// Enumerates every vector in {-1,0,1}^n with position `skip` held at 0.
template <class F>
void for_each_bit_pattern(std::size_t n, std::size_t skip, const Modulus& mod, F&& f) {
  std::size_t free = n - 1, total = 1;
  for (std::size_t i = 0; i < free; ++i) total *= 3;
  std::vector<std::int64_t> v(n, 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == skip) continue;
      v[j] = mod.reduce(static_cast<std::int64_t>(c % 3) - 1);
      c /= 3;
    }
    f(v);
  }
}

}  // namespace cayley::testing
