#pragma once

// Short words for bit-row and bit-column matrices (entries in {0, +-1}).
//
// A bit row at row 1 is written as a product of two conjugates
// N e_{1,2}^{+-1} N^-1, where N is upper unitriangular with two bands; N itself
// has a linear-length word because each of its rows is a B-conjugate of
// A^-s [A, B^-1 A B]^-t. Other rows are reached by conjugating with B^l.
//
// Sequences indexed like the math use 1-based slots: m[i] is the entry in
// column i of row 1 (i = 2..n); slots 0 and 1 are unused.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/matrix.hpp"
#include "cayley/word.hpp"

namespace cayley {

/// Band coefficients of N: entry (i, i+1) is -s[i] for i in [2, n-1] and
/// entry (i, i+2) is -t[i] for i in [2, n-2]. Both vectors have size n+1.
struct NParams {
  std::size_t n;
  std::vector<std::int64_t> s;
  std::vector<std::int64_t> t;

  explicit NParams(std::size_t dim) : n(dim), s(dim + 1, 0), t(dim + 1, 0) {}

  friend bool operator==(const NParams&, const NParams&) = default;
};

/// The matrix N described by the parameters.
inline Matrix n_matrix(const NParams& p, const Modulus& mod) {
  Matrix m = Matrix::identity(p.n, mod);
  for (std::size_t i = 2; i + 1 <= p.n; ++i) m.set(i - 1, i, -p.s[i]);
  for (std::size_t i = 2; i + 2 <= p.n; ++i) m.set(i - 1, i + 1, -p.t[i]);
  return m;
}

/// First row of N e_{1,2} N^-1: m_2 = 1, m_3 = s_2, m_i = m_{i-1} s_{i-1} + m_{i-2} t_{i-2}.
inline std::vector<std::int64_t> recursion_row(const NParams& p) {
  std::vector<std::int64_t> m(p.n + 1, 0);
  m[2] = 1;
  if (p.n >= 3) m[3] = p.s[2];
  for (std::size_t i = 4; i <= p.n; ++i) m[i] = m[i - 1] * p.s[i - 1] + m[i - 2] * p.t[i - 2];
  return m;
}

/// Solves recursion_row(params) = m for m_2 = 1, m_i in {0, +-1, +-2}, when
/// either every even slot or every odd slot (from 3 on) equals 1.
inline NParams solve_params(const std::vector<std::int64_t>& m) {
  const std::size_t n = m.size() - 1;
  if (n < 3 || m[2] != 1) throw Error(Errc::unsolvable_pattern, "pattern must start with m_2 = 1");
  bool even_ones = true, odd_ones = true;
  for (std::size_t i = 3; i <= n; ++i) {
    if (std::llabs(m[i]) > 2) throw Error(Errc::unsolvable_pattern, "pattern entries must lie in {0, +-1, +-2}");
    if (i % 2 == 0 && m[i] != 1) even_ones = false;
    if (i % 2 == 1 && m[i] != 1) odd_ones = false;
  }
  NParams p(n);
  if (even_ones) {
    for (std::size_t i = 2; i + 1 <= n; ++i) p.s[i] = (i % 2 == 0) ? m[i + 1] : 0;
    for (std::size_t i = 2; i + 2 <= n; ++i) p.t[i] = (i % 2 == 0) ? 1 : 0;
  } else if (odd_ones) {
    for (std::size_t i = 2; i + 1 <= n; ++i) p.s[i] = (i == 2) ? 1 : (i % 2 == 1 ? m[i + 1] : 0);
    for (std::size_t i = 2; i + 2 <= n; ++i) p.t[i] = (i % 2 == 1) ? 1 : 0;
  } else {
    throw Error(Errc::unsolvable_pattern, "neither the even nor the odd slots are all 1");
  }
  if (recursion_row(p) != m) throw Error(Errc::invariant_breach, "solve_params produced a wrong solution");
  return p;
}

/// For m_2 = 0 and bit entries: R_m = R_{m'} R_{m''}^-1 with m' solvable by
/// the even-slot rule and m'' by the odd-slot rule.
inline std::pair<NParams, NParams> split_bit_row(const std::vector<std::int64_t>& m) {
  const std::size_t n = m.size() - 1;
  if (n < 3 || m[2] != 0) throw Error(Errc::unsolvable_pattern, "split requires m_2 = 0");
  std::vector<std::int64_t> first(n + 1, 0), second(n + 1, 0);
  first[2] = second[2] = 1;
  for (std::size_t i = 3; i <= n; ++i) {
    if (std::llabs(m[i]) > 1) throw Error(Errc::not_bit_matrix, "split requires entries in {0, +-1}");
    if (i % 2 == 0) {
      first[i] = 1;
      second[i] = 1 - m[i];
    } else {
      first[i] = 1 + m[i];
      second[i] = 1;
    }
  }
  return {solve_params(first), solve_params(second)};
}

namespace detail {

// [A, B^-1 A B] = A^-1 B^-1 A^-1 B A B^-1 A B, which is e_{1,3}.
inline const Word& commutator_word() {
  static const Word w = [] {
    Word c;
    for (auto [g, e] : {std::pair{Gen::A, -1}, {Gen::B, -1}, {Gen::A, -1}, {Gen::B, 1}, {Gen::A, 1}, {Gen::B, -1},
                        {Gen::A, 1}, {Gen::B, 1}})
      c.append(g, e);
    return c;
  }();
  return w;
}

// Word for the product of row matrices P_last ... P_first, where P_a is the
// identity except for -s(a) at (a, a+1) and -t(a) at (a, a+2) (1-based).
// Uses B^-(a-1) A B^(a-1) = e_{a,a+1}:
//   B^-(last-1) Q_last B Q_{last-1} B ... B Q_first B^(first-1).
template <class S, class T>
Word band_word(std::size_t first, std::size_t last, S s, T t) {
  Word w;
  w.append(Gen::B, -static_cast<std::int64_t>(last - 1));
  for (std::size_t a = last; a >= first; --a) {
    w.append(Gen::A, -s(a));
    w.append_power(commutator_word(), -t(a));
    if (a > first) w.append(Gen::B, 1);
    if (a == first) break;
  }
  w.append(Gen::B, static_cast<std::int64_t>(first - 1));
  return w;
}

// Shift l with (index + l) = target mod n, |l| <= n/2, ties to positive.
inline std::int64_t shift_to(std::size_t index, std::size_t target, std::size_t n) {
  auto up = static_cast<std::int64_t>((target + n - index) % n);
  std::int64_t down = up - static_cast<std::int64_t>(n);
  return (up <= -down) ? up : down;
}

inline std::int64_t bit_value(const Modulus& mod, std::int64_t x) {
  std::int64_t v = mod.centered(x);
  if (v < -1 || v > 1) throw Error(Errc::not_bit_matrix, "entry " + std::to_string(x) + " is not in {0, +-1}");
  return v;
}

}  // namespace detail

/// Word for N (length <= 12n - 24).
inline Word word_for_N(const NParams& p) {
  const std::size_t n = p.n;
  return detail::band_word(
      2, n - 1, [&](std::size_t a) { return p.s[a]; }, [&](std::size_t a) { return a + 2 <= n ? p.t[a] : 0; });
}

/// Word for the column-side band matrix: the image of N under reversal-transpose.
/// Its rows 1..n-2 carry s[n-a] at (a, a+1) and t[n-1-a] at (a, a+2).
inline Word word_for_reversed_N(const NParams& p) {
  const std::size_t n = p.n;
  return detail::band_word(
      1, n - 2, [&](std::size_t a) { return p.s[n - a]; },
      [&](std::size_t a) { return a + 3 <= n ? p.t[n - 1 - a] : 0; });
}

/// Matrix counterpart of word_for_reversed_N.
inline Matrix reversed_n_matrix(const NParams& p, const Modulus& mod) {
  const std::size_t n = p.n;
  Matrix m = Matrix::identity(n, mod);
  for (std::size_t a = 1; a + 2 <= n; ++a) m.set(a - 1, a, -p.s[n - a]);
  for (std::size_t a = 1; a + 3 <= n; ++a) m.set(a - 1, a + 1, -p.t[n - 1 - a]);
  return m;
}

/// e_{n-1,n} = B^2 A B^-2 (5 letters).
inline Word last_superdiag_word(std::int64_t e = 1) {
  Word w;
  w.append(Gen::B, 2);
  w.append(Gen::A, e);
  w.append(Gen::B, -2);
  return w;
}

/// Word for the row-1 bit matrix R_m (m sized n+1, bit entries in slots 2..n).
inline Word bit_row_core_word(const std::vector<std::int64_t>& m) {
  const std::size_t n = m.size() - 1;
  std::vector<std::int64_t> rest = m;
  rest[2] = 0;
  bool rest_zero = true;
  for (std::size_t i = 3; i <= n; ++i) rest_zero = rest_zero && rest[i] == 0;
  Word w;
  if (!rest_zero) {
    auto [first, second] = split_bit_row(rest);
    Word u = word_for_N(first);
    Word v = word_for_N(second);
    w.append(u);
    w.append(Gen::A, 1);
    w.append_inverse(u);
    w.append(v);
    w.append(Gen::A, -1);
    w.append_inverse(v);
  }
  // Right-multiplying by A^c adds c to entry (1,2).
  w.append(Gen::A, m[2]);
  return w;
}

/// Word for a bit-row matrix: <= 48n when the row is row 1, else <= 49n.
inline Word bit_row_word(const RowSpec& spec) {
  check_dimension(spec.n);
  const std::size_t n = spec.n;
  for (std::size_t j = 0; j < n; ++j)
    if (j != spec.index) detail::bit_value(spec.mod, spec.entries[j]);
  const std::int64_t l = detail::shift_to(spec.index, 0, n);
  // M = B^l R B^-l with R a row-1 matrix; signs come from the explicit conjugation.
  Matrix r = conj_by_B(realize(spec), -l);
  std::vector<std::int64_t> m(n + 1, 0);
  for (std::size_t i = 2; i <= n; ++i) m[i] = detail::bit_value(spec.mod, r(0, i - 1));
  Word w = Word::letter(Gen::B, l);
  w.append(bit_row_core_word(m));
  w.append(Gen::B, -l);
  return w;
}

/// Word for the last-column bit matrix with entries x[1..n-1] (x sized n+1).
inline Word bit_col_core_word(const std::vector<std::int64_t>& x) {
  const std::size_t n = x.size() - 1;
  std::vector<std::int64_t> rest = x;
  rest[n - 1] = 0;
  bool rest_zero = true;
  for (std::size_t i = 1; i + 2 <= n; ++i) rest_zero = rest_zero && rest[i] == 0;
  // Left-multiplying by e_{n-1,n}^c adds c to entry (n-1, n).
  Word w;
  if (x[n - 1] != 0) w.append(last_superdiag_word(x[n - 1]));
  if (!rest_zero) {
    // Reversal-transpose maps row-1 patterns to last-column patterns: r_j = x_{n+1-j}.
    std::vector<std::int64_t> r(n + 1, 0);
    for (std::size_t j = 2; j <= n; ++j) r[j] = rest[n + 1 - j];
    auto [first, second] = split_bit_row(r);
    Word u = word_for_reversed_N(first);
    Word v = word_for_reversed_N(second);
    w.append_inverse(u);
    w.append(last_superdiag_word(1));
    w.append(u);
    w.append_inverse(v);
    w.append(last_superdiag_word(-1));
    w.append(v);
  }
  return w;
}

/// Word for a bit-column matrix: <= 48n when the column is column n, else <= 49n.
inline Word bit_col_word(const ColSpec& spec) {
  check_dimension(spec.n);
  const std::size_t n = spec.n;
  for (std::size_t i = 0; i < n; ++i)
    if (i != spec.index) detail::bit_value(spec.mod, spec.entries[i]);
  const std::int64_t l = detail::shift_to(spec.index, n - 1, n);
  Matrix c = conj_by_B(realize(spec), -l);
  std::vector<std::int64_t> x(n + 1, 0);
  for (std::size_t i = 1; i + 1 <= n; ++i) x[i] = detail::bit_value(spec.mod, c(i - 1, n - 1));
  Word w = Word::letter(Gen::B, l);
  w.append(bit_col_core_word(x));
  w.append(Gen::B, -l);
  return w;
}

/// Bit word for a single elementary matrix e_{i,j}^e, e in {+-1} (0-based i, j).
inline Word elementary_bit_word(std::size_t n, std::size_t i, std::size_t j, std::int64_t e, const Modulus& mod) {
  RowSpec r{n, i, std::vector<std::int64_t>(n, 0), mod};
  r.entries[j] = mod.reduce(e);
  return bit_row_word(r);
}

}  // namespace cayley
