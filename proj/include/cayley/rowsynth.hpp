#pragma once

// Words for row and column matrices with arbitrary entries, built from
// Fibonacci ladders.
//
// A ladder works in a 2x2 block (p, q). Starting from e_{p,q}^2, repeated
// multiplication by (e_{q,p} e_{p,q}) walks the block through consecutive
// Fibonacci numbers; bit matrices a_j (row p) and b_j (row q) inserted at
// level j deposit c_j F_{2j+2} + d_j F_{2j+3} into the target columns. A
// second pass with a_j^-1, b_j^-1 from a shifted start cancels everything
// except sum_j (c_j F_{2j} + d_j F_{2j+1}), the Zeckendorf value.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "cayley/bitsynth.hpp"
#include "cayley/matrix.hpp"
#include "cayley/word.hpp"
#include "cayley/zeckendorf.hpp"

namespace cayley {

/// The words plugged into a ladder. `pivot` plays e_{1,2}, `partner` plays
/// e_{2,1}, `first[j-1]` plays a_j and `second[j-1]` plays b_j.
struct LadderPieces {
  Word pivot;
  Word partner;
  std::vector<Word> first;
  std::vector<Word> second;

  int depth() const { return static_cast<int>(first.size()); }
};

namespace detail {

enum class Piece { pivot, partner, first, second };

struct Token {
  Piece piece;
  int level;  // 0-based, for first/second
  std::int64_t exp;
};

// pivot^2 u (partner pivot)^-L pivot^-1 v (partner pivot)^-L pivot^-1, with
// u = prod_j (partner pivot) a_j b_j and v the same with a_j^-1, b_j^-1.
inline std::vector<Token> ladder_tokens(int depth) {
  std::vector<Token> t;
  t.reserve(static_cast<std::size_t>(12 * depth + 4));
  auto pass = [&](std::int64_t sign) {
    for (int j = 0; j < depth; ++j) {
      t.push_back({Piece::partner, 0, 1});
      t.push_back({Piece::pivot, 0, 1});
      t.push_back({Piece::first, j, sign});
      t.push_back({Piece::second, j, sign});
    }
  };
  auto unwind = [&] {
    for (int j = 0; j < depth; ++j) {
      t.push_back({Piece::pivot, 0, -1});
      t.push_back({Piece::partner, 0, -1});
    }
    t.push_back({Piece::pivot, 0, -1});
  };
  t.push_back({Piece::pivot, 0, 2});
  pass(1);
  unwind();
  pass(-1);
  unwind();
  return t;
}

inline void emit(Word& out, const LadderPieces& p, const Token& tok) {
  const Word* w = nullptr;
  switch (tok.piece) {
    case Piece::pivot: w = &p.pivot; break;
    case Piece::partner: w = &p.partner; break;
    case Piece::first: w = &p.first[static_cast<std::size_t>(tok.level)]; break;
    case Piece::second: w = &p.second[static_cast<std::size_t>(tok.level)]; break;
  }
  out.append_power(*w, tok.exp);
}

}  // namespace detail

/// Assembles the ladder word. With `transposed`, the token order is reversed;
/// the caller then supplies the transposes of the pieces and obtains the
/// transpose of the row-form result.
inline void append_ladder(Word& out, const LadderPieces& p, bool transposed = false) {
  auto tokens = detail::ladder_tokens(p.depth());
  if (transposed) std::reverse(tokens.begin(), tokens.end());
  for (const auto& tok : tokens) detail::emit(out, p, tok);
}

inline Word ladder_word(const LadderPieces& p, bool transposed = false) {
  Word out;
  append_ladder(out, p, transposed);
  return out;
}

/// The prefix pivot^2 u of the row-form ladder. After it, the (p, q) block
/// holds [[F_{2L+2}, F_{2L+3}], [F_{2L}, F_{2L+1}]].
inline Word ladder_prefix_word(const LadderPieces& p) {
  auto tokens = detail::ladder_tokens(p.depth());
  Word out;
  for (std::size_t i = 0; i < 1 + 4 * static_cast<std::size_t>(p.depth()); ++i) detail::emit(out, p, tokens[i]);
  return out;
}

namespace detail {

inline std::vector<FibCoeffs> coeffs_for(const std::vector<std::int64_t>& values, std::size_t from, int depth) {
  std::vector<FibCoeffs> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    out.push_back(i < from ? fib_coeffs(0, depth) : fib_coeffs(values[i], depth));
  return out;
}

inline std::int64_t max_magnitude(const std::vector<std::int64_t>& values, std::size_t from) {
  std::int64_t m = 0;
  for (std::size_t i = from; i < values.size(); ++i) m = std::max(m, values[i] < 0 ? -values[i] : values[i]);
  return m;
}

}  // namespace detail

/// Pieces for the row-1 ladder that fills columns 3..n. `values` has size n
/// (0-based columns); entries 0 and 1 are ignored.
inline LadderPieces compress_pieces(const std::vector<std::int64_t>& values, int depth, const Modulus& mod) {
  const std::size_t n = values.size();
  check_dimension(n);
  auto coeffs = detail::coeffs_for(values, 2, depth);
  LadderPieces p;
  p.pivot = Word::letter(Gen::A);
  p.partner = elementary_bit_word(n, 1, 0, 1, mod);
  for (int j = 0; j < depth; ++j) {
    RowSpec a{n, 0, std::vector<std::int64_t>(n, 0), mod};
    RowSpec b{n, 1, std::vector<std::int64_t>(n, 0), mod};
    for (std::size_t col = 2; col < n; ++col) {
      a.entries[col] = mod.reduce(coeffs[col].c[static_cast<std::size_t>(j)]);
      b.entries[col] = mod.reduce(coeffs[col].d[static_cast<std::size_t>(j)]);
    }
    p.first.push_back(bit_row_word(a));
    p.second.push_back(bit_row_word(b));
  }
  return p;
}

/// Row matrix with first row (1, 0, m_3, ..., m_n).
inline Word compress_word(const std::vector<std::int64_t>& values, int depth, const Modulus& mod) {
  return ladder_word(compress_pieces(values, depth, mod));
}

/// Transposed pieces for the column ladder.
inline LadderPieces compress_col_pieces(const std::vector<std::int64_t>& values, int depth, const Modulus& mod) {
  const std::size_t n = values.size();
  check_dimension(n);
  auto coeffs = detail::coeffs_for(values, 2, depth);
  LadderPieces p;
  p.pivot = elementary_bit_word(n, 1, 0, 1, mod);  // e_{1,2}^T
  p.partner = Word::letter(Gen::A);               // e_{2,1}^T
  for (int j = 0; j < depth; ++j) {
    ColSpec a{n, 0, std::vector<std::int64_t>(n, 0), mod};
    ColSpec b{n, 1, std::vector<std::int64_t>(n, 0), mod};
    for (std::size_t row = 2; row < n; ++row) {
      a.entries[row] = mod.reduce(coeffs[row].c[static_cast<std::size_t>(j)]);
      b.entries[row] = mod.reduce(coeffs[row].d[static_cast<std::size_t>(j)]);
    }
    p.first.push_back(bit_col_word(a));
    p.second.push_back(bit_col_word(b));
  }
  return p;
}

/// Column matrix with first column (1, 0, m_3, ..., m_n)^T.
inline Word compress_col_word(const std::vector<std::int64_t>& values, int depth, const Modulus& mod) {
  return ladder_word(compress_col_pieces(values, depth, mod), true);
}

/// e_{1,3}^{F_{2l}} (odd = false) or e_{1,3}^{F_{2l+1}} (odd = true):
///   e12^2 (e21 e12)^l X (e21 e12)^-l e12^-1 (e21 e12)^l X^-1 (e21 e12)^-l e12^-1
/// with X = e_{1,3} or e_{2,3}.
inline Word fib_power_word(int l, bool odd, std::size_t n, const Modulus& mod) {
  check_dimension(n);
  const Word e12 = Word::letter(Gen::A);
  const Word e21 = elementary_bit_word(n, 1, 0, 1, mod);
  const Word x = odd ? elementary_bit_word(n, 1, 2, 1, mod) : elementary_bit_word(n, 0, 2, 1, mod);
  Word step = e21 * e12;
  Word w;
  w.append_power(e12, 2);
  w.append_power(step, l);
  w.append(x);
  w.append_power(step, -l);
  w.append_inverse(e12);
  w.append_power(step, l);
  w.append_inverse(x);
  w.append_power(step, -l);
  w.append_inverse(e12);
  return w;
}

/// Ladder pieces for entry (1,2): the block is (1, n) and the target column is 2.
inline LadderPieces entry2_pieces(std::int64_t value, int depth, std::size_t n, const Modulus& mod) {
  check_dimension(n);
  FibCoeffs coeffs = fib_coeffs(value, depth);
  LadderPieces p;
  p.pivot = elementary_bit_word(n, 0, n - 1, 1, mod);
  p.partner = elementary_bit_word(n, n - 1, 0, 1, mod);
  for (int j = 0; j < depth; ++j) {
    int c = coeffs.c[static_cast<std::size_t>(j)];
    int d = coeffs.d[static_cast<std::size_t>(j)];
    p.first.push_back(Word::letter(Gen::A, c));
    p.second.push_back(d == 0 ? Word{} : elementary_bit_word(n, n - 1, 1, d, mod));
  }
  return p;
}

/// Row matrix with first row (1, m_2, 0, ..., 0), via a ladder in the (1, n) block.
inline Word entry2_word(std::int64_t value, std::size_t n, const Modulus& mod) {
  if (value == 0) return {};
  int depth = depth_bound(value < 0 ? -value + 1 : value + 1);
  return ladder_word(entry2_pieces(value, depth, n, mod));
}

/// Column matrix with first column (1, m_2, 0, ..., 0)^T: the transposed ladder.
inline Word entry2_col_word(std::int64_t value, std::size_t n, const Modulus& mod) {
  check_dimension(n);
  if (value == 0) return {};
  int depth = depth_bound(value < 0 ? -value + 1 : value + 1);
  FibCoeffs coeffs = fib_coeffs(value, depth);
  LadderPieces p;
  p.pivot = elementary_bit_word(n, n - 1, 0, 1, mod);    // e_{1,n}^T
  p.partner = elementary_bit_word(n, 0, n - 1, 1, mod);  // e_{n,1}^T
  for (int j = 0; j < depth; ++j) {
    int c = coeffs.c[static_cast<std::size_t>(j)];
    int d = coeffs.d[static_cast<std::size_t>(j)];
    p.first.push_back(c == 0 ? Word{} : elementary_bit_word(n, 1, 0, c, mod));
    p.second.push_back(d == 0 ? Word{} : elementary_bit_word(n, 1, n - 1, d, mod));
  }
  return ladder_word(p, true);
}

namespace detail {

inline bool all_bits(const std::vector<std::int64_t>& entries, std::size_t skip, const Modulus& mod) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i == skip) continue;
    std::int64_t v = mod.centered(entries[i]);
    if (v < -1 || v > 1) return false;
  }
  return true;
}

}  // namespace detail

/// Word for any row matrix, using centered lifts of its entries.
/// Length <= 1200 n ln K + 400 n where K bounds the lifted entries.
inline Word row_matrix_word(const RowSpec& spec) {
  check_dimension(spec.n);
  const std::size_t n = spec.n;
  const Modulus& mod = spec.mod;
  if (detail::all_bits(spec.entries, spec.index, mod)) return bit_row_word(spec);

  const std::int64_t l = detail::shift_to(spec.index, 0, n);
  Matrix r = conj_by_B(realize(spec), -l);
  std::vector<std::int64_t> values(n, 0);
  for (std::size_t j = 1; j < n; ++j) values[j] = mod.centered(r(0, j));

  Word w = Word::letter(Gen::B, l);
  if (std::int64_t head = values[1]; head != 0) {
    auto direct = static_cast<std::uint64_t>(head < 0 ? -head : head);
    if (direct <= 4 * n) {
      w.append(Gen::A, head);
    } else {
      Word ladder = entry2_word(head, n, mod);
      if (ladder.length() < direct) {
        w.append(ladder);
      } else {
        w.append(Gen::A, head);
      }
    }
  }
  if (std::int64_t top = detail::max_magnitude(values, 2); top != 0)
    append_ladder(w, compress_pieces(values, depth_bound(top + 1), mod));
  w.append(Gen::B, -l);
  return w;
}

/// Word for any column matrix, using centered lifts of its entries.
inline Word col_matrix_word(const ColSpec& spec) {
  check_dimension(spec.n);
  const std::size_t n = spec.n;
  const Modulus& mod = spec.mod;
  if (detail::all_bits(spec.entries, spec.index, mod)) return bit_col_word(spec);

  const std::int64_t l = detail::shift_to(spec.index, 0, n);
  Matrix c = conj_by_B(realize(spec), -l);
  std::vector<std::int64_t> values(n, 0);
  for (std::size_t i = 1; i < n; ++i) values[i] = mod.centered(c(i, 0));

  Word w = Word::letter(Gen::B, l);
  if (std::int64_t head = values[1]; head != 0) {
    if (head == 1 || head == -1) {
      w.append(elementary_bit_word(n, 1, 0, head, mod));
    } else {
      w.append(entry2_col_word(head, n, mod));
    }
  }
  if (std::int64_t top = detail::max_magnitude(values, 2); top != 0)
    append_ladder(w, compress_col_pieces(values, depth_bound(top + 1), mod), true);
  w.append(Gen::B, -l);
  return w;
}

}  // namespace cayley
