#pragma once

// Gauss-Jordan elimination over Z/kZ: every M in SL_n(Z/kZ) is a product of
// at most n row matrices, n column matrices and n elementary matrices.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/matrix.hpp"
#include "cayley/modring.hpp"

namespace cayley {

enum class FactorKind { row, column, elementary };

inline FactorKind kind_of(const FactorSpec& f) {
  if (std::holds_alternative<RowSpec>(f)) return FactorKind::row;
  if (std::holds_alternative<ColSpec>(f)) return FactorKind::column;
  return FactorKind::elementary;
}

inline const char* to_string(FactorKind k) {
  switch (k) {
    case FactorKind::row: return "row";
    case FactorKind::column: return "column";
    case FactorKind::elementary: return "elementary";
  }
  return "?";
}

/// target = factors[0] * factors[1] * ... * factors.back().
struct Factorization {
  Matrix target;
  std::vector<FactorSpec> factors;

  std::size_t count(FactorKind k) const {
    std::size_t c = 0;
    for (const auto& f : factors) c += kind_of(f) == k ? 1 : 0;
    return c;
  }
};

namespace detail {

inline void right_multiply(Matrix& m, const ColSpec& c) {
  // Column c.index += sum_i entries[i] * column i.
  const Modulus& mod = m.modulus();
  for (std::size_t row = 0; row < m.dim(); ++row) {
    std::int64_t acc = m(row, c.index);
    for (std::size_t i = 0; i < m.dim(); ++i)
      if (i != c.index && c.entries[i] != 0) acc = mod.add(acc, mod.mul(m(row, i), c.entries[i]));
    m.data()[row * m.dim() + c.index] = acc;
  }
}

inline void right_multiply(Matrix& m, const RowSpec& r) {
  // Column j += entries[j] * column r.index.
  const Modulus& mod = m.modulus();
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (j == r.index || r.entries[j] == 0) continue;
    for (std::size_t row = 0; row < m.dim(); ++row)
      m.data()[row * m.dim() + j] = mod.add(m(row, j), mod.mul(m(row, r.index), r.entries[j]));
  }
}

inline void right_multiply(Matrix& m, const ElemSpec& e) {
  // Column j += t * column i.
  const Modulus& mod = m.modulus();
  for (std::size_t row = 0; row < m.dim(); ++row)
    m.data()[row * m.dim() + e.j] = mod.add(m(row, e.j), mod.mul(m(row, e.i), e.t));
}

// The one row (or column) in which m differs from the identity, if m is a
// row (column) matrix other than the identity.
inline std::optional<std::size_t> lone_row(const Matrix& m, bool columns) {
  const std::size_t n = m.dim();
  std::optional<std::size_t> found;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::int64_t v = columns ? m(b, a) : m(a, b);
      if (v == (a == b ? m.modulus().reduce(1) : 0)) continue;
      if (a == b || (found && *found != a)) return std::nullopt;
      found = a;
    }
  return found;
}

}  // namespace detail

/// Decomposes M by right-multiplying with column, elementary and row matrices
/// until it becomes the identity; the factors are the inverses of those steps
/// in reverse order.
inline Factorization decompose(const Matrix& target) {
  const std::size_t n = target.dim();
  const Modulus& mod = target.modulus();
  check_dimension(n);
  if (!is_special(target)) throw Error(Errc::not_special, "determinant is not 1");

  if (target.is_identity()) return {target, {}};
  if (auto r = detail::lone_row(target, false)) return {target, {row_spec_of(target, *r)}};
  if (auto c = detail::lone_row(target, true)) return {target, {col_spec_of(target, *c)}};

  Matrix m = target;
  std::vector<FactorSpec> steps;
  for (std::size_t r = 0; r < n; ++r) {
    if (r + 1 < n) {
      // (1) Make entry (r, n-1) a unit by adding a combination of columns r..n-2.
      //     Row r restricted to columns r..n-1 is unimodular since the rows above are identity rows.
      if (!mod.is_unit(m(r, n - 1))) {
        std::vector<Residue> row;
        row.emplace_back(m(r, n - 1), mod);
        for (std::size_t i = r; i + 1 < n; ++i) row.emplace_back(m(r, i), mod);
        std::vector<Residue> t;
        try {
          t = unit_combination(row);
        } catch (const Error&) {
          throw Error(Errc::invariant_breach, "pivot row " + std::to_string(r) + " is not unimodular");
        }
        ColSpec c{n, n - 1, std::vector<std::int64_t>(n, 0), mod};
        for (std::size_t i = r; i + 1 < n; ++i) c.entries[i] = t[i - r].value();
        if (!is_trivial(c)) {
          detail::right_multiply(m, c);
          steps.emplace_back(c);
        }
      }
      // (2) Make the pivot 1 with e_{n-1,r}^u.
      std::int64_t u = mod.mul(mod.sub(mod.reduce(1), m(r, r)), mod.inverse(m(r, n - 1)));
      ElemSpec e{n, n - 1, r, u, mod};
      if (!is_trivial(e)) {
        detail::right_multiply(m, e);
        steps.emplace_back(e);
      }
    }
    if (m(r, r) != mod.reduce(1)) throw Error(Errc::invariant_breach, "pivot " + std::to_string(r) + " is not 1");
    // (3) Clear the rest of row r.
    RowSpec clear{n, r, std::vector<std::int64_t>(n, 0), mod};
    for (std::size_t j = 0; j < n; ++j)
      if (j != r) clear.entries[j] = mod.neg(m(r, j));
    if (!is_trivial(clear)) {
      detail::right_multiply(m, clear);
      steps.emplace_back(clear);
    }
  }
  if (!m.is_identity()) throw Error(Errc::invariant_breach, "elimination did not reach the identity");

  Factorization f{target, {}};
  f.factors.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) f.factors.push_back(inverse(*it));
  return f;
}

inline Matrix recompose(const Factorization& f) {
  Matrix m = Matrix::identity(f.target.dim(), f.target.modulus());
  for (const auto& factor : f.factors) std::visit([&](const auto& s) { detail::right_multiply(m, s); }, factor);
  return m;
}

}  // namespace cayley
