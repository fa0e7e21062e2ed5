#pragma once

// Dense n x n matrices over Z/kZ, the generators A_n and B_n, and the
// row / column / elementary matrices the synthesis works with.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/modring.hpp"

namespace cayley {

enum class Gen { A, B };

class Matrix {
 public:
  Matrix(std::size_t n, Modulus mod) : n_(n), mod_(std::move(mod)), a_(n * n, 0) {}

  static Matrix identity(std::size_t n, const Modulus& mod) {
    Matrix m(n, mod);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = mod.reduce(1);
    return m;
  }

  /// Builds from integer rows; entries are reduced mod k.
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, const Modulus& mod) {
    Matrix m(rows.size(), mod);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw Error(Errc::shape_mismatch, "matrix rows must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  std::size_t dim() const noexcept { return n_; }
  const Modulus& modulus() const noexcept { return mod_; }

  std::int64_t operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) noexcept { a_[i * n_ + j] = mod_.reduce(v); }

  std::vector<std::int64_t>& data() noexcept { return a_; }
  const std::vector<std::int64_t>& data() const noexcept { return a_; }

  bool is_identity() const noexcept { return *this == identity(n_, mod_); }

  Matrix transpose() const {
    Matrix t(n_, mod_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t.a_[j * n_ + i] = a_[i * n_ + j];
    return t;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) noexcept {
    return x.n_ == y.n_ && x.mod_ == y.mod_ && x.a_ == y.a_;
  }

 private:
  std::size_t n_;
  Modulus mod_;
  std::vector<std::int64_t> a_;
};

inline void check_dimension(std::size_t n) {
  if (n < 3) throw Error(Errc::unsupported_dimension, "n must be >= 3, got " + std::to_string(n));
}

inline Matrix mul(const Matrix& x, const Matrix& y) {
  if (x.dim() != y.dim() || !(x.modulus() == y.modulus()))
    throw Error(Errc::shape_mismatch, "cannot multiply matrices of different shape or modulus");
  const std::size_t n = x.dim();
  const Modulus& mod = x.modulus();
  Matrix z(n, mod);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      std::int64_t xil = x(i, l);
      if (xil == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t y_lj = y(l, j);
        if (y_lj != 0) z.data()[i * n + j] = mod.add(z(i, j), mod.mul(xil, y_lj));
      }
    }
  }
  return z;
}

inline Matrix operator*(const Matrix& x, const Matrix& y) { return mul(x, y); }

inline Matrix power(const Matrix& m, std::uint64_t e) {
  Matrix r = Matrix::identity(m.dim(), m.modulus());
  Matrix b = m;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

/// A_n = e_{1,2}; B_n = cyclic shift with (-1)^(n-1) in the bottom-left corner.
inline Matrix generator(Gen which, std::size_t n, const Modulus& mod) {
  check_dimension(n);
  Matrix m(n, mod);
  if (which == Gen::A) {
    m = Matrix::identity(n, mod);
    m.set(0, 1, 1);
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) m.set(i, i + 1, 1);
    m.set(n - 1, 0, (n % 2 == 1) ? 1 : -1);
  }
  return m;
}

/// Determinant mod k by Euclidean row reduction on canonical representatives.
inline std::int64_t det(const Matrix& m) {
  const std::size_t n = m.dim();
  const Modulus& mod = m.modulus();
  std::vector<std::int64_t> a = m.data();
  auto row = [&](std::size_t r) { return a.begin() + static_cast<std::ptrdiff_t>(r * n); };
  std::int64_t result = mod.reduce(1);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = c + 1; r < n; ++r) {
      while (a[r * n + c] != 0) {
        std::int64_t q = a[c * n + c] / a[r * n + c];
        for (std::size_t j = c; j < n; ++j)
          a[c * n + j] = mod.sub(a[c * n + j], mod.mul(q % mod.value(), a[r * n + j]));
        std::swap_ranges(row(c), row(c) + static_cast<std::ptrdiff_t>(n), row(r));
        result = mod.neg(result);
      }
    }
    result = mod.mul(result, a[c * n + c]);
    if (result == 0) return 0;
  }
  return result;
}

inline bool is_special(const Matrix& m) { return det(m) == m.modulus().reduce(1); }

/// B^l M B^-l. B^l is a signed permutation P with P(i, pi(i)) = sign(i), so
/// the product is (P M P^T)(i, j) = sign(i) sign(j) M(pi(i), pi(j)).
inline Matrix conj_by_B(const Matrix& m, std::int64_t l) {
  const std::size_t n = m.dim();
  const Modulus& mod = m.modulus();
  const auto order = static_cast<std::int64_t>(2 * n);  // B^(2n) = I
  const auto e = static_cast<std::size_t>(((l % order) + order) % order);
  const int sigma = (n % 2 == 1) ? 1 : -1;
  // Row i of B is sign * e_{i+1}, with sign sigma on the last row.
  std::vector<std::size_t> pi(n);
  std::vector<int> sign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t idx = i;
    for (std::size_t step = 0; step < e; ++step) {
      if (idx == n - 1) sign[i] *= sigma;
      idx = (idx + 1) % n;
    }
    pi[i] = idx;
  }
  Matrix out(n, mod);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t v = m(pi[i], pi[j]);
      out.data()[i * n + j] = sign[i] * sign[j] > 0 ? v : mod.neg(v);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Row, column and elementary matrix descriptions.

/// Identity except for row `index`, whose off-diagonal entries are `entries`
/// (entries[index] is ignored and must be 0).
struct RowSpec {
  std::size_t n;
  std::size_t index;
  std::vector<std::int64_t> entries;
  Modulus mod;
};

/// Identity except for column `index`.
struct ColSpec {
  std::size_t n;
  std::size_t index;
  std::vector<std::int64_t> entries;
  Modulus mod;
};

/// e_{i,j}^t.
struct ElemSpec {
  std::size_t n;
  std::size_t i;
  std::size_t j;
  std::int64_t t;
  Modulus mod;
};

using FactorSpec = std::variant<RowSpec, ColSpec, ElemSpec>;

inline Matrix realize(const RowSpec& s) {
  Matrix m = Matrix::identity(s.n, s.mod);
  for (std::size_t j = 0; j < s.n; ++j)
    if (j != s.index) m.set(s.index, j, s.entries[j]);
  return m;
}

inline Matrix realize(const ColSpec& s) {
  Matrix m = Matrix::identity(s.n, s.mod);
  for (std::size_t i = 0; i < s.n; ++i)
    if (i != s.index) m.set(i, s.index, s.entries[i]);
  return m;
}

inline Matrix realize(const ElemSpec& s) {
  Matrix m = Matrix::identity(s.n, s.mod);
  m.set(s.i, s.j, s.t);
  return m;
}

inline Matrix realize(const FactorSpec& s) {
  return std::visit([](const auto& x) { return realize(x); }, s);
}

/// Row and column matrices are nilpotent perturbations of I: (I+N)^-1 = I-N.
inline RowSpec inverse(RowSpec s) {
  for (auto& e : s.entries) e = s.mod.neg(s.mod.reduce(e));
  return s;
}
inline ColSpec inverse(ColSpec s) {
  for (auto& e : s.entries) e = s.mod.neg(s.mod.reduce(e));
  return s;
}
inline ElemSpec inverse(ElemSpec s) {
  s.t = s.mod.neg(s.mod.reduce(s.t));
  return s;
}
inline FactorSpec inverse(const FactorSpec& s) {
  return std::visit([](const auto& x) -> FactorSpec { return inverse(x); }, s);
}

inline bool is_trivial(const RowSpec& s) {
  for (std::size_t j = 0; j < s.n; ++j)
    if (j != s.index && s.mod.reduce(s.entries[j]) != 0) return false;
  return true;
}
inline bool is_trivial(const ColSpec& s) {
  for (std::size_t i = 0; i < s.n; ++i)
    if (i != s.index && s.mod.reduce(s.entries[i]) != 0) return false;
  return true;
}
inline bool is_trivial(const ElemSpec& s) { return s.mod.reduce(s.t) == 0; }

inline RowSpec as_row_spec(const ElemSpec& e) {
  RowSpec r{e.n, e.i, std::vector<std::int64_t>(e.n, 0), e.mod};
  r.entries[e.j] = e.mod.reduce(e.t);
  return r;
}

/// Reads row `index` of a row matrix back into a RowSpec.
inline RowSpec row_spec_of(const Matrix& m, std::size_t index) {
  RowSpec r{m.dim(), index, std::vector<std::int64_t>(m.dim(), 0), m.modulus()};
  for (std::size_t j = 0; j < m.dim(); ++j)
    if (j != index) r.entries[j] = m(index, j);
  return r;
}

inline ColSpec col_spec_of(const Matrix& m, std::size_t index) {
  ColSpec c{m.dim(), index, std::vector<std::int64_t>(m.dim(), 0), m.modulus()};
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (i != index) c.entries[i] = m(i, index);
  return c;
}

// ---------------------------------------------------------------------------
// Text format: "n k" on the first line, then n lines of n integers.

inline Matrix read_matrix(std::istream& in, const std::optional<Modulus>& mod = std::nullopt) {
  std::int64_t n = 0, k = 0;
  if (!(in >> n >> k)) throw Error(Errc::parse_error, "expected header \"n k\"");
  if (n < 1) throw Error(Errc::parse_error, "bad dimension " + std::to_string(n));
  Modulus modulus = mod ? *mod : Modulus(k);
  if (modulus.value() != k) throw Error(Errc::shape_mismatch, "matrix file modulus differs from --k");
  Matrix m(static_cast<std::size_t>(n), modulus);
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      std::int64_t v = 0;
      if (!(in >> v))
        throw Error(Errc::parse_error, "missing entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), v);
    }
  }
  return m;
}

inline void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.dim() << ' ' << m.modulus().value() << '\n';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

inline std::string to_string(const Matrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

}  // namespace cayley
