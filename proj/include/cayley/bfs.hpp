#pragma once

// Exact Cayley-graph distances for tiny groups, by breadth-first search over
// the generator set {A, A^-1, B, B^-1}.

#include <cmath>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/matrix.hpp"
#include "cayley/word.hpp"

namespace cayley {

/// Row-major residues, each in the minimal number of bytes for k - 1.
inline std::string encode_element(const Matrix& m) {
  std::uint64_t top = static_cast<std::uint64_t>(m.modulus().value() - 1);
  int width = 1;
  while (width < 8 && (top >> (8 * width)) != 0) ++width;
  std::string out;
  out.reserve(m.data().size() * static_cast<std::size_t>(width));
  for (std::int64_t v : m.data())
    for (int b = 0; b < width; ++b) out.push_back(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * b)) & 0xff));
  return out;
}

/// |SL_n(Z/kZ)| = prod over p^m || k of p^((m-1)(n^2-1)) * p^(n(n-1)/2) * prod_{i=2..n} (p^i - 1).
inline double group_order(std::size_t n, const Modulus& mod) {
  double order = 1;
  for (const auto& pp : mod.factors()) {
    auto p = static_cast<double>(pp.prime);
    double dn = static_cast<double>(n);
    order *= std::pow(p, (pp.exponent - 1) * (dn * dn - 1) + dn * (dn - 1) / 2);
    for (std::size_t i = 2; i <= n; ++i) order *= std::pow(p, static_cast<double>(i)) - 1;
  }
  return order;
}

struct BfsTable {
  std::size_t n;
  std::int64_t k;
  std::unordered_map<std::string, std::uint32_t> distances;
  std::vector<Matrix> elements;        // in BFS order
  std::vector<std::uint64_t> histogram;  // histogram[d] = #elements at distance d
  std::uint32_t diameter = 0;

  std::uint32_t distance(const Matrix& m) const {
    auto it = distances.find(encode_element(m));
    if (it == distances.end()) throw Error(Errc::out_of_range, "element not in table");
    return it->second;
  }
};

inline constexpr double kBfsSizeLimit = 1e7;

inline BfsTable bfs_distances(std::size_t n, const Modulus& mod) {
  check_dimension(n);
  double size = std::pow(static_cast<double>(mod.value()), static_cast<double>(n * n - 1));
  if (size > kBfsSizeLimit)
    throw Error(Errc::too_large, "k^(n^2-1) = " + std::to_string(size) + " exceeds the BFS limit");

  BfsTable t{n, mod.value(), {}, {}, {}, 0};
  const Evaluator eval(n, mod);
  const Word moves[] = {Word::letter(Gen::A, 1), Word::letter(Gen::A, -1), Word::letter(Gen::B, 1),
                        Word::letter(Gen::B, -1)};
  Matrix id = Matrix::identity(n, mod);
  t.distances.emplace(encode_element(id), 0);
  t.elements.push_back(id);
  for (std::size_t head = 0; head < t.elements.size(); ++head) {
    Matrix cur = t.elements[head];
    std::uint32_t d = t.distances.at(encode_element(cur));
    for (const Word& mv : moves) {
      Matrix next = cur;
      eval.apply(next, mv);
      if (t.distances.emplace(encode_element(next), d + 1).second) t.elements.push_back(std::move(next));
    }
  }
  for (const auto& [key, d] : t.distances) {
    if (t.histogram.size() <= d) t.histogram.resize(d + 1, 0);
    t.histogram[d]++;
    if (d > t.diameter) t.diameter = d;
  }
  return t;
}

inline BfsTable bfs_distances(std::size_t n, std::int64_t k) { return bfs_distances(n, Modulus(k)); }

}  // namespace cayley
