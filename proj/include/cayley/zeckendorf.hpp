#pragma once

// Fibonacci numbers, Zeckendorf representations, and the even/odd index
// split used by the Fibonacci ladders.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cayley/error.hpp"

namespace cayley {

inline constexpr int kMaxFibIndex = 92;  // F_92 < 2^63 <= F_93

namespace detail {

inline constexpr std::array<std::int64_t, kMaxFibIndex + 1> fib_table = [] {
  std::array<std::int64_t, kMaxFibIndex + 1> f{};
  f[0] = 0;
  f[1] = 1;
  for (int i = 2; i <= kMaxFibIndex; ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}();

inline std::uint64_t magnitude(std::int64_t m) {
  return m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
}

// Largest s >= 2 with F_s <= x, for x >= 1.
inline int top_index(std::uint64_t x) {
  int s = 2;
  while (s < kMaxFibIndex && static_cast<std::uint64_t>(fib_table[s + 1]) <= x) ++s;
  return s;
}

}  // namespace detail

inline std::int64_t fib(int s) {
  if (s < 0 || s > kMaxFibIndex) throw Error(Errc::out_of_range, "fib index " + std::to_string(s) + " outside [0, 92]");
  return detail::fib_table[static_cast<std::size_t>(s)];
}

/// m = sign * sum F_{indices[j]}, indices increasing with gaps >= 2, first >= 2.
struct ZeckRep {
  int sign = 0;
  std::vector<int> indices;

  std::int64_t value() const {
    std::int64_t v = 0;
    for (int i : indices) v += fib(i);
    return sign * v;
  }
  friend bool operator==(const ZeckRep&, const ZeckRep&) = default;
};

/// Greedy: repeatedly take the largest Fibonacci number not exceeding what is left.
inline ZeckRep zeckendorf(std::int64_t m) {
  ZeckRep z;
  if (m == 0) return z;
  z.sign = m < 0 ? -1 : 1;
  std::uint64_t rest = detail::magnitude(m);
  if (rest > static_cast<std::uint64_t>(detail::fib_table[kMaxFibIndex]) * 2)
    throw Error(Errc::out_of_range, "zeckendorf input out of range");
  while (rest > 0) {
    int s = detail::top_index(rest);
    z.indices.push_back(s);
    rest -= static_cast<std::uint64_t>(detail::fib_table[s]);
  }
  std::reverse(z.indices.begin(), z.indices.end());
  return z;
}

/// m = sum_{j=1..L} (c_j F_{2j} + d_j F_{2j+1}); c[j-1] = c_j, d[j-1] = d_j.
struct FibCoeffs {
  int depth = 0;
  std::vector<int> c;
  std::vector<int> d;

  std::int64_t value() const {
    std::int64_t v = 0;
    for (int j = 1; j <= depth; ++j) v += c[j - 1] * fib(2 * j) + d[j - 1] * fib(2 * j + 1);
    return v;
  }
};

inline FibCoeffs fib_coeffs(std::int64_t m, int depth) {
  if (depth < 0) throw Error(Errc::depth_too_small, "negative depth");
  FibCoeffs out{depth, std::vector<int>(static_cast<std::size_t>(depth), 0),
                std::vector<int>(static_cast<std::size_t>(depth), 0)};
  ZeckRep z = zeckendorf(m);
  for (int idx : z.indices) {
    int j = idx / 2;
    if (j > depth)
      throw Error(Errc::depth_too_small, "value " + std::to_string(m) + " needs Zeckendorf index " +
                                             std::to_string(idx) + " > 2*" + std::to_string(depth) + "+1");
    (idx % 2 == 0 ? out.c : out.d)[static_cast<std::size_t>(j - 1)] = z.sign;
  }
  return out;
}

/// Smallest L such that fib_coeffs(m, L) succeeds for every |m| < bound.
inline int depth_bound(std::int64_t bound) {
  if (bound <= 1) return 0;
  int top = detail::top_index(static_cast<std::uint64_t>(bound - 1));
  return top / 2;
}

/// The analytic envelope (1 + 3 ln K) / 2 that depth_bound never exceeds (up to ceiling).
inline double depth_envelope(std::int64_t bound) { return (1.0 + 3.0 * std::log(static_cast<double>(bound))) / 2.0; }

}  // namespace cayley
