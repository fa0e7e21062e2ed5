#pragma once

// Arithmetic in Z/kZ for a modulus with known prime-power factorization.

#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cayley/error.hpp"

namespace cayley {

struct PrimePower {
  std::int64_t prime;
  int exponent;
  std::int64_t power;  // prime^exponent

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

namespace detail {

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::int64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// p-adic valuation of x in Z/p^m, with v(0) = m.
inline int valuation(std::int64_t x, const PrimePower& pp) {
  x %= pp.power;
  if (x < 0) x += pp.power;
  if (x == 0) return pp.exponent;
  int v = 0;
  while (x % pp.prime == 0) {
    x /= pp.prime;
    ++v;
  }
  return v;
}

}  // namespace detail

/// The ring Z/kZ together with the factorization k = prod p^m.
///
/// Cheap to copy: the factor list is shared and immutable.
class Modulus {
 public:
  /// Factorizes k by trial division (stopping early once the cofactor is prime).
  explicit Modulus(std::int64_t k) : k_(k) {
    if (k < 2) throw Error(Errc::invalid_modulus, "k must be >= 2, got " + std::to_string(k));
    std::vector<PrimePower> f;
    std::int64_t rest = k;
    bool rest_tested = false;
    for (std::int64_t p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
      if (rest % p != 0) {
        if (p > 1000 && !rest_tested) {
          if (detail::is_prime(rest)) break;
          rest_tested = true;
        }
        continue;
      }
      rest_tested = false;
      PrimePower pp{p, 0, 1};
      while (rest % p == 0) {
        rest /= p;
        pp.exponent++;
        pp.power *= p;
      }
      f.push_back(pp);
    }
    if (rest > 1) f.push_back({rest, 1, rest});
    factors_ = std::make_shared<const std::vector<PrimePower>>(std::move(f));
  }

  /// Uses a caller-supplied factorization after validating it.
  Modulus(std::int64_t k, std::vector<PrimePower> factors) : k_(k) {
    if (k < 2) throw Error(Errc::invalid_modulus, "k must be >= 2, got " + std::to_string(k));
    __int128 prod = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      auto& pp = factors[i];
      if (!detail::is_prime(pp.prime) || pp.exponent < 1)
        throw Error(Errc::invalid_modulus, "factor " + std::to_string(pp.prime) + " is not a prime power");
      for (std::size_t j = 0; j < i; ++j) {
        if (factors[j].prime == pp.prime) throw Error(Errc::invalid_modulus, "repeated prime in factorization");
      }
      __int128 pw = 1;
      for (int e = 0; e < pp.exponent; ++e) {
        pw *= pp.prime;
        if (pw > k) throw Error(Errc::invalid_modulus, "factorization does not multiply to k");
      }
      pp.power = static_cast<std::int64_t>(pw);
      prod *= pw;
      if (prod > k) throw Error(Errc::invalid_modulus, "factorization does not multiply to k");
    }
    if (prod != k) throw Error(Errc::invalid_modulus, "factorization does not multiply to k");
    factors_ = std::make_shared<const std::vector<PrimePower>>(std::move(factors));
  }

  std::int64_t value() const noexcept { return k_; }
  std::span<const PrimePower> factors() const noexcept { return *factors_; }

  std::int64_t reduce(std::int64_t x) const noexcept {
    x %= k_;
    return x < 0 ? x + k_ : x;
  }
  std::int64_t reduce(int x) const noexcept { return reduce(static_cast<std::int64_t>(x)); }
  std::int64_t reduce(std::uint64_t x) const noexcept {
    return static_cast<std::int64_t>(x % static_cast<std::uint64_t>(k_));
  }
  std::int64_t reduce_wide(__int128 x) const noexcept {
    auto r = static_cast<std::int64_t>(x % k_);
    return r < 0 ? r + k_ : r;
  }

  std::int64_t add(std::int64_t a, std::int64_t b) const noexcept {
    auto r = static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b);
    return static_cast<std::int64_t>(r >= static_cast<std::uint64_t>(k_) ? r - k_ : r);
  }
  std::int64_t sub(std::int64_t a, std::int64_t b) const noexcept { return a >= b ? a - b : a - b + k_; }
  std::int64_t neg(std::int64_t a) const noexcept { return a == 0 ? 0 : k_ - a; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const noexcept { return detail::mulmod(a, b, k_); }

  bool is_unit(std::int64_t a) const noexcept { return std::gcd(reduce(a), k_) == 1; }

  /// Inverse by extended Euclid; throws no_inverse for non-units.
  std::int64_t inverse(std::int64_t a) const {
    std::int64_t r0 = k_, r1 = reduce(a);
    __int128 s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      __int128 s2 = s0 - q * s1;
      r0 = r1;
      r1 = r2;
      s0 = s1;
      s1 = s2;
    }
    if (r0 != 1) throw Error(Errc::no_inverse, std::to_string(a) + " is not a unit mod " + std::to_string(k_));
    return reduce_wide(s0);
  }

  /// Representative in (-k/2, k/2]; for even k the tie k/2 stays positive.
  std::int64_t centered(std::int64_t a) const noexcept {
    a = reduce(a);
    return a > k_ / 2 ? a - k_ : a;
  }

  /// Bound K with |centered(a)| < K for every residue a.
  std::int64_t centered_bound() const noexcept { return k_ / 2 + 1; }

  friend bool operator==(const Modulus& x, const Modulus& y) noexcept { return x.k_ == y.k_; }

 private:
  std::int64_t k_;
  std::shared_ptr<const std::vector<PrimePower>> factors_;
};

inline Modulus factorize(std::int64_t k) { return Modulus(k); }

/// An element of Z/kZ bound to its modulus.
class Residue {
 public:
  Residue(std::int64_t value, Modulus mod) : mod_(std::move(mod)), value_(mod_.reduce(value)) {}

  std::int64_t value() const noexcept { return value_; }
  const Modulus& modulus() const noexcept { return mod_; }

  bool is_unit() const noexcept { return mod_.is_unit(value_); }
  Residue inverse() const { return {mod_.inverse(value_), mod_}; }

  friend Residue operator+(const Residue& a, const Residue& b) {
    check_same(a, b);
    return {a.mod_.add(a.value_, b.value_), a.mod_};
  }
  friend Residue operator-(const Residue& a, const Residue& b) {
    check_same(a, b);
    return {a.mod_.sub(a.value_, b.value_), a.mod_};
  }
  friend Residue operator*(const Residue& a, const Residue& b) {
    check_same(a, b);
    return {a.mod_.mul(a.value_, b.value_), a.mod_};
  }
  friend bool operator==(const Residue& a, const Residue& b) noexcept {
    return a.mod_ == b.mod_ && a.value_ == b.value_;
  }

 private:
  static void check_same(const Residue& a, const Residue& b) {
    if (!(a.mod_ == b.mod_)) throw Error(Errc::shape_mismatch, "residues over different moduli");
  }

  Modulus mod_;
  std::int64_t value_;
};

/// Returns s such that the ideal (a + s*b) equals the ideal (a, b).
///
/// Per prime power p^m: s_p = 0 when (a) already contains b, else 1. The
/// components are recombined as s = sum s_p * (k / p^m); each k / p^m is a
/// unit mod p^m, which leaves the per-component ideal unchanged.
inline Residue stabilizer(const Residue& a, const Residue& b) {
  const Modulus& mod = a.modulus();
  if (!(mod == b.modulus())) throw Error(Errc::shape_mismatch, "residues over different moduli");
  std::int64_t s = 0;
  for (const auto& pp : mod.factors()) {
    bool contains = detail::valuation(a.value(), pp) <= detail::valuation(b.value(), pp);
    if (!contains) s = mod.add(s, mod.value() / pp.power);
  }
  return {s, mod};
}

/// Coefficients t_2..t_l with a_1 + t_2 a_2 + ... + t_l a_l a unit.
///
/// Requires gcd(a_1, ..., a_l, k) = 1; throws not_unimodular otherwise.
inline std::vector<Residue> unit_combination(std::span<const Residue> a) {
  if (a.empty()) throw Error(Errc::not_unimodular, "empty sequence");
  const Modulus& mod = a[0].modulus();
  std::vector<Residue> t;
  t.reserve(a.size() - 1);
  Residue acc = a[0];
  for (std::size_t j = 1; j < a.size(); ++j) {
    Residue s = stabilizer(acc, a[j]);
    acc = acc + s * a[j];
    t.push_back(s);
  }
  if (!acc.is_unit()) throw Error(Errc::not_unimodular, "entries do not generate Z/" + std::to_string(mod.value()));
  return t;
}

inline Residue inverse(const Residue& a) { return a.inverse(); }

}  // namespace cayley
