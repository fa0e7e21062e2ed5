#include <gtest/gtest.h>

#include "support.hpp"

using namespace cayley;
using cayley::testing::elementary;
using cayley::testing::for_each_bit_pattern;
using cayley::testing::naive_eval;

namespace {

NParams random_params(std::mt19937_64& rng, std::size_t n) {
  NParams p(n);
  std::uniform_int_distribution<int> s(-2, 2), t(-1, 1);
  for (std::size_t i = 2; i + 1 <= n; ++i) p.s[i] = s(rng);
  for (std::size_t i = 2; i + 2 <= n; ++i) p.t[i] = t(rng);
  return p;
}

Matrix inverse_unipotent(const Matrix& m) {
  // (I - X)^{-1} = I + X + X^2 + ... for strictly triangular X.
  const std::size_t n = m.dim();
  Matrix x = m;
  for (std::size_t i = 0; i < n; ++i) x.set(i, i, 0);
  Matrix neg_x = x;
  for (auto& v : neg_x.data()) v = m.modulus().neg(v);
  Matrix sum = Matrix::identity(n, m.modulus()), term = Matrix::identity(n, m.modulus());
  for (std::size_t k = 1; k < n; ++k) {
    term = term * neg_x;
    for (std::size_t i = 0; i < n * n; ++i) sum.data()[i] = m.modulus().add(sum.data()[i], term.data()[i]);
  }
  return sum;
}

std::vector<std::int64_t> first_row_tail(const Matrix& m) {
  std::vector<std::int64_t> out(m.dim() + 1, 0);
  for (std::size_t i = 2; i <= m.dim(); ++i) out[i] = m.modulus().centered(m(0, i - 1));
  return out;
}

Matrix row_one(const std::vector<std::int64_t>& m, const Modulus& mod) {
  const std::size_t n = m.size() - 1;
  Matrix r = Matrix::identity(n, mod);
  for (std::size_t i = 2; i <= n; ++i) r.set(0, i - 1, m[i]);
  return r;
}

}  // namespace

TEST(Conjugation, DirectionPin) {
  // recursion_row is the first row of N e_{1,2} N^-1, not of N^-1 e_{1,2} N.
  std::mt19937_64 rng(1);
  Modulus mod(1000003);
  int other_direction_matches = 0;
  for (std::size_t n = 3; n <= 12; ++n)
    for (int it = 0; it < 50; ++it) {
      NParams p = random_params(rng, n);
      Matrix N = n_matrix(p, mod);
      Matrix Ninv = inverse_unipotent(N);
      ASSERT_TRUE((N * Ninv).is_identity());
      Matrix e12 = elementary(n, 0, 1, 1, mod);
      Matrix forward = N * e12 * Ninv;
      EXPECT_EQ(forward, row_one(recursion_row(p), mod));
      if (first_row_tail(Ninv * e12 * N) == recursion_row(p)) ++other_direction_matches;
    }
  EXPECT_LT(other_direction_matches, 100);
}

TEST(RecursionRow, Examples) {
  NParams zero(6);
  EXPECT_EQ(recursion_row(zero), (std::vector<std::int64_t>{0, 0, 1, 0, 0, 0, 0}));
  NParams one(6);
  one.s[2] = 1;
  EXPECT_EQ(recursion_row(one), (std::vector<std::int64_t>{0, 0, 1, 1, 0, 0, 0}));
  NParams fibs(7);
  for (std::size_t i = 2; i <= 6; ++i) fibs.s[i] = 1;
  for (std::size_t i = 2; i <= 5; ++i) fibs.t[i] = 1;
  EXPECT_EQ(recursion_row(fibs), (std::vector<std::int64_t>{0, 0, 1, 1, 2, 3, 5, 8}));
  Modulus mod(1000);
  Matrix N = n_matrix(fibs, mod);
  EXPECT_EQ(N * elementary(7, 0, 1, 1, mod) * inverse_unipotent(N), row_one(recursion_row(fibs), mod));
}

TEST(SolveParams, Examples) {
  NParams all_ones = solve_params({0, 0, 1, 1, 1, 1, 1});
  EXPECT_EQ(all_ones.s[2], 1);
  EXPECT_EQ(all_ones.s[4], 1);
  EXPECT_EQ(all_ones.t[2], 1);
  EXPECT_EQ(all_ones.t[3], 0);

  NParams p = solve_params({0, 0, 1, 2, 1, -1});
  EXPECT_EQ(p.s[2], 2);
  EXPECT_EQ(p.s[3], 0);
  EXPECT_EQ(p.s[4], -1);
  EXPECT_EQ(p.t[2], 1);
  EXPECT_EQ(p.t[3], 0);

  NParams q = solve_params({0, 0, 1, 1, -2, 1});
  EXPECT_EQ(q.s[2], 1);
  EXPECT_EQ(q.s[3], -2);
  EXPECT_EQ(q.s[4], 0);
  EXPECT_EQ(q.t[3], 1);
  EXPECT_EQ(q.t[2], 0);
}

TEST(SolveParams, Unsolvable) {
  for (auto m : std::vector<std::vector<std::int64_t>>{{0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 1}, {0, 0, 1, 3, 1}}) {
    try {
      solve_params(m);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::unsolvable_pattern);
    }
  }
}

TEST(SolveParams, ExhaustiveSolvablePatterns) {
  for (std::size_t n = 3; n <= 8; ++n) {
    std::size_t total = 1;
    for (std::size_t i = 3; i <= n; ++i) total *= 5;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::int64_t> m(n + 1, 0);
      m[2] = 1;
      std::size_t c = code;
      for (std::size_t i = 3; i <= n; ++i) {
        m[i] = static_cast<std::int64_t>(c % 5) - 2;
        c /= 5;
      }
      bool even = true, odd = true;
      for (std::size_t i = 3; i <= n; ++i) (i % 2 ? odd : even) = (i % 2 ? odd : even) && m[i] == 1;
      if (!even && !odd) {
        EXPECT_THROW(solve_params(m), Error);
        continue;
      }
      NParams p = solve_params(m);
      EXPECT_EQ(recursion_row(p), m);
      for (std::size_t i = 2; i + 2 <= n; ++i) EXPECT_TRUE(p.t[i] == 0 || p.t[i] == 1);
      for (std::size_t i = 2; i + 1 <= n; ++i) EXPECT_LE(std::llabs(p.s[i]), 2);
    }
  }
}

TEST(SplitBitRow, Examples) {
  Modulus mod(101);
  auto check = [&](const std::vector<std::int64_t>& m) {
    auto [n1, n2] = split_bit_row(m);
    Matrix r1 = row_one(recursion_row(n1), mod), r2 = row_one(recursion_row(n2), mod);
    EXPECT_EQ(r1 * inverse_unipotent(r2), row_one(m, mod));
    for (std::size_t i = 3; i < m.size(); ++i) EXPECT_EQ(recursion_row(n1)[i] - recursion_row(n2)[i], m[i]);
  };
  check({0, 0, 0, 0, 0, 0});
  check({0, 0, 0, 1, 0});
  check({0, 0, 0, -1, 1, -1});
  auto [z1, z2] = split_bit_row({0, 0, 0, 0, 0, 0});
  EXPECT_EQ(recursion_row(z1), recursion_row(z2));
  EXPECT_THROW(split_bit_row({0, 0, 1, 0, 0}), Error);
  EXPECT_THROW(split_bit_row({0, 0, 0, 2, 0}), Error);
}

TEST(WordForN, Examples) {
  Modulus mod(1000003);
  NParams zero(5);
  EXPECT_TRUE(evaluate(word_for_N(zero), 5, mod).is_identity());
  NParams s2(3);
  s2.s[2] = 1;
  EXPECT_EQ(evaluate(word_for_N(s2), 3, mod), elementary(3, 1, 2, -1, mod));
  std::mt19937_64 rng(2);
  for (int it = 0; it < 100; ++it) {
    NParams p = random_params(rng, 5);
    Word w = word_for_N(p);
    EXPECT_EQ(evaluate(w, 5, mod), n_matrix(p, mod));
    EXPECT_LE(w.length(), 36u);
  }
}

TEST(WordForN, RandomUpTo50) {
  std::mt19937_64 rng(3);
  Modulus mod(1000000007);
  for (std::size_t n = 3; n <= 50; ++n)
    for (int it = 0; it < 40; ++it) {
      NParams p = random_params(rng, n);
      Word w = word_for_N(p);
      ASSERT_EQ(evaluate(w, n, mod), n_matrix(p, mod)) << n;
      ASSERT_LE(w.length(), 12 * n - 24) << n;
    }
}

TEST(WordForN, WorstCaseLength) {
  // |s| = 2 and |t| = 1 everywhere.
  Modulus mod(97);
  for (std::size_t n = 3; n <= 40; ++n) {
    NParams p(n);
    for (std::size_t i = 2; i + 1 <= n; ++i) p.s[i] = -2;
    for (std::size_t i = 2; i + 2 <= n; ++i) p.t[i] = -1;
    Word w = word_for_N(p);
    EXPECT_EQ(evaluate(w, n, mod), n_matrix(p, mod));
    EXPECT_LE(w.length(), 12 * n - 24);
  }
}

TEST(WordForN, MatchesNaiveProduct) {
  std::mt19937_64 rng(4);
  Modulus mod(7);
  for (std::size_t n = 3; n <= 6; ++n) {
    NParams p = random_params(rng, n);
    EXPECT_EQ(naive_eval(word_for_N(p), n, mod), n_matrix(p, mod));
  }
}

TEST(ReversedN, IsReversalTransposeOfN) {
  std::mt19937_64 rng(5);
  Modulus mod(10007);
  for (std::size_t n = 3; n <= 20; ++n)
    for (int it = 0; it < 20; ++it) {
      NParams p = random_params(rng, n);
      Matrix N = n_matrix(p, mod);
      Matrix phi(n, mod);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) phi.set(i, j, N(n - 1 - j, n - 1 - i));
      EXPECT_EQ(reversed_n_matrix(p, mod), phi);
      Word w = word_for_reversed_N(p);
      EXPECT_EQ(evaluate(w, n, mod), phi);
      EXPECT_LE(w.length(), 12 * n - 24);
    }
}

TEST(LastSuperdiagonal, BothParities) {
  Modulus mod(101);
  for (std::size_t n = 3; n <= 12; ++n) {
    EXPECT_EQ(evaluate(last_superdiag_word(1), n, mod), elementary(n, n - 2, n - 1, 1, mod));
    EXPECT_EQ(evaluate(last_superdiag_word(-1), n, mod), elementary(n, n - 2, n - 1, -1, mod));
    EXPECT_EQ(last_superdiag_word(1).length(), 5u);
  }
}

TEST(BitRowWord, Examples) {
  Modulus mod(1000003);
  for (std::size_t n = 3; n <= 10; ++n) {
    Matrix a = generator(Gen::A, n, mod);
    Word wa = bit_row_word(row_spec_of(a, 0));
    EXPECT_EQ(evaluate(wa, n, mod), a);
    EXPECT_LE(wa.length(), 48 * n);
    Matrix e13 = elementary(n, 0, 2, 1, mod);
    EXPECT_EQ(evaluate(bit_row_word(row_spec_of(e13, 0)), n, mod), e13);
    if (n >= 5) {
      Matrix e34 = elementary(n, 2, 3, 1, mod);
      Word w = bit_row_word(row_spec_of(e34, 2));
      EXPECT_EQ(evaluate(w, n, mod), e34);
      EXPECT_LE(w.length(), 49 * n);
    }
  }
}

TEST(BitRowWord, RejectsNonBitEntries) {
  Modulus mod(101);
  RowSpec r{4, 1, {2, 0, 0, 0}, mod};
  try {
    bit_row_word(r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_bit_matrix);
  }
  ColSpec c{4, 1, {0, 0, 50, 0}, mod};
  EXPECT_THROW(bit_col_word(c), Error);
}

TEST(BitRowWord, ExhaustiveUpTo8) {
  for (std::int64_t k : {2LL, 3LL, 1000000007LL}) {
    Modulus mod(k);
    for (std::size_t n = 3; n <= (k == 1000000007LL ? 8u : 6u); ++n) {
      Evaluator ev(n, mod);
      for (std::size_t idx = 0; idx < n; ++idx)
        for_each_bit_pattern(n, idx, mod, [&](const std::vector<std::int64_t>& v) {
          RowSpec r{n, idx, v, mod};
          Word w = bit_row_word(r);
          ASSERT_EQ(ev.evaluate(w), realize(r));
          ASSERT_LE(w.length(), (idx == 0 ? 48 : 49) * n);
        });
    }
  }
}

TEST(BitColWord, Examples) {
  Modulus mod(1000003);
  for (std::size_t n = 3; n <= 10; ++n) {
    Matrix e = elementary(n, n - 2, n - 1, 1, mod);
    Word w = bit_col_word(col_spec_of(e, n - 1));
    EXPECT_EQ(evaluate(w, n, mod), e);
    EXPECT_EQ(w, last_superdiag_word(1));
    Matrix ei = elementary(n, n - 2, n - 1, -1, mod);
    EXPECT_EQ(evaluate(bit_col_word(col_spec_of(ei, n - 1)), n, mod), ei);
  }
  std::mt19937_64 rng(6);
  for (int it = 0; it < 200; ++it) {
    auto v = cayley::testing::random_entries(rng, 6, 1, -1, 1, mod);
    ColSpec c{6, 1, v, mod};
    Word w = bit_col_word(c);
    EXPECT_EQ(evaluate(w, 6, mod), realize(c));
    EXPECT_LE(w.length(), 294u);
  }
}

TEST(BitColWord, ExhaustiveUpTo6) {
  for (std::int64_t k : {2LL, 3LL, 1000000007LL}) {
    Modulus mod(k);
    for (std::size_t n = 3; n <= 6; ++n) {
      Evaluator ev(n, mod);
      for (std::size_t idx = 0; idx < n; ++idx)
        for_each_bit_pattern(n, idx, mod, [&](const std::vector<std::int64_t>& v) {
          ColSpec c{n, idx, v, mod};
          Word w = bit_col_word(c);
          ASSERT_EQ(ev.evaluate(w), realize(c));
          ASSERT_LE(w.length(), (idx == n - 1 ? 48 : 49) * n);
        });
    }
  }
}

TEST(BitWords, RandomLarge) {
  std::mt19937_64 rng(7);
  Modulus mod(2147483647);
  for (std::size_t n = 9; n <= 40; ++n) {
    Evaluator ev(n, mod);
    for (int it = 0; it < 30; ++it) {
      std::size_t idx = rng() % n;
      auto v = cayley::testing::random_entries(rng, n, idx, -1, 1, mod);
      RowSpec r{n, idx, v, mod};
      ColSpec c{n, idx, v, mod};
      Word wr = bit_row_word(r), wc = bit_col_word(c);
      ASSERT_EQ(ev.evaluate(wr), realize(r));
      ASSERT_EQ(ev.evaluate(wc), realize(c));
      ASSERT_LE(wr.length(), (idx == 0 ? 48 : 49) * n);
      ASSERT_LE(wc.length(), (idx == n - 1 ? 48 : 49) * n);
    }
  }
}

TEST(ElementaryBitWord, AllPositions) {
  Modulus mod(11);
  for (std::size_t n = 3; n <= 7; ++n)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (std::int64_t e : {1, -1})
          EXPECT_EQ(evaluate(elementary_bit_word(n, i, j, e, mod), n, mod), elementary(n, i, j, e, mod));
      }
}
