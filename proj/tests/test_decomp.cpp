#include <gtest/gtest.h>

#include "support.hpp"

using namespace cayley;
using cayley::testing::elementary;

namespace {

void expect_valid(const Factorization& f, const Matrix& m) {
  const std::size_t n = m.dim();
  ASSERT_EQ(recompose(f), m);
  Matrix product = Matrix::identity(n, m.modulus());
  for (const auto& factor : f.factors) {
    product = product * realize(factor);
    std::visit([](const auto& s) { EXPECT_FALSE(is_trivial(s)); }, factor);
  }
  ASSERT_EQ(product, m);
  EXPECT_LE(f.count(FactorKind::row), n);
  EXPECT_LE(f.count(FactorKind::column), n);
  EXPECT_LE(f.count(FactorKind::elementary), n);
}

}  // namespace

TEST(Decompose, Identity) {
  Modulus mod(6);
  Factorization f = decompose(Matrix::identity(4, mod));
  EXPECT_TRUE(f.factors.empty());
  EXPECT_TRUE(recompose(f).is_identity());
}

TEST(Decompose, GeneratorA) {
  Modulus mod(6);
  Matrix a = generator(Gen::A, 3, mod);
  Factorization f = decompose(a);
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(realize(f.factors[0]), a);
}

TEST(Decompose, SingleColumnMatrix) {
  Modulus mod(10);
  ColSpec c{4, 2, {3, 0, 0, 7}, mod};
  Factorization f = decompose(realize(c));
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(kind_of(f.factors[0]), FactorKind::column);
}

TEST(Decompose, RejectsNonSpecial) {
  Modulus mod(5);
  Matrix m = Matrix::identity(3, mod);
  m.set(0, 0, 2);
  try {
    decompose(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_special);
  }
}

TEST(Decompose, RepairPathModSix) {
  std::mt19937_64 rng(1);
  Modulus mod(6);
  int repaired = 0;
  for (int it = 0; it < 500; ++it) {
    Matrix m = random_special(3, mod, rng);
    if (mod.is_unit(m(0, 2))) continue;
    Factorization f = decompose(m);
    expect_valid(f, m);
    repaired += f.count(FactorKind::column) > 0;
  }
  EXPECT_GT(repaired, 0);
}

TEST(Decompose, NonUnitEverywhereInLastColumn) {
  // Entry (r, n) is a zero divisor in every row: every pivot needs the repair.
  Modulus mod(6);
  Matrix m = Matrix::from_rows({{2, 3, 0}, {3, 2, 0}, {0, 0, 1}}, mod);
  ASSERT_TRUE(is_special(m));
  expect_valid(decompose(m), m);
}

TEST(Decompose, AllOfSL3F2) {
  BfsTable t = bfs_distances(3, 2);
  ASSERT_EQ(t.elements.size(), 168u);
  for (const Matrix& m : t.elements) expect_valid(decompose(m), m);
}

TEST(Decompose, RandomGrid) {
  std::mt19937_64 rng(2);
  for (std::int64_t k : {2LL, 3LL, 4LL, 6LL, 9LL, 12LL, 25LL, 101LL, 1048576LL, 1000000007LL, 4611686018427387847LL}) {
    Modulus mod(k);
    for (std::size_t n : {3u, 4u, 5u, 6u, 8u, 10u})
      for (int it = 0; it < 30; ++it) {
        Matrix m = random_special(n, mod, rng);
        expect_valid(decompose(m), m);
      }
  }
}

TEST(Decompose, Deterministic) {
  std::mt19937_64 rng(3);
  Modulus mod(360);
  for (int it = 0; it < 50; ++it) {
    Matrix m = random_special(5, mod, rng);
    Factorization a = decompose(m), b = decompose(m);
    ASSERT_EQ(a.factors.size(), b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
      EXPECT_EQ(kind_of(a.factors[i]), kind_of(b.factors[i]));
      EXPECT_EQ(realize(a.factors[i]), realize(b.factors[i]));
    }
  }
}

TEST(Recompose, Examples) {
  Modulus mod(7);
  Factorization empty{Matrix::identity(3, mod), {}};
  EXPECT_TRUE(recompose(empty).is_identity());
  ElemSpec e{3, 2, 0, 5, mod};
  Factorization one{realize(e), {e}};
  EXPECT_EQ(recompose(one), realize(e));
}

TEST(FactorKind, Names) {
  EXPECT_STREQ(to_string(FactorKind::row), "row");
  EXPECT_STREQ(to_string(FactorKind::column), "column");
  EXPECT_STREQ(to_string(FactorKind::elementary), "elementary");
}
