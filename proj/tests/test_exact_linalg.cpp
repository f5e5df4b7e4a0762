#include <gtest/gtest.h>

#include <random>

#include "beztate/matrix.hpp"
#include "support.hpp"

using namespace beztate;
using namespace testing_support;

namespace {

ExactMatrix from_ints(const Field& k, std::vector<std::vector<long long>> rows) {
  std::vector<Vector> vs;
  for (const auto& r : rows) {
    Vector v;
    for (auto x : r) v.push_back(k.from_int(x));
    vs.push_back(v);
  }
  return ExactMatrix::from_rows(k, rows.empty() ? 0 : rows[0].size(), vs);
}

// (A_0, A_1, A_2) -> A_0 x^2 + A_1 y^2 + A_2 xy with A_i linear, S_1^3 -> S_3.
// Rows x^3, x^2y, xy^2, y^3; columns (A_0 = x, y), (A_1 = x, y), (A_2 = x, y).
ExactMatrix net_degree_three(const Field& k) {
  return from_ints(k, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}, {0, 0, 0, 1, 0, 0}});
}

}  // namespace

TEST(Field, ParsesSpecs) {
  EXPECT_EQ(Field::parse("q"), Field::rationals());
  EXPECT_EQ(Field::parse("p:7").modulus(), 7u);
  EXPECT_EQ(Field().modulus(), 32003u);
  EXPECT_THROW(Field::parse("p:8"), InvalidInput);
  EXPECT_THROW(Field::parse("p:1"), InvalidInput);
  EXPECT_THROW(Field::parse("r"), InvalidInput);
  EXPECT_THROW(Field::parse("p:"), InvalidInput);
}

TEST(Field, CanonicalRepresentatives) {
  const Field f7 = Field::prime(7);
  EXPECT_EQ(f7.format(f7.from_int(-1)), "6");
  EXPECT_EQ(f7.format(f7.parse_scalar("3/2")), "5");
  EXPECT_EQ(f7.format(f7.inv(f7.from_int(3))), "5");
  EXPECT_THROW(f7.parse_scalar("1/7"), InvalidInput);
  EXPECT_THROW(f7.inv(f7.zero()), std::domain_error);

  const Field q = Field::rationals();
  EXPECT_EQ(q.format(q.parse_scalar("6/-4")), "-3/2");
  EXPECT_EQ(q.format(q.parse_scalar("-0/5")), "0");
  EXPECT_EQ(q.format(q.add(q.parse_scalar("1/3"), q.parse_scalar("2/3"))), "1");
  EXPECT_THROW(q.parse_scalar("1/0"), InvalidInput);
  EXPECT_THROW(q.parse_scalar("1.5"), InvalidInput);
}

TEST(Field, PrimeArithmeticMatchesIntegers) {
  const Field k = Field::prime(32003);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const long long a = static_cast<long long>(rng() % 100000) - 50000;
    const long long b = static_cast<long long>(rng() % 100000) - 50000;
    const auto mod = [](long long v) { return ((v % 32003) + 32003) % 32003; };
    EXPECT_EQ(k.residue(k.add(k.from_int(a), k.from_int(b))), mod(a + b));
    EXPECT_EQ(k.residue(k.mul(k.from_int(a), k.from_int(b))), mod(mod(a) * mod(b)));
    if (mod(b) != 0) EXPECT_EQ(k.mul(k.div(k.from_int(a), k.from_int(b)), k.from_int(b)), k.from_int(a));
  }
}

TEST(ExactMatrix, StoresOnlyNonzeros) {
  const Field k = Field::rationals();
  ExactMatrix m(k, 2, 2);
  m.set(0, 1, k.from_int(3));
  m.set(0, 1, k.zero());
  EXPECT_TRUE(m.is_zero());
  m.add_to(1, 0, k.from_int(2));
  m.add_to(1, 0, k.from_int(-2));
  EXPECT_EQ(m.nonzeros(), 0u);
  EXPECT_THROW(m.set(2, 0, k.one()), std::out_of_range);
}

TEST(KernelBasis, Examples) {
  const Field f7 = Field::prime(7);
  EXPECT_TRUE(kernel_basis(ExactMatrix::identity(f7, 2)).empty());

  const auto k = kernel_basis(from_ints(f7, {{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(f7.format(k[0][0]), "1");
  EXPECT_EQ(f7.format(k[0][1]), "6");

  const Field q = Field::rationals();
  const ExactMatrix net = net_degree_three(q);
  const auto ker = kernel_basis(net);
  EXPECT_EQ(ker.size(), 2u);
  for (const auto& v : ker)
    for (const auto& x : beztate::apply(net, v)) EXPECT_TRUE(x.is_zero());

  // No rows: every column is free.
  EXPECT_EQ(kernel_basis(ExactMatrix(q, 0, 3)).size(), 3u);
}

TEST(KernelBasis, ReducedEchelonWithLeadingOne) {
  const Field k = Field::prime(32003);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const ExactMatrix m = random_matrix(k, 4, 9, rng, 40);
    const auto ker = kernel_basis(m);
    std::vector<std::size_t> leads;
    for (const auto& v : ker) {
      std::size_t lead = 0;
      while (v[lead].is_zero()) ++lead;
      EXPECT_TRUE(v[lead].is_one());
      leads.push_back(lead);
    }
    for (std::size_t i = 1; i < leads.size(); ++i) EXPECT_LT(leads[i - 1], leads[i]);
    for (std::size_t i = 0; i < ker.size(); ++i)
      for (std::size_t j = 0; j < ker.size(); ++j)
        if (i != j) EXPECT_TRUE(ker[j][leads[i]].is_zero());
    EXPECT_EQ(kernel_basis(m).size(), ker.size());
    EXPECT_TRUE(kernel_basis(m) == ker);
  }
}

TEST(Rank, Examples) {
  const Field q = Field::rationals();
  EXPECT_EQ(rank(ExactMatrix(q, 3, 3)), 0u);
  EXPECT_EQ(rank(ExactMatrix::identity(q, 2)), 2u);
  EXPECT_EQ(rank(net_degree_three(q)), 4u);
  EXPECT_EQ(oracle_rank(net_degree_three(q)), 4u);
}

TEST(Rank, MatchesOracleAndKernel) {
  std::mt19937_64 rng(5);
  for (const Field& k : {Field::prime(32003), Field::rationals(), Field::prime(3)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + rng() % 9;
      const std::size_t cols = 1 + rng() % 9;
      ExactMatrix m = random_matrix(k, rows, cols, rng, 25 + static_cast<unsigned>(rng() % 60));
      // Force dependencies now and then.
      if (rows > 2 && trial % 3 == 0)
        for (std::size_t c = 0; c < cols; ++c) m.set(rows - 1, c, k.add(m.at(0, c), m.at(1, c)));
      const std::size_t r = rank(m);
      EXPECT_EQ(r, oracle_rank(m));
      EXPECT_EQ(r, rref(m).pivot_columns.size());
      EXPECT_EQ(r + kernel_basis(m).size(), cols);
      EXPECT_EQ(r, rank(m.transpose()));
      for (const auto& v : kernel_basis(m))
        for (const auto& x : beztate::apply(m, v)) EXPECT_TRUE(x.is_zero());
    }
  }
}

TEST(Rank, RationalsAgreeWithLargePrimeOnIntegerMatrices) {
  std::mt19937_64 rng(17);
  const Field q = Field::rationals();
  const Field p = Field::prime(2147483647);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<long long>> rows(6, std::vector<long long>(7));
    for (auto& r : rows)
      for (auto& x : r) x = static_cast<long long>(rng() % 5) - 2;
    EXPECT_EQ(rank(from_ints(q, rows)), rank(from_ints(p, rows)));
  }
}

TEST(Rank, RationalFractionsAreExact) {
  const Field q = Field::rationals();
  ExactMatrix m(q, 2, 2);
  m.set(0, 0, q.parse_scalar("1/3"));
  m.set(0, 1, q.parse_scalar("1/7"));
  m.set(1, 0, q.parse_scalar("7/5"));
  m.set(1, 1, q.parse_scalar("3/5"));
  EXPECT_EQ(rank(m), 1u);
}

TEST(Pairing, Nondegeneracy) {
  const Field q = Field::rationals();
  EXPECT_TRUE(is_nondegenerate_pairing(from_ints(q, {{0, 1}, {1, 0}})));
  EXPECT_FALSE(is_nondegenerate_pairing(from_ints(q, {{1, 0}, {0, 0}})));
  EXPECT_FALSE(is_nondegenerate_pairing(from_ints(q, {{1, 0, 0}, {0, 1, 0}})));
  EXPECT_TRUE(is_nondegenerate_pairing(ExactMatrix(q, 0, 0)));
}

TEST(ImageBasis, SpansColumnSpace) {
  const Field k = Field::prime(32003);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const ExactMatrix m = random_matrix(k, 6, 4, rng, 50);
    const auto img = image_basis(m);
    EXPECT_EQ(img.size(), rank(m));
    if (img.empty()) continue;
    const ExactMatrix cols = ExactMatrix::from_columns(k, 6, img);
    EXPECT_EQ(rank(hconcat(m, cols)), rank(m));
  }
}

TEST(IntersectionDim, Subspaces) {
  const Field q = Field::rationals();
  const ExactMatrix a = from_ints(q, {{1, 0}, {0, 1}, {0, 0}});
  const ExactMatrix b = from_ints(q, {{1}, {1}, {0}});
  const ExactMatrix c = from_ints(q, {{0}, {0}, {1}});
  EXPECT_EQ(intersection_dim(a, b), 1u);
  EXPECT_EQ(intersection_dim(a, c), 0u);
}

TEST(Products, MatchDenseProduct) {
  std::mt19937_64 rng(29);
  for (const Field& k : {Field::prime(32003), Field::rationals()}) {
    const ExactMatrix a = random_matrix(k, 5, 4, rng);
    const ExactMatrix b = random_matrix(k, 4, 3, rng);
    const ExactMatrix ab = a * b;
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        Scalar s = k.zero();
        for (std::size_t j = 0; j < 4; ++j) s = k.add(s, k.mul(a.at(r, j), b.at(j, c)));
        EXPECT_EQ(ab.at(r, c), s);
      }
    EXPECT_THROW(a * a, std::invalid_argument);
  }
}
