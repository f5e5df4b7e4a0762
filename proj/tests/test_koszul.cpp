#include <gtest/gtest.h>

#include <random>

#include "beztate/koszul.hpp"
#include "support.hpp"

using namespace beztate;
using namespace testing_support;

namespace {

const Field q = Field::rationals();

std::vector<Polynomial> squares() { return {mono(q, {2, 0}), mono(q, {0, 2})}; }
std::vector<Polynomial> net() { return {mono(q, {2, 0}), mono(q, {0, 2}), mono(q, {1, 1})}; }

Polynomial combination(const std::vector<Polynomial>& tuple, const std::vector<Polynomial>& forms) {
  Polynomial sum(forms.front().field(), forms.front().n());
  for (std::size_t i = 0; i < forms.size(); ++i) sum = sum + tuple[i] * forms[i];
  return sum;
}

}  // namespace

TEST(KoszulSetup, Validation) {
  const KoszulSetup s = make_koszul_setup(net());
  EXPECT_EQ(s.m, 2);
  EXPECT_EQ(s.n, 1);
  EXPECT_EQ(s.sigma, 4);
  EXPECT_EQ(s.rho, 2);
  EXPECT_TRUE(s.certificate.certified);
  EXPECT_THROW(make_koszul_setup({mono(q, {2, 0}), mono(q, {2, 0}, 3)}), InvalidInput);
  EXPECT_THROW(make_koszul_setup({mono(q, {2, 0}), mono(q, {1, 0})}), InvalidInput);
  EXPECT_THROW(make_koszul_setup({}), InvalidInput);
  EXPECT_FALSE(make_koszul_setup({mono(q, {2, 0}), mono(q, {1, 1})}).certificate.certified);
}

TEST(KoszulSlice, Examples) {
  const KoszulSetup s = make_koszul_setup(squares());
  const ExactMatrix k1 = koszul_slice(s, 1, 2);
  ASSERT_EQ(k1.rows(), 3u);
  ASSERT_EQ(k1.cols(), 2u);
  EXPECT_EQ(k1.column(0), (Vector{q.one(), q.zero(), q.zero()}));
  EXPECT_EQ(k1.column(1), (Vector{q.zero(), q.zero(), q.one()}));
  EXPECT_EQ(koszul_slice(s, 0, 2).rows(), 0u);

  const ExactMatrix n3 = koszul_slice(make_koszul_setup(net()), 1, 3);
  EXPECT_EQ(n3.rows(), 4u);
  EXPECT_EQ(n3.cols(), 6u);
  EXPECT_EQ(kernel_basis(n3).size(), 2u);
}

TEST(KoszulSlice, MatchesOracleAndSquaresToZero) {
  std::mt19937_64 rng(51);
  const Field k;
  for (int n = 1; n <= 2; ++n)
    for (int extra = 0; extra <= n; ++extra) {
      const auto forms = random_forms(k, n, 2, n + 1 + extra, rng);
      const KoszulSetup s = make_koszul_setup(forms);
      for (int b = 0; b <= 6; ++b)
        for (int i = 1; i <= s.m + 1; ++i) {
          EXPECT_TRUE(to_dense(koszul_slice(s, i, b)) == oracle_koszul(forms, n, 2, i, b)) << n << " " << i << " " << b;
          if (i + 1 <= s.m + 1) EXPECT_TRUE((koszul_slice(s, i, b) * koszul_slice(s, i + 1, b)).is_zero());
        }
    }
}

TEST(HomologyDim, Examples) {
  const KoszulSetup ci = make_koszul_setup(squares());
  EXPECT_EQ(homology_dim(ci, 0, 0), 1u);
  EXPECT_EQ(homology_dim(ci, 0, 1), 2u);
  EXPECT_EQ(homology_dim(ci, 0, 2), 1u);
  for (int b = 0; b <= 8; ++b) EXPECT_EQ(homology_dim(ci, 1, b), 0u);
  EXPECT_EQ(homology_dim(make_koszul_setup(net()), 1, 3), 2u);
}

TEST(HomologyDim, RegularSequencesAreExactAboveZero) {
  std::mt19937_64 rng(52);
  const Field k;
  for (int n = 1; n <= 2; ++n) {
    const auto forms = random_forms(k, n, 2, n + 1, rng);
    const KoszulSetup s = make_koszul_setup(forms);
    for (int b = 0; b <= 7; ++b)
      for (int i = 1; i <= s.m + 1; ++i) EXPECT_EQ(homology_dim(s, i, b), 0u);
  }
}

TEST(HomologyDim, MatchesOracle) {
  std::mt19937_64 rng(53);
  const Field k;
  for (int n = 1; n <= 2; ++n)
    for (int extra = 0; extra <= n; ++extra) {
      const auto forms = random_forms(k, n, 2, n + 1 + extra, rng);
      const KoszulSetup s = make_koszul_setup(forms);
      for (int b = 0; b <= 6; ++b)
        for (int i = 0; i <= s.m + 1; ++i) EXPECT_EQ(homology_dim(s, i, b), oracle_homology(forms, n, 2, i, b));
    }
}

TEST(SyzygySpace, Examples) {
  const KoszulSetup s = make_koszul_setup(net());
  const SyzygySpace s3 = syzygy_space(s, 3);
  EXPECT_EQ(s3.basis.size(), 2u);
  EXPECT_TRUE(s3.koszul_subspace.empty());
  for (const auto& t : s3.basis) EXPECT_TRUE(combination(t, s.forms).is_zero());

  const SyzygySpace s4 = syzygy_space(s, 4);
  EXPECT_EQ(s4.basis.size() - s4.koszul_subspace.size(), 1u);
  for (const auto& t : s4.koszul_subspace) EXPECT_TRUE(combination(t, s.forms).is_zero());

  const KoszulSetup ci = make_koszul_setup(squares());
  for (int b = 0; b <= 6; ++b) {
    const SyzygySpace sp = syzygy_space(ci, b);
    EXPECT_EQ(sp.basis.size(), sp.koszul_subspace.size());
  }
}

TEST(BezoutSyzygy, Examples) {
  const KoszulSetup s = make_koszul_setup(net());
  const Polynomial zero(q, 1);
  EXPECT_EQ(bezout_syzygy(s, 1, {q.one(), q.zero()}), (std::vector<Polynomial>{zero, mono(q, {1, 0}, -1), mono(q, {0, 1})}));
  EXPECT_EQ(bezout_syzygy(s, 1, {q.zero(), q.one()}), (std::vector<Polynomial>{mono(q, {0, 1}, -1), zero, mono(q, {1, 0})}));
  EXPECT_EQ(bezout_syzygy(s, 1, {q.zero(), q.zero()}), (std::vector<Polynomial>{zero, zero, zero}));
  // (x^2)* does not vanish on I_2 = S_2.
  EXPECT_THROW(bezout_syzygy(s, 0, {q.one(), q.zero(), q.zero()}), InvalidInput);
  EXPECT_THROW(bezout_syzygy(s, 1, {q.one()}), InvalidInput);
  EXPECT_THROW(bezout_syzygy(make_koszul_setup(squares()), 1, {q.one(), q.zero()}), InvalidInput);
}

TEST(BezoutSyzygy, AreSyzygiesOnRandomSetups) {
  std::mt19937_64 rng(54);
  const Field k;
  for (int n = 1; n <= 2; ++n)
    for (int d = 2; d <= 3; ++d) {
      const KoszulSetup s = make_koszul_setup(random_forms(k, n, d, n + 2, rng));
      for (int b = d; b <= d + s.rho; ++b)
        for (const auto& t : bezout_syzygies(s, b)) EXPECT_TRUE(combination(t, s.forms).is_zero());
    }
}

TEST(Apolarity, Examples) {
  const KoszulSetup ci = make_koszul_setup(squares());
  const ExactMatrix a1 = apolarity_matrix(ci, 1);
  ASSERT_EQ(a1.rows(), 2u);
  EXPECT_TRUE(a1.at(0, 1).is_one());
  EXPECT_TRUE(a1.at(1, 0).is_one());
  EXPECT_EQ(a1.nonzeros(), 2u);
  EXPECT_TRUE(is_nondegenerate_pairing(a1));
  const ExactMatrix a0 = apolarity_matrix(ci, 0);
  ASSERT_EQ(a0.rows(), 1u);
  EXPECT_TRUE(a0.at(0, 0).is_one());
  EXPECT_EQ(apolarity_matrix(ci, 3).rows(), 0u);
  EXPECT_TRUE(apolarity_check(ci).passed());

  const KoszulSetup cubes = make_koszul_setup({mono(q, {3, 0}), mono(q, {0, 3})});
  const Report r = apolarity_check(cubes);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks().size(), 10u);
  for (int a = 0; a <= 4; ++a) EXPECT_EQ(apolarity_matrix(cubes, a).rows(), std::vector<std::size_t>({1, 2, 3, 2, 1})[static_cast<std::size_t>(a)]);

  EXPECT_THROW(apolarity_matrix(make_koszul_setup(net()), 1), InvalidInput);
  const KoszulSetup bad = make_koszul_setup({mono(q, {2, 0}), mono(q, {1, 1})});
  EXPECT_THROW(apolarity_matrix(bad, 1), InvalidInput);
  EXPECT_EQ(apolarity_check(bad).status(), Status::inconclusive);
}

TEST(Apolarity, RandomRegularSequence) {
  std::mt19937_64 rng(55);
  const Field k;
  const KoszulSetup s = make_koszul_setup(random_forms(k, 2, 2, 3, rng));
  EXPECT_TRUE(apolarity_check(s).passed());
}

TEST(SyzygyDuality, Examples) {
  const KoszulSetup s = make_koszul_setup(net());
  EXPECT_TRUE(syzygy_duality_check(s, 3).passed());
  EXPECT_TRUE(syzygy_duality_check(s, 4).passed());
  // rho - a < 0: quotient dimension 0.
  EXPECT_TRUE(syzygy_duality_check(s, 6).passed());
  EXPECT_THROW(syzygy_duality_check(make_koszul_setup(squares()), 3), InvalidInput);
}

TEST(KoszulDuality, Examples) {
  const KoszulSetup ci = make_koszul_setup(squares());
  for (int a = -1; a <= ci.sigma + 1; ++a) EXPECT_TRUE(koszul_duality_check(ci, 0, a).passed());
  const KoszulSetup s = make_koszul_setup(net());
  const Report r = koszul_duality_check(s, 0, 3);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(homology_dim(s, 0, 1), 2u);
  EXPECT_EQ(homology_dim(s, 1, 3), 2u);
  EXPECT_THROW(koszul_duality_check(s, 2, 0), InvalidInput);
  EXPECT_THROW(koszul_duality_check(s, -1, 0), InvalidInput);
}

TEST(Generation, Examples) {
  EXPECT_TRUE(generation_check(make_koszul_setup(net()), 6).passed());
  // Regular pair padded with an independent form.
  const KoszulSetup padded = make_koszul_setup({mono(q, {2, 0}), mono(q, {0, 2}), mono(q, {1, 1}, 1) + mono(q, {2, 0}, 1)});
  EXPECT_TRUE(generation_check(padded, 6).passed());
  const Report vacuous = generation_check(make_koszul_setup(net()), 2);
  EXPECT_TRUE(vacuous.passed());
  EXPECT_TRUE(vacuous.checks().empty());
}

TEST(Generation, BezoutSyzygiesAreNeeded) {
  // Koszul syzygies alone miss Syz_3 of the net.
  const KoszulSetup s = make_koszul_setup(net());
  const ExactMatrix k1 = koszul_slice(s, 1, 3);
  EXPECT_LT(rank(koszul_slice(s, 2, 3)), k1.cols() - rank(k1));
}
