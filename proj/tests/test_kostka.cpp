#include "fusionq/kostka.hpp"

#include "fusionq/verify.hpp"
#include "fusionq/verlinde.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace fusionq;

namespace {
using M = std::vector<int>;
}

TEST(Norms, SizeAndNorm) {
  EXPECT_EQ(multiplicity_size(M{2, 0, 1}), 5);
  EXPECT_EQ(multiplicity_norm(M{2}), 1);
  EXPECT_EQ(multiplicity_norm(M{3}), 3);
  EXPECT_EQ(multiplicity_norm(M{0, 2}), 2);
  EXPECT_EQ(multiplicity_norm(M{2, 2}), 7);
  EXPECT_EQ(multiplicity_norm(M{}), 0);
  // ||m|| = n(R(m)) = sum (i-1) lambda_i.
  EXPECT_EQ(multiplicity_norm(M{1, 1, 1}), 0 * 3 + 1 * 2 + 2 * 1);
  const FermionicInput in{2, 0, {0, 2}};
  EXPECT_EQ(in.size(), 4);
  EXPECT_EQ(in.norm(), 2);
}

TEST(Fermionic, Constants) {
  const auto c = FermionicConstants::make(3, 1);
  ASSERT_EQ(c.A.size(), 3u);
  EXPECT_EQ(c.A[1][2], 2);
  EXPECT_EQ(c.A[2][0], 1);
  EXPECT_EQ(c.v, (std::vector<std::int64_t>{0, 0, 1}));
}

TEST(RestrictedKostka, Examples) {
  EXPECT_EQ(restricted_kostka(1, 0, M{2}), (QPoly{0, 1}));
  EXPECT_EQ(restricted_kostka(2, 2, M{0, 1}), (QPoly{1}));
  EXPECT_EQ(restricted_kostka(2, 0, M{0, 2}), (QPoly{0, 0, 1}));
  EXPECT_EQ(restricted_kostka(1, 1, M{3}), (QPoly{0, 0, 1}));
  EXPECT_EQ(restricted_kostka(FermionicInput{1, 1, {3}}), (QPoly{0, 0, 1}));
}

TEST(RestrictedKostka, ParityAndRangeGiveZero) {
  EXPECT_TRUE(restricted_kostka(1, 1, M{2}).is_zero());
  EXPECT_TRUE(restricted_kostka(3, 3, M{1, 0, 0}).is_zero());
  EXPECT_EQ(restricted_kostka(2, 0, M{0, 0}), (QPoly{1}));
}

TEST(RestrictedKostka, Errors) {
  EXPECT_THROW(restricted_kostka(0, 0, M{}), std::invalid_argument);
  EXPECT_THROW(restricted_kostka(1, 2, M{2}), std::invalid_argument);
  EXPECT_THROW(restricted_kostka(2, 0, M{2}), std::invalid_argument);
  EXPECT_THROW(restricted_kostka(1, -1, M{2}), std::invalid_argument);
}

TEST(RestrictedKostka, LevelOneIsOneMonomial) {
  for (int N = 0; N <= 10; ++N)
    for (int l = 0; l <= 1; ++l) {
      const QPoly K = restricted_kostka(1, l, M{N});
      if ((N - l) % 2 != 0) {
        EXPECT_TRUE(K.is_zero());
      } else {
        EXPECT_EQ(K.eval_at_one(), 1);
        EXPECT_EQ(K, QPoly::monomial(1, K.degree()));
      }
    }
}

TEST(UnrestrictedKostka, Examples) {
  EXPECT_EQ(unrestricted_kostka(1, M{3}), (QPoly{0, 1, 1}));
  EXPECT_EQ(unrestricted_kostka(0, M{2}), (QPoly{0, 1}));
  EXPECT_TRUE(unrestricted_kostka(9, M{1}).is_zero());
  for (const auto& m : partition_grid(7)) EXPECT_EQ(unrestricted_kostka(static_cast<int>(multiplicity_size(m)), m), (QPoly{1}));
}

TEST(UnrestrictedKostka, AllOnesMatchesGaussianDifference) {
  for (int N = 0; N <= 12; ++N)
    for (int l = 0; l <= N + 1; ++l) EXPECT_EQ(unrestricted_kostka(l, M{N}), oracle::kostka_all_ones(l, N)) << N << "," << l;
}

TEST(UnrestrictedKostka, DegreeBoundAndPositivity) {
  for (const auto& m : partition_grid(8))
    for (int l = 0; l <= multiplicity_size(m); ++l) {
      const QPoly K = unrestricted_kostka(l, m);
      EXPECT_LE(K.degree(), multiplicity_norm(m));
      EXPECT_TRUE(K.nonnegative());
    }
}

TEST(UnrestrictedKostka, StableUnderPadding) {
  for (int K = 3; K <= 6; ++K) {
    EXPECT_EQ(restricted_kostka(K, 1, pad_multiplicities(M{3}, static_cast<std::size_t>(K))), (QPoly{0, 1, 1}));
  }
  EXPECT_EQ(pad_multiplicities(M{1, 2}, 4), (M{1, 2, 0, 0}));
  EXPECT_EQ(stable_level(1, M{3}), 3);
  EXPECT_EQ(stable_level(0, M{}), 1);
}

TEST(AlternatingSum, Examples) {
  EXPECT_EQ(alternating_sum(1, 1, M{3}), (QPoly{0, 0, 1}));
  EXPECT_EQ(alternating_sum(1, 0, M{2}), (QPoly{0, 1}));
  EXPECT_TRUE(alternating_sum(2, 1, M{2, 0}).is_zero());
  EXPECT_TRUE(fermionic_equals_alternating(1, 0, M{2}));
  EXPECT_TRUE(fermionic_equals_alternating(1, 1, M{3}));
  EXPECT_TRUE(fermionic_equals_alternating(2, 0, M{0, 2}));
}

TEST(AlternatingSum, AgreesWithFermionicSum) {
  for (int k = 1; k <= 3; ++k)
    for (const auto& m : multiplicity_grid(k, 8))
      for (int l = 0; l <= k; ++l) EXPECT_TRUE(fermionic_equals_alternating(k, l, m));
}

TEST(Supernomial, Examples) {
  EXPECT_EQ(supernomial(0, M{2}), (QPoly{1, 1}));
  EXPECT_EQ(supernomial(1, M{3}), (QPoly{1, 1, 1}));
  EXPECT_EQ(supernomial(4, M{0, 2}), (QPoly{1}));
  for (int N = 0; N <= 10; ++N)
    for (int l = N % 2; l <= N; l += 2) EXPECT_EQ(supernomial(l, M{N}), oracle::gaussian(N, (N - l) / 2));
}

TEST(Supernomial, WeylRelation) {
  for (const auto& m : partition_grid(8))
    for (int l = 0; l <= multiplicity_size(m); ++l)
      EXPECT_EQ(supernomial(l, m) - supernomial(l + 2, m), unrestricted_kostka(l, m));
}

TEST(RestrictedKostka, SpecializesToVerlindeNumbers) {
  for (int k = 1; k <= 3; ++k)
    for (const auto& m : multiplicity_grid(k, 8))
      for (int l = 0; l <= k; ++l) {
        const QPoly K = restricted_kostka(k, l, m);
        EXPECT_TRUE(K.nonnegative());
        EXPECT_EQ(K.eval_at_one(), fusion_coefficient(k, word_from_multiplicities(m), l));
        EXPECT_TRUE(unrestricted_kostka(l, m).dominates(K));
      }
}
