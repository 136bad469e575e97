#include "fusionq/qseries.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fusionq;

namespace {

QPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(-1, 6), c(-5, 5);
  std::vector<BigInt> v;
  for (int i = 0, d = deg(rng); i <= d; ++i) v.emplace_back(c(rng));
  return QPoly(std::move(v));
}

BigInt binomial(int m, int n) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
  return r;
}

}  // namespace

TEST(QPoly, CanonicalForm) {
  EXPECT_TRUE(QPoly().is_zero());
  EXPECT_EQ(QPoly().degree(), -1);
  EXPECT_TRUE((QPoly{0, 0, 0}).is_zero());
  EXPECT_EQ((QPoly{1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ((QPoly{1, 2, 0, 0}), (QPoly{1, 2}));
  const QPoly p{1, 1};
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_TRUE((p - p).coeffs().empty());
  EXPECT_EQ(QPoly::monomial(0, 5), QPoly());
}

TEST(QPoly, Arithmetic) {
  const QPoly a{1, 1}, b{0, 1};
  EXPECT_EQ(a * a, (QPoly{1, 2, 1}));
  EXPECT_EQ(a + b, (QPoly{1, 2}));
  EXPECT_EQ(a * BigInt(3), (QPoly{3, 3}));
  EXPECT_EQ(a.shifted(2), (QPoly{0, 0, 1, 1}));
  EXPECT_EQ((QPoly{1, 1, 2}).eval_at_one(), 4);
  EXPECT_EQ(a.coeff(7), 0);
  EXPECT_EQ(a.coeff(-1), 0);
}

TEST(QPoly, Reversal) {
  EXPECT_EQ((QPoly{1, 1}).reversed(1), (QPoly{1, 1}));
  EXPECT_EQ((QPoly{0, 1}).reversed(3), (QPoly{0, 0, 1}));
  EXPECT_EQ(QPoly().reversed(2), QPoly());
  EXPECT_THROW((QPoly{0, 0, 1}).reversed(1), std::domain_error);
}

TEST(QPoly, Formatting) {
  EXPECT_EQ(QPoly().to_string(), "0");
  EXPECT_EQ((QPoly{1, 1, 2}).to_string(), "1 + q + 2q^2");
  EXPECT_EQ((QPoly{0, -1, 0, 3}).to_string(), "-q + 3q^3");
}

TEST(QPoly, Ordering) {
  EXPECT_TRUE((QPoly{1, 2}).dominates(QPoly{1, 1}));
  EXPECT_FALSE((QPoly{1}).dominates(QPoly{1, 1}));
  EXPECT_TRUE((QPoly{0, 3}).nonnegative());
  EXPECT_FALSE((QPoly{1, -1}).nonnegative());
}

TEST(QPoly, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const QPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * QPoly::constant(1), a);
    EXPECT_TRUE((a * QPoly()).is_zero());
    EXPECT_EQ((a * b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
  }
}

TEST(QBinom, SmallValues) {
  EXPECT_EQ(qbinom(2, 1), (QPoly{1, 1}));
  EXPECT_EQ(qbinom(5, 0), (QPoly{1}));
  EXPECT_EQ(qbinom(4, 2), (QPoly{1, 1, 2, 1, 1}));
  EXPECT_TRUE(qbinom(0, 1).is_zero());
  EXPECT_TRUE(qbinom(-1, 0).is_zero());
  EXPECT_TRUE(qbinom(3, -1).is_zero());
  EXPECT_EQ(qbinom(0, 0), (QPoly{1}));
}

TEST(QBinom, MatchesProductFormula) {
  for (int m = 0; m <= 18; ++m)
    for (int n = 0; n <= m; ++n) EXPECT_EQ(qbinom(m, n), oracle::gaussian(m, n)) << m << "," << n;
}

TEST(QBinom, SymmetryPascalAndSpecialization) {
  for (int m = 0; m <= 20; ++m)
    for (int n = 0; n <= m; ++n) {
      EXPECT_EQ(qbinom(m, n), qbinom(m, m - n));
      if (m > 0) {
        EXPECT_EQ(qbinom(m, n), qbinom(m - 1, n - 1) + qbinom(m - 1, n).shifted(n));
      }
      EXPECT_EQ(qbinom(m, n).eval_at_one(), binomial(m, n));
      EXPECT_EQ(qbinom(m, n).degree(), n * (m - n));
    }
}

TEST(QBinom, Vector) {
  const std::vector<std::int64_t> t{2, 2}, b{1, 1};
  EXPECT_EQ(vector_qbinom(t, b), qbinom(2, 1) * qbinom(2, 1));
  const std::vector<std::int64_t> t1{6}, b0{0};
  EXPECT_EQ(vector_qbinom(t1, b0), (QPoly{1}));
  const std::vector<std::int64_t> t2{1, 0}, b2{1, 1};
  EXPECT_TRUE(vector_qbinom(t2, b2).is_zero());
  const std::vector<std::int64_t> shortv{1};
  EXPECT_THROW(vector_qbinom(t, shortv), std::invalid_argument);
}
