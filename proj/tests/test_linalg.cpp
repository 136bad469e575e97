#include "fusionq/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fusionq;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(LinearMap, ApplyAndCompose) {
  LinearMap a(2), b(2);
  a.add(0, 1, 1);  // a e_1 = e_0
  b.add(1, 0, 1);  // b e_0 = e_1
  EXPECT_EQ(a.apply(vec({0, 3})), vec({3, 0}));
  EXPECT_EQ((a * b).entry(0, 0), 1);
  EXPECT_EQ((a * b).entry(1, 1), 0);
  const LinearMap c = a.commutator(b);
  EXPECT_EQ(c.entry(0, 0), 1);
  EXPECT_EQ(c.entry(1, 1), -1);
  EXPECT_EQ(LinearMap::identity(2) * a, a);
  EXPECT_EQ(a.plus_scaled(a, -1), LinearMap(2));
}

TEST(LinearMap, CancellingEntriesLeaveNoTrace) {
  LinearMap a(2);
  a.add(0, 0, Rational(1, 2));
  a.add(0, 0, Rational(-1, 2));
  EXPECT_TRUE(a.column(0).empty());
  EXPECT_EQ(a, LinearMap(2));
}

TEST(Subspace, InsertReduceCoordinates) {
  Subspace s(3);
  EXPECT_TRUE(s.insert(vec({1, 2, 0})));
  EXPECT_TRUE(s.insert(vec({0, 1, 1})));
  EXPECT_FALSE(s.insert(vec({2, 5, 1})));
  EXPECT_FALSE(s.insert(vec({0, 0, 0})));
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains(vec({1, 3, 1})));
  EXPECT_FALSE(s.contains(vec({0, 0, 1})));
  const Vector v = vec({3, 7, 1});
  EXPECT_EQ(s.combine(s.coordinates(v)), v);
  EXPECT_THROW(s.coordinates(vec({0, 0, 1})), std::domain_error);
}

TEST(Subspace, RankOfRandomIntegerMatrices) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    // Rank r product of a 6xr and rxr generic matrix, checked by nullspace size.
    const std::size_t n = 6, r = 1 + rng() % 5;
    std::vector<Vector> basis(r, zero_vector(n));
    for (auto& b : basis)
      for (auto& x : b) x = static_cast<long>(rng() % 7) - 3;
    std::vector<Vector> rows;
    for (int i = 0; i < 8; ++i) {
      Vector v = zero_vector(n);
      for (const auto& b : basis) {
        const Rational c = static_cast<long>(rng() % 5) - 2;
        for (std::size_t j = 0; j < n; ++j) v[j] += c * b[j];
      }
      rows.push_back(v);
    }
    const std::size_t rk = rank(rows, n);
    EXPECT_LE(rk, r);
    const auto null = nullspace(rows, n);
    EXPECT_EQ(null.size(), n - rk);
    for (const auto& x : null)
      for (const auto& row : rows) {
        Rational dot = 0;
        for (std::size_t j = 0; j < n; ++j) dot += row[j] * x[j];
        EXPECT_EQ(dot, 0);
      }
  }
}

TEST(Vectors, Helpers) {
  EXPECT_TRUE(is_zero(zero_vector(4)));
  EXPECT_FALSE(is_zero(unit_vector(4, 2)));
  EXPECT_EQ(unit_vector(3, 1), vec({0, 1, 0}));
  EXPECT_EQ(nullspace({}, 2).size(), 2u);
}
