#include "fusionq/sl2.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace fusionq;

TEST(Sl2Module, IrrepBrackets) {
  for (int l = 0; l <= 10; ++l) {
    const auto V = Sl2Module::irrep(l);
    EXPECT_EQ(V.dim, static_cast<std::size_t>(l + 1));
    EXPECT_TRUE(V.brackets_hold());
    EXPECT_EQ(V.max_weight(), l);
    EXPECT_EQ(V.h.commutator(V.e), LinearMap(V.dim).plus_scaled(V.e, 2));
    EXPECT_EQ(V.e.commutator(V.f), V.h);
  }
}

TEST(Sl2Module, CompositeModules) {
  const auto T = Sl2Module::truncated_sum(3);
  EXPECT_EQ(T.dim, 1u + 2 + 3 + 4);
  EXPECT_TRUE(T.brackets_hold());
  const auto M = Sl2Module::matrix_module(2);
  EXPECT_EQ(M.dim, 1u + 4 + 9);
  EXPECT_TRUE(M.brackets_hold());
  EXPECT_EQ(M.max_weight(), 2);
}

TEST(CyclicFactor, Cyclicity) {
  EXPECT_TRUE(CyclicModuleFactor::irrep(3, 0).is_cyclic());
  EXPECT_TRUE(CyclicModuleFactor::truncated_sum(2, 1).is_cyclic());
  EXPECT_TRUE(CyclicModuleFactor::matrix_module(2, 1).is_cyclic());
  auto lowest = CyclicModuleFactor::irrep(2, 0);
  lowest.cyclic_vector = unit_vector(3, 2);
  EXPECT_TRUE(lowest.is_cyclic());
  auto broken = CyclicModuleFactor::truncated_sum(1, 0);
  broken.cyclic_vector = unit_vector(broken.module.dim, 0);
  EXPECT_FALSE(broken.is_cyclic());
  EXPECT_EQ(broken.generated_dimension(), 1u);
}

TEST(Points, DeterministicDistinctDraws) {
  EXPECT_EQ(draw_points(5, 1), draw_points(5, 1));
  const auto z = draw_points(point_pool().size(), 99);
  std::set<std::string> seen;
  for (const auto& x : z) seen.insert(format_rational(x));
  EXPECT_EQ(seen.size(), point_pool().size());
  EXPECT_THROW(draw_points(point_pool().size() + 1, 0), std::invalid_argument);
  EXPECT_TRUE(draw_points(0, 5).empty());
}

TEST(Points, RationalParsing) {
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("4/2"), Rational(2));
  EXPECT_EQ(format_rational(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(format_rational(Rational(7)), "7");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}
