#include "fusionq/io.hpp"

#include <gtest/gtest.h>

using namespace fusionq;
using nlohmann::json;

TEST(Json, QPolyRoundTrip) {
  const QPoly p{0, 1, -2};
  const json j = qpoly_to_json(p);
  EXPECT_EQ(j.dump(), R"({"coeffs":["0","1","-2"]})");
  EXPECT_EQ(qpoly_from_json(j), p);
  EXPECT_EQ(qpoly_from_json(json::parse(R"({"coeffs":[0,1]})")), (QPoly{0, 1}));
  EXPECT_EQ(qpoly_to_json(QPoly()).dump(), R"({"coeffs":[]})");
  const QPoly big(std::vector<BigInt>{BigInt("123456789012345678901234567890")});
  EXPECT_EQ(qpoly_from_json(qpoly_to_json(big)), big);
  EXPECT_THROW(qpoly_from_json(json::parse(R"({"coeffs":[1.5]})")), std::invalid_argument);
  EXPECT_THROW(qpoly_from_json(json::parse(R"({"coeffs":["x"]})")), std::invalid_argument);
  EXPECT_THROW(qpoly_from_json(json::parse("[1]")), std::invalid_argument);
}

TEST(Json, IdealRoundTrip) {
  const auto I = ComponentwiseIdeal::highest_type();
  const json j = ideal_to_json(I);
  EXPECT_EQ(j.dump(), R"({"p_e":["1"],"p_f":["0","1"],"p_h":["0","1"]})");
  EXPECT_EQ(ideal_from_json(j), I);
  EXPECT_EQ(ideal_from_json(json::parse(R"({"p_e":[0,0,1],"p_h":[0,0,1],"p_f":["0","0","1"]})")),
            ComponentwiseIdeal::b_ideal(2));
  EXPECT_THROW(ideal_from_json(json::parse(R"({"p_e":[1],"p_h":[0,0,1]})")), std::invalid_argument);
  EXPECT_THROW(ideal_from_json(json::parse(R"({"p_e":[1],"p_h":[0,0,1],"p_f":[1]})")), std::invalid_argument);
}

TEST(Json, Character) {
  GradedCharacter ch;
  ch.add(1, 0, 1);
  ch.add(0, 2, 1);
  EXPECT_EQ(character_to_json(ch).dump(),
            R"({"entries":[{"degree":0,"dim":1,"weight":2},{"degree":1,"dim":1,"weight":0}]})");
}

TEST(Lists, Parsing) {
  EXPECT_EQ(parse_int_list("2,0,1"), (std::vector<int>{2, 0, 1}));
  EXPECT_TRUE(parse_int_list("").empty());
  EXPECT_THROW(parse_int_list("1,,2"), std::invalid_argument);
  EXPECT_THROW(parse_int_list("1,a"), std::invalid_argument);
  EXPECT_EQ(parse_rational_list("0,-1/2,3"), (std::vector<Rational>{0, Rational(-1, 2), 3}));
  EXPECT_THROW(parse_rational_list("1/0"), std::invalid_argument);
}
