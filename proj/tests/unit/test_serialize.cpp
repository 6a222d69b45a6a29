#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

#include "hecke/serialize.hpp"
#include "support/oracles.hpp"

using hecke::NestedElement;
using hecke::ParseError;
using hecke::PolyZ;
using hecke::SimpleElement;
using hecke::Tower;
using testing::ElementsAre;
using testing::HasSubstr;

TEST(Serialize, Polynomials) {
  EXPECT_EQ(hecke::format_poly(hecke::q_minus_one()), "[-1,1]");
  EXPECT_EQ(hecke::format_poly(PolyZ{}), "[]");
  EXPECT_EQ(hecke::parse_poly(" [ -1 , 1 ] "), hecke::q_minus_one());
  EXPECT_EQ(hecke::parse_poly("3,0,0"), PolyZ{3});
  EXPECT_THROW(hecke::parse_poly("[1,x]"), ParseError);
  EXPECT_THROW(hecke::parse_poly("[1,2"), ParseError);
}

TEST(Serialize, Towers) {
  const Tower w({1, 2, 1, 3, 1, 3, 0, 1, 7});
  EXPECT_EQ(hecke::format_tower(w), "[1,2,1,3,1,3,0,1,7]");
  EXPECT_EQ(hecke::parse_tower("[1,2,1,3,1,3,0,1,7]"), w);
  EXPECT_EQ(hecke::format_tower(hecke::parse_tower("0,2,0")), "[0,2]");
  EXPECT_EQ(hecke::format_tower(Tower()), "[]");
  try {
    hecke::parse_tower("[1,3]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_THAT(e.what(), HasSubstr("position 2"));
  }
}

TEST(Serialize, Permutations) {
  const auto p = hecke::parse_permutation("(1,8,10,3)(2,4,6,7,5)");
  EXPECT_EQ(p.degree(), 10);
  EXPECT_EQ(hecke::format_cycles(p), "(1,8,10,3)(2,4,6,7,5)");
  EXPECT_EQ(hecke::format_images(p), "[8,4,1,6,2,7,5,10,9,3]");
  EXPECT_EQ(hecke::parse_permutation("[8,4,1,6,2,7,5,10,9,3]"), p);
  EXPECT_EQ(hecke::parse_permutation("()", 3), hecke::Permutation::identity(3));
  EXPECT_EQ(hecke::format_cycles(hecke::Permutation::identity(4)), "()");
  EXPECT_EQ(hecke::parse_permutation("[2,1]", 4).degree(), 4);
  EXPECT_THROW(hecke::parse_permutation("[1,1]"), ParseError);
  EXPECT_THROW(hecke::parse_permutation("(1,2"), ParseError);
}

TEST(Serialize, TowerDiagram) {
  EXPECT_EQ(hecke::render_tower_diagram(Tower({1, 2})),
            " . 1\n"
            " 1 2\n"
            "----\n"
            " 1 2\n");
  EXPECT_EQ(hecke::render_tower_diagram(Tower()), "(identity)\n");
  EXPECT_TRUE(hecke::diagram_column_heights("(identity)\n").empty());
}

TEST(Serialize, TowerDiagramRoundTrip) {
  for (std::uint64_t r = 0; r < 720; ++r) {
    const Tower t = hecke::unrank(r, 5);
    const auto h = hecke::diagram_column_heights(hecke::render_tower_diagram(t));
    ASSERT_EQ(Tower(h), t);
  }
  const Tower big({1, 2, 1, 3, 1, 3, 0, 1, 7, 10});
  EXPECT_THAT(hecke::diagram_column_heights(hecke::render_tower_diagram(big)),
              ElementsAre(1, 2, 1, 3, 1, 3, 0, 1, 7, 10));
}

TEST(Serialize, SimpleJson) {
  SimpleElement h(1);
  h.coeff(1) = hecke::q_minus_one();
  EXPECT_EQ(hecke::to_json(h), R"({"coeffs":[{"poly":[-1,1],"rank":1}],"m":1,"repr":"simple"})");
  EXPECT_EQ(hecke::as_simple(hecke::parse_hecke_json(hecke::to_json(h))), h);
}

TEST(Serialize, NestedJson) {
  const NestedElement u = NestedElement::unit(1);
  EXPECT_EQ(hecke::to_json(u), R"({"m":1,"repr":"nested","tree":[[1],[]]})");
  EXPECT_EQ(hecke::to_json(NestedElement::scalar(PolyZ{2})), R"({"m":0,"repr":"nested","tree":[2]})");
  std::mt19937_64 rng(1);
  const NestedElement h = hecke::simple_to_nested(hecke::oracle::random_simple(3, rng));
  EXPECT_EQ(hecke::as_nested(hecke::parse_hecke_json(hecke::to_json(h))), h);
  EXPECT_EQ(hecke::as_simple(hecke::parse_hecke_json(hecke::to_json(h))), hecke::nested_to_simple(h));
}

TEST(Serialize, BigIntegersTravelAsStrings) {
  SimpleElement h(0);
  h.coeff(0) = PolyZ::constant(hecke::Integer(1) << 70);
  const std::string text = hecke::to_json(h);
  EXPECT_THAT(text, HasSubstr("\"1180591620717411303424\""));
  EXPECT_EQ(hecke::as_simple(hecke::parse_hecke_json(text)), h);
}

TEST(Serialize, RejectsMalformedInput) {
  EXPECT_THROW(hecke::parse_hecke_json("{"), ParseError);
  EXPECT_THROW(hecke::parse_hecke_json(R"({"repr":"simple"})"), ParseError);
  EXPECT_THROW(hecke::parse_hecke_json(R"({"repr":"other","m":1})"), ParseError);
  EXPECT_THROW(hecke::parse_hecke_json(R"({"repr":"simple","m":1,"coeffs":[{"rank":2,"poly":[1]}]})"), ParseError);
  EXPECT_THROW(hecke::parse_hecke_json(R"({"repr":"nested","m":1,"tree":[[1]]})"), ParseError);
  EXPECT_THROW(hecke::parse_hecke_json(R"({"repr":"simple","m":12,"coeffs":[]})"), ParseError);
}

TEST(Serialize, FormatTerms) {
  SimpleElement h(1);
  h.coeff(0) = hecke::q_elem();
  h.coeff(1) = hecke::q_minus_one();
  EXPECT_EQ(hecke::format_terms(h), "q T[] + (q - 1) T[1]");
  EXPECT_EQ(hecke::format_terms(SimpleElement(2)), "0");
  EXPECT_EQ(hecke::format_terms(SimpleElement::unit(2)), "T[]");
  h.coeff(0) = PolyZ{0, 0, -3};
  EXPECT_EQ(hecke::format_terms(h), "-3q^2 T[] + (q - 1) T[1]");
}
