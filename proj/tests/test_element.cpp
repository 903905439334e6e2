#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "crystalkit/element.hpp"
#include "crystalkit/graph.hpp"

using namespace crystalkit;

namespace {

Element el(int x1, int x2, int x3, int xb3, int xb2, int xb1) {
  return Element{{x1, x2, x3, xb3, xb2, xb1}};
}

}  // namespace

TEST_CASE("s_scaled on reference elements") {
  CHECK(s_scaled(el(0, 0, 0, 0, 0, 0)) == 0);
  CHECK(s_scaled(el(0, 1, 1, 3, 0, 0)) == 3);   // (0,1/3,1/3,1,0,0)
  CHECK(s_scaled(el(3, 0, 0, 0, 0, 3)) == 6);   // (1,0,0,0,0,1)
}

TEST_CASE("z_vector on reference elements") {
  CHECK(z_vector(el(0, 0, 0, 0, 0, 0)) == ZVector{0, 0, 0, 0});
  CHECK(z_vector(el(0, 0, 0, 4, 1, 0)) == ZVector{0, -3, 0, 2});  // box 9
  CHECK(z_vector(el(0, 0, 0, 0, 0, 3)) == ZVector{3, 0, 0, 0});   // box 12
}

TEST_CASE("a_vector values and maxima") {
  CHECK(a_vector(ZVector{0, 0, 0, 0}).a == std::array<int, 6>{0, 0, 0, 0, 0, 0});

  const AVector a1 = a_vector(ZVector{3, 0, 0, 0});
  CHECK(a1.a == std::array<int, 6>{0, 3, 3, 3, 3, 6});
  CHECK(a1.max() == 6);

  const AVector a2 = a_vector(ZVector{0, -3, 0, 2});
  CHECK(a2.a == std::array<int, 6>{0, 0, -3, 3, 3, 3});
  CHECK(a2.max() == 3);
}

TEST_CASE("a_vector is linear in z") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int trial = 0; trial < 500; ++trial) {
    const ZVector u{d(rng), d(rng), d(rng), d(rng)};
    const ZVector v{d(rng), d(rng), d(rng), d(rng)};
    const ZVector sum{u.z1 + v.z1, u.z2 + v.z2, u.z3 + v.z3, u.z4 + v.z4};
    const AVector au = a_vector(u), av = a_vector(v), as = a_vector(sum);
    for (int j = 0; j < 6; ++j) CHECK(as.a[j] == au.a[j] + av.a[j]);
  }
}

TEST_CASE("lowering case selection") {
  CHECK(classify_f(ZVector{0, 0, 0, 0}) == 1);
  CHECK(classify_f(ZVector{3, 0, 0, 0}) == 6);
  CHECK(classify_f(ZVector{0, -3, 0, 2}) == 4);
}

TEST_CASE("raising case selection uses the strictness flip") {
  // At the origin every strict inequality fails, so the all-nonstrict case
  // (the sixth) is the one that holds.
  CHECK(classify_e(ZVector{0, 0, 0, 0}) == 6);
  CHECK(classify_e(ZVector{3, 0, 0, 0}) == 6);
  CHECK(classify_e(ZVector{0, 0, 0, -1}) == 3);
  CHECK(classify_e(ZVector{-3, 0, 0, 0}) == 1);
}

TEST_CASE("case lists are disjoint and exhaustive on a grid") {
  for (int z1 = -9; z1 <= 9; ++z1)
    for (int z2 = -9; z2 <= 9; ++z2)
      for (int z3 = -9; z3 <= 9; ++z3)
        for (int z4 = -9; z4 <= 9; ++z4) {
          const ZVector z{z1, z2, z3, z4};
          int f_matches = 0, e_matches = 0;
          for (int k = 1; k <= 6; ++k) {
            f_matches += f_case_holds(k, z);
            e_matches += e_case_holds(k, z);
          }
          REQUIRE(f_matches == 1);
          REQUIRE(e_matches == 1);
        }
}

TEST_CASE("hat crystal membership") {
  CHECK(in_hat_crystal(el(0, 0, 0, 0, 0, 0), 1));
  CHECK(in_hat_crystal(el(1, 0, 0, 0, 0, 0), 1));
  CHECK_FALSE(in_hat_crystal(el(1, 1, 0, 0, 0, 0), 1));
  CHECK(in_hat_crystal(el(3, 0, 0, 0, 0, 3), 6));
  // parity violation
  CHECK_FALSE(in_hat_crystal(el(0, 0, 1, 0, 0, 0), 3));
}

TEST_CASE("V membership adds the integrality congruences") {
  CHECK(in_v(el(0, 0, 0, 0, 0, 0), 1));
  CHECK(in_v(el(0, 1, 1, 3, 0, 0), 1));        // box 5
  CHECK_FALSE(in_v(el(0, 0, 1, 3, 0, 0), 1));  // x2 - x3 = -1/3
}

TEST_CASE("V invariants: s and A entries are whole, z1..z3 divisible by 3") {
  for (int level = 1; level <= 2; ++level) {
    for (const Element& b : enumerate_elements(CrystalParams{Kind::G2, level})) {
      const int s = s_scaled(b);
      CHECK(s % 3 == 0);
      CHECK(s / 3 <= level);
      const ZVector z = z_vector(b);
      CHECK(z.z1 % 3 == 0);
      CHECK(z.z2 % 3 == 0);
      CHECK(z.z3 % 3 == 0);
      for (int entry : a_vector(z).a) CHECK(entry % 3 == 0);
    }
  }
}

TEST_CASE("fraction rendering") {
  CHECK(fraction_text(0) == "0");
  CHECK(fraction_text(1) == "1/3");
  CHECK(fraction_text(2) == "2/3");
  CHECK(fraction_text(3) == "1");
  CHECK(fraction_text(4) == "4/3");
  CHECK(fraction_text(10) == "10/3");
  CHECK(fraction_text(-4) == "-4/3");
  CHECK(fraction_text(-6) == "-2");
}

TEST_CASE("element text codec round trips") {
  const Element b = el(0, 1, 1, 3, 0, 0);
  CHECK(to_text(b) == "(0,1/3,1/3,1,0,0)");
  CHECK(parse_element(to_text(b)) == b);
  CHECK(parse_element("(1,0,0,0,0,0)") == el(3, 0, 0, 0, 0, 0));
  CHECK(parse_element("(0,2/3,8/3,0,0,0)") == el(0, 2, 8, 0, 0, 0));

  CHECK_THROWS_AS(parse_element("(1,2,3)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("1,0,0,0,0,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("(1,0,0,0,0,x)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("(1/2,0,0,0,0,0)"), std::invalid_argument);
}

TEST_CASE("canonical order is lexicographic on the coordinates") {
  CHECK(el(0, 0, 0, 0, 0, 1) < el(0, 0, 0, 0, 1, 0));
  CHECK(el(0, 1, 0, 0, 0, 0) < el(1, 0, 0, 0, 0, 0));
  const auto nodes = enumerate_elements(CrystalParams{Kind::G2, 1});
  CHECK(std::is_sorted(nodes.begin(), nodes.end()));
  CHECK(std::set<Element>(nodes.begin(), nodes.end()).size() == nodes.size());
}

TEST_CASE("the two Cartan matrices are related by the root rescaling") {
  // <h~_i, a~_j> = (m_j / m_i) <h_i, a_j>, cleared of denominators.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(kCartanG2[i][j] * kSimilarityPower[i] ==
            kCartanHatD4[i][j] * kSimilarityPower[j]);
}

TEST_CASE("level pairing uses the comarks") {
  CHECK(level_of(Weight{1, 0, 0}) == 1);
  CHECK(level_of(Weight{0, 1, 0}) == 2);
  CHECK(level_of(Weight{1, 2, 3}) == 8);
}
