#include <doctest.h>

#include <stdexcept>

#include "crystalkit/d4.hpp"
#include "crystalkit/g2.hpp"
#include "crystalkit/graph.hpp"
#include "crystalkit/perfect.hpp"
#include "crystalkit/verify.hpp"

using namespace crystalkit;

namespace {

// Named rows of the level-1 reference table used across these tests.
const Element kPhiStar = parse_element("(0,0,0,0,0,0)");
const Element kBox1 = parse_element("(1,0,0,0,0,0)");
const Element kBox2 = parse_element("(0,1,0,0,0,0)");
const Element kBox3 = parse_element("(0,2/3,2/3,0,0,0)");
const Element kBox4 = parse_element("(0,1/3,4/3,0,0,0)");
const Element kBox9 = parse_element("(0,0,0,4/3,1/3,0)");
const Element kBox12 = parse_element("(0,0,0,0,0,1)");
const Element kBox13 = parse_element("(0,0,2,0,0,0)");

}  // namespace

TEST_CASE("f_0 generic branches") {
  CHECK(g2_f(0, kPhiStar, 1) == kBox1);   // case 1
  CHECK(g2_f(0, kBox12, 1) == kPhiStar);  // case 6
}

TEST_CASE("f_0 fractional-z4 branch at z4 = 2/3") {
  CHECK(z_vector(kBox9) == ZVector{0, -3, 0, 2});
  CHECK(g2_f(0, kBox9, 1) == kBox3);
}

TEST_CASE("f_0 on V is three hat steps") {
  // z4 = 2/3 start: the intermediate hat elements sit in case 4 twice, then
  // case 3, inside the hat crystal of level 3.
  const Element step1 = *hat_f(0, kBox9, 3);
  CHECK(step1 == Element{{0, 1, 0, 2, 1, 0}});
  CHECK(classify_f(z_vector(step1)) == 4);
  const Element step2 = *hat_f(0, step1, 3);
  CHECK(step2 == Element{{0, 2, 0, 0, 1, 0}});
  CHECK(classify_f(z_vector(step2)) == 3);
  CHECK(*hat_f(0, step2, 3) == kBox3);
}

TEST_CASE("e_0 fractional-z4 branch inverts it") {
  CHECK(g2_e(0, kBox3, 1) == kBox9);
}

TEST_CASE("f_0 fractional-z4 branch at z4 = 1/3") {
  const Element box10 = parse_element("(0,0,0,2/3,2/3,0)");
  CHECK(z_vector(box10) == ZVector{0, 0, 0, 1});
  CHECK(g2_f(0, box10, 1) == kBox4);
  // the way back sits in the raising case with z4 = -2/3
  CHECK(z_vector(kBox4) == ZVector{0, 0, 3, -2});
  CHECK(g2_e(0, kBox4, 1) == box10);
}

TEST_CASE("index 1 and 2 steps along the reference chain") {
  CHECK(g2_f(1, kBox1, 1) == kBox2);
  CHECK(g2_e(1, kBox2, 1) == kBox1);
  CHECK(g2_f(2, kBox2, 1) == kBox3);
  CHECK(g2_f(2, kBox3, 1) == kBox4);
  CHECK(g2_f(2, kBox4, 1) == kBox13);
  CHECK(g2_f(2, kBox13, 1) == std::nullopt);
  CHECK(g2_e(2, kPhiStar, 1) == std::nullopt);
}

TEST_CASE("statistics on reference elements") {
  CHECK(g2_phi(0, kPhiStar, 1) == 1);
  CHECK(g2_eps(0, kPhiStar, 1) == 1);  // eps = phi on minimal elements
  CHECK(g2_phi(2, kBox2, 1) == 3);     // the chain 2 -> 3 -> 4 -> 13
  CHECK(g2_eps(2, kBox2, 1) == 0);
  CHECK(g2_eps(0, kBox12, 1) == 0);
  CHECK(g2_phi(0, kBox12, 1) == 2);
}

TEST_CASE("weights pair to zero against the comarks") {
  CHECK(g2_weight(kPhiStar, 1) == Weight{0, 0, 0});
  CHECK(g2_weight(kBox1, 1) == Weight{-2, 1, 0});
  for (int level = 1; level <= 2; ++level) {
    for (const Element& b : enumerate_elements(CrystalParams{Kind::G2, level})) {
      CHECK(level_of(g2_weight(b, level)) == 0);
    }
  }
}

TEST_CASE("operators stay inside V or die") {
  for (int level = 1; level <= 2; ++level) {
    for (const Element& b : enumerate_elements(CrystalParams{Kind::G2, level})) {
      for (int i = 0; i < 3; ++i) {
        if (const auto fb = g2_f(i, b, level)) CHECK(in_v(*fb, level));
        if (const auto eb = g2_e(i, b, level)) CHECK(in_v(*eb, level));
      }
    }
  }
}

TEST_CASE("statistics divisions are exact across V") {
  for (int level = 1; level <= 3; ++level) {
    for (const Element& b : enumerate_elements(CrystalParams{Kind::G2, level})) {
      for (int i = 0; i < 3; ++i) {
        CHECK_NOTHROW(g2_eps(i, b, level));
        CHECK_NOTHROW(g2_phi(i, b, level));
        CHECK(g2_eps(i, b, level) >= 0);
        CHECK(g2_phi(i, b, level) >= 0);
      }
    }
  }
}

TEST_CASE("similarity holds pointwise and in sweeps") {
  CHECK(similarity_check(0, kBox9, 1));
  CHECK(similarity_check(2, kBox2, 1));  // power 1: same function
  for (int level = 1; level <= 2; ++level) {
    const VerifyReport report = verify_similarity(level);
    INFO(report.to_text());
    CHECK(report.pass());
  }
}

TEST_CASE("G2 crystal axioms hold for levels 1..3") {
  for (int level = 1; level <= 3; ++level) {
    const VerifyReport report = verify_axioms(CrystalParams{Kind::G2, level});
    INFO(report.to_text());
    CHECK(report.pass());
  }
}

TEST_CASE("level pairing of phi is level plus the psi gap") {
  for (int level = 1; level <= 2; ++level) {
    for (const Element& b : enumerate_elements(CrystalParams{Kind::G2, level})) {
      const Weight phi{g2_phi(0, b, level), g2_phi(1, b, level), g2_phi(2, b, level)};
      CHECK(3 * (level_of(phi) - level) == psi_scaled(z_vector(b)));
    }
  }
}
