#include "crystalkit/d4.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace crystalkit {

namespace {

using Delta = std::array<int, 6>;

// Branch step tables for the 0-operators, one row per case, in scaled units
// (a 1/3 step is 1, a 2/3 step is 2). Coordinate order (x1,x2,x3,xb3,xb2,xb1).
constexpr Delta kHatE0[6] = {
    {-1, 0, 0, 0, 0, 0},  {0, 0, -1, -1, 0, +1}, {0, 0, -2, 0, +1, 0},
    {0, -1, 0, +2, 0, 0}, {-1, 0, +1, +1, 0, 0}, {0, 0, 0, 0, 0, +1},
};
constexpr Delta kHatF0[6] = {
    {+1, 0, 0, 0, 0, 0},  {0, 0, +1, +1, 0, -1}, {0, 0, +2, 0, -1, 0},
    {0, +1, 0, -2, 0, 0}, {+1, 0, -1, -1, 0, 0}, {0, 0, 0, 0, 0, -1},
};

int pos(int v) { return std::max(v, 0); }

Element apply_delta(const Element& b, const Delta& d) {
  Element r = b;
  for (int j = 0; j < 6; ++j) r.x[j] += d[j];
  return r;
}

Delta hat_e_delta(int i, const ZVector& z) {
  switch (i) {
    case 0:
      return kHatE0[classify_e(z) - 1];
    case 1:
      if (z.z2 >= pos(-z.z3)) return {0, 0, 0, 0, +1, -1};
      if (z.z2 < 0 && 0 <= z.z3) return {0, 0, +1, -1, 0, 0};
      assert(pos(z.z2) < -z.z3);
      return {+1, -1, 0, 0, 0, 0};
    case 2:
      if (z.z4 >= 0) return {0, 0, 0, +2, -1, 0};
      return {0, +1, -2, 0, 0, 0};
  }
  throw std::invalid_argument("operator index must be 0..2");
}

Delta hat_f_delta(int i, const ZVector& z) {
  switch (i) {
    case 0:
      return kHatF0[classify_f(z) - 1];
    case 1:
      if (pos(z.z2) <= -z.z3) return {-1, +1, 0, 0, 0, 0};
      if (z.z2 <= 0 && 0 < z.z3) return {0, 0, -1, +1, 0, 0};
      assert(z.z2 > pos(-z.z3));
      return {0, 0, 0, 0, -1, +1};
    case 2:
      if (z.z4 <= 0) return {0, -1, +2, 0, 0, 0};
      return {0, 0, 0, -2, +1, 0};
  }
  throw std::invalid_argument("operator index must be 0..2");
}

}  // namespace

std::optional<Element> hat_e(int i, const Element& b, int level) {
  const Element r = apply_delta(b, hat_e_delta(i, z_vector(b)));
  if (!in_hat_crystal(r, level)) return std::nullopt;
  return r;
}

std::optional<Element> hat_f(int i, const Element& b, int level) {
  const Element r = apply_delta(b, hat_f_delta(i, z_vector(b)));
  if (!in_hat_crystal(r, level)) return std::nullopt;
  return r;
}

int hat_eps(int i, const Element& b, int level) {
  switch (i) {
    case 0: {
      const ZVector z = z_vector(b);
      const int corr = 2 * z.z1 + z.z2 + z.z3 + 3 * z.z4;
      return level - s_scaled(b) + a_vector(z).max() - corr;
    }
    case 1:
      return b.xb1() + pos(b.xb3() - b.xb2() + pos(b.x2() - b.x3()));
    case 2:
      return b.xb2() + pos(b.x3() - b.xb3()) / 2;
  }
  throw std::invalid_argument("operator index must be 0..2");
}

int hat_phi(int i, const Element& b, int level) {
  switch (i) {
    case 0:
      return level - s_scaled(b) + a_vector(z_vector(b)).max();
    case 1:
      return b.x1() + pos(b.x3() - b.x2() + pos(b.xb2() - b.xb3()));
    case 2:
      return b.x2() + pos(b.xb3() - b.x3()) / 2;
  }
  throw std::invalid_argument("operator index must be 0..2");
}

}  // namespace crystalkit
