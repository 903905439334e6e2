#include "crystalkit/g2.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "crystalkit/d4.hpp"

namespace crystalkit {

namespace {

using Delta = std::array<int, 6>;

int pos(int v) { return std::max(v, 0); }

std::array<int, 6> apply_delta(const std::array<int, 6>& x, const Delta& d) {
  std::array<int, 6> r = x;
  for (int j = 0; j < 6; ++j) r[j] += d[j];
  return r;
}

// The generic 0-operator steps are the hat steps tripled; case 4 of f (and
// case 3 of e) splits three ways on the scaled z4 value.
Delta g2_f0_delta(const ZVector& z) {
  switch (classify_f(z)) {
    case 1: return {+3, 0, 0, 0, 0, 0};
    case 2: return {0, 0, +3, +3, 0, -3};
    case 3: return {0, 0, +6, 0, -3, 0};
    case 4:
      if (z.z4 == 1) return {0, +1, +4, -2, -2, 0};
      if (z.z4 == 2) return {0, +2, +2, -4, -1, 0};
      return {0, +3, 0, -6, 0, 0};
    case 5: return {+3, 0, -3, -3, 0, 0};
    default: return {0, 0, 0, 0, 0, -3};
  }
}

Delta g2_e0_delta(const ZVector& z) {
  switch (classify_e(z)) {
    case 1: return {-3, 0, 0, 0, 0, 0};
    case 2: return {0, 0, -3, -3, 0, +3};
    case 3:
      if (z.z4 == -1) return {0, -2, -2, +4, +1, 0};
      if (z.z4 == -2) return {0, -1, -4, +2, +2, 0};
      return {0, 0, -6, 0, +3, 0};
    case 4: return {0, -3, 0, +6, 0, 0};
    case 5: return {-3, 0, +3, +3, 0, 0};
    default: return {0, 0, 0, 0, 0, +3};
  }
}

Delta g2_f_delta(int i, const ZVector& z) {
  switch (i) {
    case 0:
      return g2_f0_delta(z);
    case 1:
      if (pos(z.z2) <= -z.z3) return {-3, +3, 0, 0, 0, 0};
      if (z.z2 <= 0 && 0 < z.z3) return {0, 0, -3, +3, 0, 0};
      assert(z.z2 > pos(-z.z3));
      return {0, 0, 0, 0, -3, +3};
    case 2:
      if (z.z4 <= 0) return {0, -1, +2, 0, 0, 0};
      return {0, 0, 0, -2, +1, 0};
  }
  throw std::invalid_argument("operator index must be 0..2");
}

Delta g2_e_delta(int i, const ZVector& z) {
  switch (i) {
    case 0:
      return g2_e0_delta(z);
    case 1:
      if (z.z2 >= pos(-z.z3)) return {0, 0, 0, 0, +3, -3};
      if (z.z2 < 0 && 0 <= z.z3) return {0, 0, +3, -3, 0, 0};
      assert(pos(z.z2) < -z.z3);
      return {+3, -3, 0, 0, 0, 0};
    case 2:
      if (z.z4 >= 0) return {0, 0, 0, +2, -1, 0};
      return {0, +1, -2, 0, 0, 0};
  }
  throw std::invalid_argument("operator index must be 0..2");
}

}  // namespace

namespace detail {

std::array<int, 6> g2_f_step(int i, const std::array<int, 6>& x) {
  return apply_delta(x, g2_f_delta(i, z_vector(x)));
}

std::array<int, 6> g2_e_step(int i, const std::array<int, 6>& x) {
  return apply_delta(x, g2_e_delta(i, z_vector(x)));
}

int exact_div(int value, int divisor, const char* what) {
  if (value % divisor != 0) {
    throw std::logic_error(std::string(what) +
                           ": non-integral statistic, membership bug upstream");
  }
  return value / divisor;
}

}  // namespace detail

std::optional<Element> g2_f(int i, const Element& b, int level) {
  const Element r{detail::g2_f_step(i, b.x)};
  if (!in_hat_crystal(r, 3 * level)) return std::nullopt;
  assert(in_v(r, level));
  return r;
}

std::optional<Element> g2_e(int i, const Element& b, int level) {
  const Element r{detail::g2_e_step(i, b.x)};
  if (!in_hat_crystal(r, 3 * level)) return std::nullopt;
  assert(in_v(r, level));
  return r;
}

int g2_eps(int i, const Element& b, int level) {
  switch (i) {
    case 0: {
      const ZVector z = z_vector(b);
      const int corr = 2 * z.z1 + z.z2 + z.z3 + 3 * z.z4;
      return level + detail::exact_div(a_vector(z).max() - corr - s_scaled(b),
                                       3, "g2_eps[0]");
    }
    case 1:
      return detail::exact_div(
          b.xb1() + pos(b.xb3() - b.xb2() + pos(b.x2() - b.x3())), 3,
          "g2_eps[1]");
    case 2:
      return b.xb2() + pos(b.x3() - b.xb3()) / 2;
  }
  throw std::invalid_argument("operator index must be 0..2");
}

int g2_phi(int i, const Element& b, int level) {
  switch (i) {
    case 0:
      return level + detail::exact_div(
                         a_vector(z_vector(b)).max() - s_scaled(b), 3,
                         "g2_phi[0]");
    case 1:
      return detail::exact_div(
          b.x1() + pos(b.x3() - b.x2() + pos(b.xb2() - b.xb3())), 3,
          "g2_phi[1]");
    case 2:
      return b.x2() + pos(b.xb3() - b.x3()) / 2;
  }
  throw std::invalid_argument("operator index must be 0..2");
}

Weight g2_weight(const Element& b, int level) {
  return Weight{g2_phi(0, b, level) - g2_eps(0, b, level),
                g2_phi(1, b, level) - g2_eps(1, b, level),
                g2_phi(2, b, level) - g2_eps(2, b, level)};
}

bool similarity_check(int i, const Element& b, int level) {
  const int hat_level = 3 * level;
  const int power = kSimilarityPower[i];

  const auto iterate = [&](auto&& op) -> std::optional<Element> {
    std::optional<Element> cur = b;
    for (int n = 0; n < power && cur; ++n) cur = op(i, *cur, hat_level);
    return cur;
  };

  if (g2_f(i, b, level) != iterate([](int j, const Element& e, int l) { return hat_f(j, e, l); }))
    return false;
  if (g2_e(i, b, level) != iterate([](int j, const Element& e, int l) { return hat_e(j, e, l); }))
    return false;
  if (g2_eps(i, b, level) * power != hat_eps(i, b, hat_level)) return false;
  if (g2_phi(i, b, level) * power != hat_phi(i, b, hat_level)) return false;
  return true;
}

}  // namespace crystalkit
