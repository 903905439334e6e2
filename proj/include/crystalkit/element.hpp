#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>

namespace crystalkit {

// A crystal element in coordinate form. Coordinates are stored as 3x their
// natural (third-integer) values, so everything downstream is exact integer
// arithmetic. Order: x1, x2, x3, xb3, xb2, xb1, where xbj holds the barred
// coordinate.
struct Element {
  std::array<int, 6> x{};

  int x1() const { return x[0]; }
  int x2() const { return x[1]; }
  int x3() const { return x[2]; }
  int xb3() const { return x[3]; }
  int xb2() const { return x[4]; }
  int xb1() const { return x[5]; }

  // Canonical total order: lexicographic on (x1,x2,x3,xb3,xb2,xb1).
  auto operator<=>(const Element&) const = default;
};

enum class Kind { HatD4, G2, BInfinity };

const char* kind_name(Kind k);
Kind kind_from_name(std::string_view name);

struct CrystalParams {
  Kind kind = Kind::G2;
  int level = 1;

  auto operator<=>(const CrystalParams&) const = default;
};

// The z statistics, scaled by 3 like the coordinates. z4 is integral thanks
// to the parity constraint x3 == xb3 (mod 2).
struct ZVector {
  int z1 = 0;
  int z2 = 0;
  int z3 = 0;
  int z4 = 0;

  auto operator<=>(const ZVector&) const = default;
};

struct AVector {
  std::array<int, 6> a{};

  int max() const;
  auto operator<=>(const AVector&) const = default;
};

// Integer coefficients on the classical fundamental weights (L0, L1, L2).
struct Weight {
  int k0 = 0;
  int k1 = 0;
  int k2 = 0;

  auto operator<=>(const Weight&) const = default;
};

// Cartan matrices <h_i, alpha_j> (row i, column j) for the two affine types.
inline constexpr std::array<std::array<int, 3>, 3> kCartanHatD4{
    {{2, -1, 0}, {-1, 2, -3}, {0, -1, 2}}};
inline constexpr std::array<std::array<int, 3>, 3> kCartanG2{
    {{2, -1, 0}, {-1, 2, -1}, {0, -3, 2}}};

// Root multipliers m_i relating the two crystals: the G2(1) operator at index
// i equals the m_i-th power of the hat operator.
inline constexpr std::array<int, 3> kSimilarityPower{3, 3, 1};

// Comarks: <c, k0 L0 + k1 L1 + k2 L2> = k0 + 2 k1 + k2.
inline constexpr std::array<int, 3> kComark{1, 2, 1};

// Level pairing <c, w>.
int level_of(const Weight& w);

// Basic statistics; the array overloads are shared with the limit crystal,
// whose coordinates may be negative.
int s_scaled(const std::array<int, 6>& x);  // 3*s(b)
int s_scaled(const Element& b);
ZVector z_vector(const std::array<int, 6>& x);
ZVector z_vector(const Element& b);
AVector a_vector(const ZVector& z);

// Structural validity: all coordinates >= 0 and x3 == xb3 (mod 2).
bool coordinates_valid(const Element& b);

// Case conditions driving the 0-operators. k runs 1..6; the E list is the
// strictness flip of the F list (every ">" becomes ">=", every "<="
// becomes "<").
bool f_case_holds(int k, const ZVector& z);
bool e_case_holds(int k, const ZVector& z);

// First matching case, 1..6. The six conditions are disjoint and exhaustive;
// a zero or double match signals a transcription bug and throws
// std::logic_error (uniqueness is additionally asserted in debug builds).
int classify_f(const ZVector& z);
int classify_e(const ZVector& z);

// Membership in the hat crystal of the given level: valid coordinates and
// s_scaled(b) <= level.
bool in_hat_crystal(const Element& b, int level);

// Membership in V_level, viewed inside the hat crystal of level 3*level:
// additionally x1, xb1 == 0, x2 == x3, xb3 == xb2 (all mod 3).
bool in_v(const Element& b, int level);

// Text form "(a1,a2,a3,a4,a5,a6)" with each entry a reduced fraction in
// natural (unscaled) units: 0, 1/3, 2/3, 1, 4/3, ...
std::string fraction_text(int scaled);
std::string to_text(const std::array<int, 6>& x);
std::string to_text(const Element& b);

// Parses the text form back to scaled coordinates; throws
// std::invalid_argument on malformed input.
std::array<int, 6> parse_coords(std::string_view text);
Element parse_element(std::string_view text);

}  // namespace crystalkit
