#include "crystalkit/element.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <stdexcept>

namespace crystalkit {

namespace {

bool mod3_zero(int v) { return v % 3 == 0; }

}  // namespace

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::HatD4: return "hat-d4";
    case Kind::G2: return "g2";
    case Kind::BInfinity: return "b-infinity";
  }
  throw std::invalid_argument("unknown crystal kind");
}

Kind kind_from_name(std::string_view name) {
  if (name == "hat-d4") return Kind::HatD4;
  if (name == "g2") return Kind::G2;
  if (name == "b-infinity") return Kind::BInfinity;
  throw std::invalid_argument("unknown crystal kind: " + std::string(name));
}

int level_of(const Weight& w) {
  return kComark[0] * w.k0 + kComark[1] * w.k1 + kComark[2] * w.k2;
}

int AVector::max() const { return *std::max_element(a.begin(), a.end()); }

int s_scaled(const std::array<int, 6>& x) {
  // x3 + xb3 is even by the parity constraint.
  return x[0] + x[1] + (x[2] + x[3]) / 2 + x[4] + x[5];
}

int s_scaled(const Element& b) { return s_scaled(b.x); }

ZVector z_vector(const std::array<int, 6>& x) {
  return ZVector{x[5] - x[0], x[4] - x[3], x[2] - x[1], (x[3] - x[2]) / 2};
}

ZVector z_vector(const Element& b) { return z_vector(b.x); }

AVector a_vector(const ZVector& z) {
  const int s4 = 3 * z.z4;
  return AVector{{0, z.z1, z.z1 + z.z2, z.z1 + z.z2 + s4,
                  z.z1 + z.z2 + z.z3 + s4, 2 * z.z1 + z.z2 + z.z3 + s4}};
}

bool coordinates_valid(const Element& b) {
  for (int v : b.x) {
    if (v < 0) return false;
  }
  return (b.x3() - b.xb3()) % 2 == 0;
}

bool f_case_holds(int k, const ZVector& z) {
  const int z1 = z.z1, z2 = z.z2, z3 = z.z3, s4 = 3 * z.z4;
  switch (k) {
    case 1:
      return z1 + z2 + z3 + s4 <= 0 && z1 + z2 + s4 <= 0 && z1 + z2 <= 0 &&
             z1 <= 0;
    case 2:
      return z1 + z2 + z3 + s4 <= 0 && z2 + s4 <= 0 && z2 <= 0 && z1 > 0;
    case 3:
      return z1 + z3 + s4 <= 0 && z3 + s4 <= 0 && z.z4 <= 0 && z2 > 0 &&
             z1 + z2 > 0;
    case 4:
      return z1 + z2 + s4 > 0 && z2 + s4 > 0 && z.z4 > 0 && z3 <= 0 &&
             z1 + z3 <= 0;
    case 5:
      return z1 + z2 + z3 + s4 > 0 && z3 + s4 > 0 && z3 > 0 && z1 <= 0;
    case 6:
      return z1 + z2 + z3 + s4 > 0 && z1 + z3 + s4 > 0 && z1 + z3 > 0 &&
             z1 > 0;
  }
  throw std::invalid_argument("case index must be 1..6");
}

bool e_case_holds(int k, const ZVector& z) {
  const int z1 = z.z1, z2 = z.z2, z3 = z.z3, s4 = 3 * z.z4;
  switch (k) {
    case 1:
      return z1 + z2 + z3 + s4 < 0 && z1 + z2 + s4 < 0 && z1 + z2 < 0 &&
             z1 < 0;
    case 2:
      return z1 + z2 + z3 + s4 < 0 && z2 + s4 < 0 && z2 < 0 && z1 >= 0;
    case 3:
      return z1 + z3 + s4 < 0 && z3 + s4 < 0 && z.z4 < 0 && z2 >= 0 &&
             z1 + z2 >= 0;
    case 4:
      return z1 + z2 + s4 >= 0 && z2 + s4 >= 0 && z.z4 >= 0 && z3 < 0 &&
             z1 + z3 < 0;
    case 5:
      return z1 + z2 + z3 + s4 >= 0 && z3 + s4 >= 0 && z3 >= 0 && z1 < 0;
    case 6:
      return z1 + z2 + z3 + s4 >= 0 && z1 + z3 + s4 >= 0 && z1 + z3 >= 0 &&
             z1 >= 0;
  }
  throw std::invalid_argument("case index must be 1..6");
}

namespace {

template <bool (*Holds)(int, const ZVector&)>
int classify(const ZVector& z, const char* what) {
  int found = 0;
  for (int k = 1; k <= 6; ++k) {
    if (Holds(k, z)) {
      if (found != 0) throw std::logic_error(std::string(what) + ": double case match");
      found = k;
#ifdef NDEBUG
      break;
#endif
    }
  }
  if (found == 0) throw std::logic_error(std::string(what) + ": no case matches");
  return found;
}

}  // namespace

int classify_f(const ZVector& z) { return classify<f_case_holds>(z, "classify_f"); }
int classify_e(const ZVector& z) { return classify<e_case_holds>(z, "classify_e"); }

bool in_hat_crystal(const Element& b, int level) {
  return coordinates_valid(b) && s_scaled(b) <= level;
}

bool in_v(const Element& b, int level) {
  return in_hat_crystal(b, 3 * level) && mod3_zero(b.x1()) &&
         mod3_zero(b.xb1()) && mod3_zero(b.x2() - b.x3()) &&
         mod3_zero(b.xb3() - b.xb2());
}

std::string fraction_text(int scaled) {
  if (scaled % 3 == 0) return std::to_string(scaled / 3);
  return std::to_string(scaled) + "/3";
}

std::string to_text(const std::array<int, 6>& x) {
  std::string out = "(";
  for (int j = 0; j < 6; ++j) {
    if (j) out += ',';
    out += fraction_text(x[j]);
  }
  out += ')';
  return out;
}

std::string to_text(const Element& b) { return to_text(b.x); }

namespace {

[[noreturn]] void bad_element_text(std::string_view text) {
  throw std::invalid_argument("malformed element text: " + std::string(text));
}

// One entry: an optionally signed integer with optional denominator 1 or 3.
int parse_entry(std::string_view tok, std::string_view whole) {
  int num = 0;
  const char* begin = tok.data();
  const char* end = tok.data() + tok.size();
  auto res = std::from_chars(begin, end, num);
  if (res.ec != std::errc{}) bad_element_text(whole);
  if (res.ptr == end) return 3 * num;
  std::string_view rest(res.ptr, static_cast<size_t>(end - res.ptr));
  if (rest == "/3") return num;
  if (rest == "/1") return 3 * num;
  bad_element_text(whole);
}

}  // namespace

std::array<int, 6> parse_coords(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && (body.front() == ' ' || body.front() == '\t')) body.remove_prefix(1);
  while (!body.empty() && (body.back() == ' ' || body.back() == '\t')) body.remove_suffix(1);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') bad_element_text(text);
  body = body.substr(1, body.size() - 2);

  std::array<int, 6> out{};
  int count = 0;
  size_t pos = 0;
  while (true) {
    size_t comma = body.find(',', pos);
    std::string_view tok =
        comma == std::string_view::npos ? body.substr(pos) : body.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (count >= 6 || tok.empty()) bad_element_text(text);
    out[count++] = parse_entry(tok, text);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (count != 6) bad_element_text(text);
  return out;
}

Element parse_element(std::string_view text) { return Element{parse_coords(text)}; }

}  // namespace crystalkit
