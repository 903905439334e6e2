#pragma once

#include <functional>
#include <vector>

#include "crystalkit/element.hpp"
#include "crystalkit/report.hpp"

namespace crystalkit {

// psi in scaled units (3x its natural value). Non-negative everywhere and
// zero only at z = 0; measures the gap <c, phi(b)> - level on V_level.
int psi_scaled(const ZVector& z);

// A minimal element (alpha, beta, beta, beta, beta, alpha), beta stored
// scaled as beta3 = 3*beta. Requires 2*alpha + beta3 <= level.
struct MinimalElement {
  int alpha = 0;
  int beta3 = 0;

  Element as_element() const;
  Weight eps_weight(int level) const;  // (level - 2a - b3, a, b3); equals phi

  auto operator<=>(const MinimalElement&) const = default;
};

// The closed-form minimal set {2*alpha + beta3 <= level}. The scan
// {b : <c, eps(b)> = level} is checked against it by verify_perfect.
std::vector<MinimalElement> minimal_elements(int level);

// Dominant classical weights of the given level: k0 + 2 k1 + k2 = level.
std::vector<Weight> dominant_weights(int level);

// An element of the limit crystal: same congruences as V elements, but
// coordinates may be negative and there is no level bound.
struct InfElement {
  std::array<int, 6> x{};

  auto operator<=>(const InfElement&) const = default;
};

bool in_b_infinity(const InfElement& b);

// Same branch rules as the V operators; never null.
InfElement binf_f(int i, const InfElement& b);
InfElement binf_e(int i, const InfElement& b);

// Statistics on the limit crystal (index 0 drops the level term); may be
// negative.
int binf_eps(int i, const InfElement& b);
int binf_phi(int i, const InfElement& b);

// The embedding determined by a minimal base element: subtracts alpha from
// the outer coordinates and beta from the middle four. Preserves the
// z-vector and shifts s by -(2*alpha + beta3).
InfElement embed_min(const MinimalElement& base, const Element& b);

// Sizes of the union of embedding images over all levels up to each
// l = 1..max_level (a finite window into the limit crystal).
std::vector<int> embed_image_union_sizes(int max_level);

// Perfectness verification over V_level: level lower bound with equality
// exactly on the closed-form minimal set, eps = phi there, and a bijection
// onto the dominant weights. Optionally checks that the tensor square is
// connected.
VerifyReport verify_perfect(int level, bool include_tensor_connectivity = false);

// Same checks with injected statistics in place of the computed ones.
using WeightFn = std::function<Weight(const Element&)>;
VerifyReport verify_perfect_with(int level, const WeightFn& eps_of_b,
                                 const WeightFn& phi_of_b,
                                 bool include_tensor_connectivity = false);

// Coherent-family verification for the given level: every minimal base gives
// an injective embedding commuting with all defined operator steps, with
// statistics shifted by the base's weight and the z-vector preserved. The
// final clause reports the (finite) coverage window only.
VerifyReport verify_coherent(int level);

}  // namespace crystalkit
