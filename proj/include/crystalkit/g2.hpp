#pragma once

#include <optional>

#include "crystalkit/element.hpp"

namespace crystalkit {

// Operators and statistics on V_level (the crystal sitting inside the hat
// crystal of level 3*level). Steps are the tripled hat steps except at index
// 2 and in the two fractional-z4 sub-branches of the 0-operator.
std::optional<Element> g2_f(int i, const Element& b, int level);
std::optional<Element> g2_e(int i, const Element& b, int level);

// Closed-form statistics. Every division by 3 is exact on V_level; a
// remainder signals a membership bug upstream and throws std::logic_error.
int g2_eps(int i, const Element& b, int level);
int g2_phi(int i, const Element& b, int level);

// wt(b) = sum_i (phi_i - eps_i) L_i. Pairs to zero against the comarks.
Weight g2_weight(const Element& b, int level);

// Checks the similarity identities at index i: the operator equals the
// m_i-fold hat operator at hat level 3*level (nullopt matching nullopt), and
// the statistics scale by m_i. A false return pinpoints a divergent branch.
bool similarity_check(int i, const Element& b, int level);

namespace detail {

// Raw branch steps with no bounds applied; shared with the limit crystal,
// where coordinates may go negative and nothing is ever truncated.
std::array<int, 6> g2_f_step(int i, const std::array<int, 6>& x);
std::array<int, 6> g2_e_step(int i, const std::array<int, 6>& x);

// Quotient with an exactness guard; remainder throws std::logic_error.
int exact_div(int value, int divisor, const char* what);

}  // namespace detail

}  // namespace crystalkit
