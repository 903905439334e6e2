#pragma once

#include <optional>

#include "crystalkit/element.hpp"

namespace crystalkit {

// Kashiwara operators and statistics on the hat crystal of the given level.
// A step that would drive a coordinate negative or push s past the level
// bound yields nullopt. i is 0, 1 or 2.
std::optional<Element> hat_f(int i, const Element& b, int level);
std::optional<Element> hat_e(int i, const Element& b, int level);

// Closed-form statistics in scaled units; on the hat crystal these directly
// count how many times hat_e / hat_f applies before hitting nullopt.
int hat_eps(int i, const Element& b, int level);
int hat_phi(int i, const Element& b, int level);

}  // namespace crystalkit
