#pragma once

#include <string>
#include <vector>

#include "crystalkit/element.hpp"

namespace crystalkit {

// One row of a reference element table: the figure label, the element, and
// whether the table stars it as minimal.
struct GoldenBox {
  std::string label;
  Element element;
  bool minimal = false;
};

struct GoldenFixture {
  CrystalParams params;
  std::vector<GoldenBox> boxes;
};

// Loads a fixture JSON file; throws std::runtime_error on I/O or format
// problems (including duplicate labels).
GoldenFixture load_fixture(const std::string& path);

}  // namespace crystalkit
