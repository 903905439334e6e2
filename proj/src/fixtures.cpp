#include "crystalkit/fixtures.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace crystalkit {

GoldenFixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);

  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("fixture " + path + ": " + e.what());
  }

  GoldenFixture fx;
  fx.params.kind = kind_from_name(j.at("crystal").get<std::string>());
  fx.params.level = j.at("level").get<int>();

  std::set<std::string> labels;
  for (const auto& row : j.at("boxes")) {
    GoldenBox box;
    box.label = row.at("label").get<std::string>();
    box.element = parse_element(row.at("element").get<std::string>());
    box.minimal = row.value("minimal", false);
    if (!labels.insert(box.label).second)
      throw std::runtime_error("fixture " + path + ": duplicate label " + box.label);
    fx.boxes.push_back(std::move(box));
  }
  return fx;
}

}  // namespace crystalkit
