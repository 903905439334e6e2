#include "crystalkit/report.hpp"

#include <json.hpp>

namespace crystalkit {

bool VerifyReport::pass() const {
  for (const auto& c : clauses) {
    if (!c.pass) return false;
  }
  return true;
}

VerifyClause& VerifyReport::clause(const std::string& name) {
  for (auto& c : clauses) {
    if (c.name == name) return c;
  }
  clauses.push_back(VerifyClause{name, true, {}});
  return clauses.back();
}

void VerifyReport::fail(const std::string& clause_name, const std::string& witness,
                        size_t witness_cap) {
  VerifyClause& c = clause(clause_name);
  c.pass = false;
  if (c.witnesses.size() < witness_cap) c.witnesses.push_back(witness);
}

std::string VerifyReport::to_json_string() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["level"] = level;
  j["pass"] = pass();
  auto& arr = j["clauses"] = nlohmann::json::array();
  for (const auto& c : clauses) {
    arr.push_back({{"clause", c.name},
                   {"status", c.pass ? "pass" : "fail"},
                   {"witnesses", c.witnesses}});
  }
  return j.dump(2) + "\n";
}

std::string VerifyReport::to_text() const {
  std::string out = "suite: " + suite + "  level: " + std::to_string(level) + "\n";
  for (const auto& c : clauses) {
    out += c.pass ? "[PASS] " : "[FAIL] ";
    out += c.name;
    out += '\n';
    for (const auto& w : c.witnesses) {
      out += "       witness: " + w + "\n";
    }
  }
  out += std::string("result: ") + (pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace crystalkit
