#pragma once

#include <string>
#include <vector>

namespace crystalkit {

struct VerifyClause {
  std::string name;
  bool pass = true;
  std::vector<std::string> witnesses;  // sorted, first offenders kept
};

// Outcome of one verification suite. Witness lists are deterministic:
// element sweeps run in canonical order regardless of worker count.
struct VerifyReport {
  std::string suite;
  int level = 0;
  std::vector<VerifyClause> clauses;

  bool pass() const;
  VerifyClause& clause(const std::string& name);
  void fail(const std::string& clause_name, const std::string& witness,
            size_t witness_cap = 8);

  std::string to_json_string() const;
  std::string to_text() const;
};

}  // namespace crystalkit
