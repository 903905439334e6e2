// Command-line surface: enumeration, graph export, decomposition, minimal
// elements, and the verification suites.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crystalkit/fixtures.hpp"
#include "crystalkit/g2.hpp"
#include "crystalkit/graph.hpp"
#include "crystalkit/perfect.hpp"
#include "crystalkit/verify.hpp"

namespace ck = crystalkit;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

int write_output(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << bytes;
    return kExitPass;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << bytes;
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  return kExitPass;
}

int run_generate(const std::string& kind, int level, const std::string& format,
                 const std::string& out_path) {
  const ck::CrystalParams params{ck::kind_from_name(kind), level};
  const ck::CrystalGraph graph = ck::build_graph(params);
  const std::string bytes =
      format == "dot" ? ck::export_dot(graph) : ck::export_json(graph);
  return write_output(bytes, out_path);
}

int run_decompose(const std::string& kind, int level, const std::vector<int>& forget) {
  const ck::CrystalParams params{ck::kind_from_name(kind), level};
  std::vector<int> kept;
  for (int j = 0; j < 3; ++j) {
    if (!std::count(forget.begin(), forget.end(), j)) kept.push_back(j);
  }
  const ck::DecompositionReport report = ck::decompose(ck::build_graph(params), kept);

  const auto label_set = [](const std::vector<int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s + "}";
  };
  std::cout << "crystal: " << ck::kind_name(params.kind) << "  level: " << level << "\n";
  std::cout << "kept labels: " << label_set(report.kept)
            << "  forgotten: " << label_set(report.forgotten) << "\n";
  std::cout << "component  highest                    weight     size\n";
  int idx = 0;
  for (const auto& c : report.components) {
    ++idx;
    std::string highest = ck::to_text(c.highest);
    highest.resize(std::max<size_t>(highest.size(), 26), ' ');
    std::cout << "  " << idx << (idx < 10 ? "        " : "       ") << highest
              << " (" << c.weight.k0 << "," << c.weight.k1 << "," << c.weight.k2
              << ")    " << c.size << "\n";
  }
  std::cout << "components: " << report.components.size()
            << "  total size: " << report.total_size() << "\n";
  return kExitPass;
}

int run_minimal(int level, bool as_json) {
  const auto minimal = ck::minimal_elements(level);
  if (as_json) {
    nlohmann::json j;
    j["crystal"] = "g2";
    j["level"] = level;
    auto& arr = j["minimal"] = nlohmann::json::array();
    for (const auto& m : minimal) {
      const ck::Weight w = m.eps_weight(level);
      arr.push_back({{"element", ck::to_text(m.as_element())},
                     {"alpha", m.alpha},
                     {"beta", ck::fraction_text(m.beta3)},
                     {"eps", {w.k0, w.k1, w.k2}}});
    }
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "crystal: g2  level: " << level << "\n";
  std::cout << "minimal elements: " << minimal.size() << "\n";
  for (const auto& m : minimal) {
    const ck::Weight w = m.eps_weight(level);
    std::string text = ck::to_text(m.as_element());
    text.resize(std::max<size_t>(text.size(), 26), ' ');
    std::cout << "  " << text << " alpha=" << m.alpha
              << " beta=" << ck::fraction_text(m.beta3) << "  eps=phi=("
              << w.k0 << "," << w.k1 << "," << w.k2 << ")\n";
  }
  return kExitPass;
}

int emit_reports(const std::vector<ck::VerifyReport>& reports, bool as_json) {
  bool all_pass = true;
  if (as_json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
      arr.push_back(nlohmann::json::parse(r.to_json_string()));
      all_pass = all_pass && r.pass();
    }
    std::cout << (reports.size() == 1 ? arr[0].dump(2) : arr.dump(2)) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << r.to_text();
      all_pass = all_pass && r.pass();
    }
  }
  return all_pass ? kExitPass : kExitVerifyFail;
}

int run_verify(const std::string& suite, int level, bool as_json,
               const std::string& fixtures_dir) {
  std::vector<ck::VerifyReport> reports;
  if (suite == "axioms") {
    reports.push_back(ck::verify_axioms(ck::CrystalParams{ck::Kind::HatD4, level}));
    reports.push_back(ck::verify_axioms(ck::CrystalParams{ck::Kind::G2, level}));
  } else if (suite == "similarity") {
    reports.push_back(ck::verify_similarity(level));
  } else if (suite == "perfect") {
    reports.push_back(ck::verify_perfect(level));
  } else if (suite == "coherent") {
    reports.push_back(ck::verify_coherent(level));
  } else {  // golden
    const std::string path =
        fixtures_dir + "/b" + std::to_string(level) + "_boxes.json";
    reports.push_back(ck::verify_golden(ck::load_fixture(path)));
  }
  return emit_reports(reports, as_json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact perfect-crystal engine for the affine types D4(3) and G2(1)"};
  app.require_subcommand(1);

  std::string kind = "g2";
  std::string format = "json";
  std::string out_path;
  std::string suite;
  std::string fixtures_dir = CRYSTAL_KIT_DATA_DIR;
  std::vector<int> forget;
  int level = 1;
  bool as_json = false;

  auto* generate = app.add_subcommand("generate", "build a crystal graph and export it");
  generate->add_option("--kind", kind, "crystal kind")
      ->check(CLI::IsMember({"g2", "hat-d4"}));
  generate->add_option("--level", level, "crystal level")->check(CLI::Range(0, 64));
  generate->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"dot", "json"}));
  generate->add_option("--out", out_path, "output path (default: stdout)");

  auto* decompose = app.add_subcommand("decompose", "split into components after forgetting arrows");
  decompose->add_option("--kind", kind, "crystal kind")
      ->check(CLI::IsMember({"g2", "hat-d4"}));
  decompose->add_option("--level", level, "crystal level")->check(CLI::Range(0, 64));
  decompose->add_option("--forget", forget, "arrow labels to forget")
      ->required()
      ->check(CLI::Range(0, 2));

  auto* minimal = app.add_subcommand("minimal", "list the minimal elements");
  minimal->add_option("--level", level, "crystal level")->check(CLI::Range(1, 64));
  minimal->add_flag("--json", as_json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "one of: axioms similarity perfect coherent golden")
      ->required()
      ->check(CLI::IsMember({"axioms", "similarity", "perfect", "coherent", "golden"}));
  verify->add_option("--level", level, "crystal level")->check(CLI::Range(1, 64));
  verify->add_flag("--json", as_json, "machine-readable report");
  verify->add_option("--fixtures", fixtures_dir, "directory holding the reference tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (generate->parsed()) return run_generate(kind, level, format, out_path);
    if (decompose->parsed()) return run_decompose(kind, level, forget);
    if (minimal->parsed()) return run_minimal(level, as_json);
    return run_verify(suite, level, as_json, fixtures_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
