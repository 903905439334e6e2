#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "crystalkit/graph.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "crystal-kit-tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  const fs::path out_file = scratch_dir() / "stdout.txt";
  const std::string cmd = std::string(CRYSTAL_KIT_CLI_PATH) + " " + args + " > " +
                          out_file.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  return r;
}

}  // namespace

TEST_CASE("generate writes a DOT graph") {
  const RunResult r = run_cli("generate --kind g2 --level 1 --format dot");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("digraph crystal {") == 0);

  size_t nodes = 0, pos = 0;
  while ((pos = r.out.find("[label=\"(", pos)) != std::string::npos) {
    ++nodes;
    ++pos;
  }
  CHECK(nodes == 15);
}

TEST_CASE("generate is byte-deterministic across runs") {
  const fs::path f1 = scratch_dir() / "run1.dot";
  const fs::path f2 = scratch_dir() / "run2.dot";
  const std::string base = "generate --kind g2 --level 2 --format dot --out ";
  CHECK(run_cli(base + f1.string()).exit_code == 0);
  CHECK(run_cli(base + f2.string()).exit_code == 0);
  const std::string bytes1 = slurp(f1);
  CHECK(!bytes1.empty());
  CHECK(bytes1 == slurp(f2));
}

TEST_CASE("generate JSON output parses back to the built graph") {
  const RunResult r = run_cli("generate --kind hat-d4 --level 1 --format json");
  CHECK(r.exit_code == 0);
  const crystalkit::CrystalGraph g = crystalkit::parse_graph_json(r.out);
  CHECK(g.nodes.size() == 8);
  CHECK(g == crystalkit::build_graph({crystalkit::Kind::HatD4, 1}));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("generate --kind dailmatic").exit_code == 2);
  CHECK(run_cli("verify nonsense --level 1").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("decompose --kind g2 --level 1 --forget 7").exit_code == 2);
}

TEST_CASE("decompose prints the component table") {
  const RunResult r = run_cli("decompose --kind g2 --level 2 --forget 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("kept labels: {1,2}") != std::string::npos);
  CHECK(r.out.find("components: 3") != std::string::npos);
  CHECK(r.out.find("total size: 92") != std::string::npos);
}

TEST_CASE("minimal lists alpha and beta") {
  const RunResult r = run_cli("minimal --level 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("minimal elements: 4") != std::string::npos);
  CHECK(r.out.find("alpha=1 beta=0") != std::string::npos);
  CHECK(r.out.find("beta=2/3") != std::string::npos);
}

TEST_CASE("verify golden passes on the stored tables") {
  CHECK(run_cli("verify golden --level 1").exit_code == 0);
  CHECK(run_cli("verify golden --level 2").exit_code == 0);
  // no fixture for level 3: an I/O problem, not a verification failure
  CHECK(run_cli("verify golden --level 3").exit_code == 2);
}

TEST_CASE("verify emits machine-readable reports") {
  const RunResult r = run_cli("verify perfect --level 1 --json");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("suite") == "perfect");
  CHECK(j.at("pass") == true);
  CHECK(j.at("clauses").is_array());
  for (const auto& clause : j.at("clauses")) {
    CHECK(clause.at("status") == "pass");
    CHECK(clause.at("witnesses").empty());
  }
}

TEST_CASE("verify suites pass at small levels") {
  CHECK(run_cli("verify axioms --level 1").exit_code == 0);
  CHECK(run_cli("verify similarity --level 1").exit_code == 0);
  CHECK(run_cli("verify coherent --level 1").exit_code == 0);
}

TEST_CASE("thread cap does not change the report bytes") {
  const RunResult base = run_cli("verify similarity --level 2 --json");
  CHECK(base.exit_code == 0);
  const fs::path out_file = scratch_dir() / "threads1.json";
  const std::string cmd = std::string("CRYSTAL_KIT_THREADS=1 ") + CRYSTAL_KIT_CLI_PATH +
                          " verify similarity --level 2 --json > " + out_file.string() +
                          " 2>/dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(slurp(out_file) == base.out);
}
