// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the command-line tool: exit codes and output
// stability, driven through the real binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "trishell/generators.hpp"
#include "trishell/io.hpp"
#include "trishell/isomorphism.hpp"

using namespace trishell;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "trishell_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliResult run_cli(const std::string& args) {
  fs::path out_file = work_dir() / "stdout.txt";
  std::string command = std::string(TRISHELL_CLI_PATH) + " " + args + " > " +
                        out_file.string() + " 2> " + (work_dir() / "stderr.txt").string();
  int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.out = buffer.str();
  return result;
}

std::string write_complex(const std::string& name, const SimplicialComplex& c) {
  fs::path path = work_dir() / name;
  std::ofstream out(path);
  out << to_facet_text(c);
  return path.string();
}

}  // namespace

TEST_CASE("validate exit codes") {
  auto good = write_complex("bd4.txt", generate_standard(StandardKind::simplex_boundary_4));
  CHECK(run_cli("validate " + good).exit_code == 0);

  auto bad = write_complex("tet.txt", SimplicialComplex::from_facets({{"a", "b", "c", "d"}}));
  CHECK(run_cli("validate " + bad).exit_code == 1);

  CHECK(run_cli("validate " + std::string("/no/such/file")).exit_code == 3);
  CHECK(run_cli("validate").exit_code == 2);
  CHECK(run_cli("validate --bogus-flag x").exit_code == 2);
}

TEST_CASE("gen piped back through validate and matrix") {
  auto cj = write_complex("cj34.txt", generate_standard(StandardKind::cycle_join, 3, 4));
  CHECK(run_cli("validate " + cj + " --format json").exit_code == 0);
  auto csv = run_cli("matrix " + cj + " --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.substr(0, 4) == "0,1,");
  CHECK(run_cli("gen --construction cycle_join --p 2 --q 3").exit_code == 2);
}

TEST_CASE("match and reconstruct") {
  auto cj = generate_standard(StandardKind::cycle_join, 3, 3);
  auto a = write_complex("a.txt", cj);
  VertexMap rho;
  auto labels = cj.vertex_labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    rho[labels[i]] = labels[(i + 1) % labels.size()];
  }
  auto b = write_complex("b.txt", relabel(cj, rho));
  CHECK(run_cli("match " + a + " " + b).exit_code == 0);
  CHECK(run_cli("reconstruct " + a + " " + b + " --search").exit_code == 0);
  CHECK(run_cli("reconstruct " + a + " " + b).exit_code == 2);  // needs --map or --search

  auto bd4 = write_complex("bd4b.txt", generate_standard(StandardKind::simplex_boundary_4));
  CHECK(run_cli("match " + a + " " + bd4).exit_code == 1);

  SUBCASE("reconstruct from a map file") {
    auto maps = run_cli("match " + a + " " + b + " --format json");
    REQUIRE(maps.exit_code == 0);
    auto parsed = nlohmann::json::parse(maps.out);
    fs::path map_path = work_dir() / "map.json";
    std::ofstream(map_path) << parsed[0].dump();
    CHECK(run_cli("reconstruct " + a + " " + b + " --map " + map_path.string()).exit_code == 0);
  }
}

TEST_CASE("classify and catalog") {
  auto ls5 = run_cli("catalog LS_5");
  CHECK(ls5.exit_code == 0);
  auto path = write_complex("ls5.txt", parse_complex(ls5.out).complex);
  auto classified = run_cli("classify " + path);
  CHECK(classified.exit_code == 0);
  CHECK(classified.out.find("LS_5") != std::string::npos);

  auto bd4 = write_complex("bd4c.txt", generate_standard(StandardKind::simplex_boundary_4));
  CHECK(run_cli("classify " + bd4).exit_code == 1);

  CHECK(run_cli("catalog NOPE_9").exit_code == 2);
  CHECK(run_cli("catalog --list").exit_code == 0);
  CHECK(run_cli("catalog 3CW_7").exit_code == 0);
}

TEST_CASE("enumerate output is byte-stable") {
  std::string args = "enumerate --dim 3 --kind cyclic --max-facets 8 --format json";
  auto first = run_cli(args);
  auto second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);

  auto parsed = nlohmann::json::parse(first.out);
  // classification counts per k: 3,4 -> 1; 5 -> 2; 6 -> 3; 7 -> 1; 8 -> 2
  std::vector<int> counts;
  for (const auto& entry : parsed) counts.push_back(entry["count"].get<int>());
  CHECK(counts == std::vector<int>{1, 1, 2, 3, 1, 2});

  CHECK(run_cli("enumerate --dim 3 --max-facets 9 --verify").exit_code == 0);
}
