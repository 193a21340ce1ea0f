// Drives the built binary end to end: exit codes, formats, byte stability.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "oddkt/generate.hpp"
#include "oddkt/verify.hpp"

using namespace oddkt;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string tmp_path(const std::string& name) {
  return std::string("cli_tmp_") + name;
}

RunResult run_cli(const std::string& args) {
  std::string out_file = tmp_path("stdout.txt");
  std::string cmd = std::string(ODDKT_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(out_file);
  std::ostringstream os;
  os << in.rdbuf();
  res.out = os.str();
  return res;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("cli: color and verify round-trip on the k=2 construction") {
  std::string gpath = tmp_path("lb2.txt");
  write_file(gpath, graph_to_string(lower_bound_construction(2)));

  auto color = run_cli("color -k 2 " + gpath + " -o " + tmp_path("col.txt"));
  REQUIRE(color.exit_code == 0);
  {
    std::ifstream in(tmp_path("col.txt"));
    Coloring c = parse_coloring(in);
    CHECK(c.max_color_used() <= 4);
    CHECK(is_odd_coloring(lower_bound_construction(2), c));
  }
  auto verify = run_cli("verify " + gpath + " -c " + tmp_path("col.txt"));
  CHECK(verify.exit_code == 0);
  CHECK(verify.out.find("odd: yes") != std::string::npos);
}

TEST_CASE("cli: verify names the failing vertex of the bad coloring") {
  std::string gpath = tmp_path("lb2.txt");
  write_file(gpath, graph_to_string(lower_bound_construction(2)));
  std::ostringstream col;
  format_coloring(col, lower_bound_bad_coloring(2));
  write_file(tmp_path("bad.txt"), col.str());
  auto verify = run_cli("verify " + gpath + " -c " + tmp_path("bad.txt"));
  CHECK(verify.exit_code == 1);
  CHECK(verify.out.find("vertex 2 FAIL") != std::string::npos);  // u0 has id 2
}

TEST_CASE("cli: oracle reports infeasibility with exit 1") {
  std::string gpath = tmp_path("lb2.txt");
  write_file(gpath, graph_to_string(lower_bound_construction(2)));
  auto res = run_cli("oracle --max-colors 3 " + gpath);
  CHECK(res.exit_code == 1);
  CHECK(res.out.find("INFEASIBLE") != std::string::npos);
  auto exact = run_cli("oracle " + gpath);
  CHECK(exact.exit_code == 0);
  CHECK(exact.out.find("odd_chromatic = 4") != std::string::npos);
}

TEST_CASE("cli: recognize prints certificates and rejects non-k-trees") {
  std::string gpath = tmp_path("k4.txt");
  write_file(gpath, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  auto good = run_cli("recognize -k 3 " + gpath);
  CHECK(good.exit_code == 0);
  auto bad = run_cli("recognize -k 2 " + gpath);
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("NOT-K-TREE") != std::string::npos);
}

TEST_CASE("cli: random graphs are byte-stable under a fixed seed") {
  auto a = run_cli("random -n 30 -k 2 --seed 7");
  auto b = run_cli("random -n 30 -k 2 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  auto c = run_cli("random -n 30 -k 2 --seed 8");
  CHECK(a.out != c.out);
}

TEST_CASE("cli: color auto-detects k and routes the oracle for k in [4,6]") {
  std::ostringstream g4;
  format_graph(g4, random_ktree({9, 4, 11, 0.5}).first);
  write_file(tmp_path("g4.txt"), g4.str());
  auto res = run_cli("color " + tmp_path("g4.txt"));
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("k=4") != std::string::npos);
}

TEST_CASE("cli: enumerate emits the expected block count") {
  auto res = run_cli("enumerate -n 6 -k 2");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("# 5 2-trees on 6 vertices") != std::string::npos);
}

TEST_CASE("cli: probe summarizes a clean sweep") {
  auto res = run_cli("probe -k 2 --n-max 6");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("infeasible=0") != std::string::npos);
  CHECK(res.out.find("total graphs=") != std::string::npos);
}

TEST_CASE("cli: usage errors exit with 2") {
  auto res = run_cli("color --definitely-not-a-flag");
  CHECK(res.exit_code == 2);
}

TEST_CASE("cli: bench prints a table row per instance") {
  auto res = run_cli("bench --k-list 7 -n 40 --count 2 --seed 3");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("k,n,seed,colors_used,palette_bound,millis") != std::string::npos);
}
