#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "honeycomb/cli.hpp"
#include "honeycomb/report.hpp"

using namespace honeycomb;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "honeycomb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("honeycomb_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("report_cli") {
  TEST_CASE("csv formatting") {
    const std::string t = csv_table({"a", "b"}, {{0.1, "x,y"}, {-2.0, "q\"r"}});
    CHECK(t == "a,b\n0.10000000000000001,\"x,y\"\n-2,\"q\"\"r\"\n");
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "--step", "-1"}).code == 2);
    CHECK(run({"verify", "--format", "xml"}).code == 2);
    CHECK(run({"scan", "--diagram", "9z"}).code == 2);
    CHECK(run({"oracle", "--instances", "0"}).code == 2);
    CHECK(run({"tile", "--kind", "pentagon"}).code == 2);
    CHECK(run({"cluster", "/nonexistent.json"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("scan diagrams") {
    const Run r = run({"scan", "--diagram", "4d", "--format", "csv", "--xmin", "-0.001", "--xmax", "0.001"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, first, mid;
    std::getline(lines, header);
    std::getline(lines, first);
    std::getline(lines, mid);
    CHECK(header == "X,L_PX,minus_eps,L_prime");
    // at X = 0: L(P_X) = -eps = L' = 2 * 12^{1/4}
    CHECK(mid.rfind("0,3.72241943640839", 0) == 0);
    const Run b = run({"scan", "--diagram", "8b", "--format", "csv", "--xmin", "0", "--xmax", "0"});
    CHECK(b.out.find("0,ChordArc,") != std::string::npos);
  }

  TEST_CASE("cluster checks through files") {
    const std::string hex = temp_path("hex.json");
    REQUIRE(run({"tile", "--kind", "hexagon", "--m", "3", "--n", "2", "--out", hex}).code == 0);
    const Run h = run({"cluster", hex});
    CHECK(h.code == 0);
    CHECK(h.out.find("\"passed\": true") != std::string::npos);
    const std::string sq = temp_path("sq.json");
    REQUIRE(run({"tile", "--kind", "square", "--m", "3", "--n", "2", "--out", sq}).code == 0);
    const Run s = run({"cluster", sq, "--format", "csv"});
    CHECK(s.code == 0);
    const Run broken = run({"cluster", std::string(HONEYCOMB_TEST_DATA) + "/broken_twin.json"});
    CHECK(broken.code == 1);
    CHECK(broken.err.find("half-edges 0 and 3") != std::string::npos);
  }

  TEST_CASE("oracle reports are reproducible") {
    const Run a = run({"oracle", "--seed", "4", "--instances", "50"});
    const Run b = run({"oracle", "--seed", "4", "--instances", "50"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"seed\": \"4\"") != std::string::npos);
  }

  TEST_CASE("verify writes the report and names failures") {
    const std::string path = temp_path("verify.json");
    const Run ok = run({"verify", "--step", "0.004", "--out", path});
    CHECK(ok.code == 0);
    const std::string report = slurp(path);
    CHECK(report.find("\"case_id\": \"long_chord\"") != std::string::npos);
    const Run again = run({"verify", "--step", "0.004", "--out", path});
    CHECK(slurp(path) == report);
    const Run bad = run({"verify", "--step", "0.004", "--tol", "1.0", "--out", path});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("first failing certificate: digon") != std::string::npos);
  }
}
