#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "cli/sweep.hpp"
#include "doctest.h"
#include "json.hpp"

using steklov::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "steklov");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("family then spectrum") {
  REQUIRE(run({"family", "h", "--b", "6", "--dB", "5", "--out", "cli_h65.json"}).code == 0);
  const Run text = run({"spectrum", "cli_h65.json"});
  CHECK(text.code == 0);
  CHECK(text.out.find("sigma: 0, 0.181818181818") != std::string::npos);

  const Run js = run({"spectrum", "cli_h65.json", "--format", "json"});
  REQUIRE(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["b"] == 6);
  CHECK(doc["sigmas"].size() == 6);
  CHECK(doc["sigmas"][1].get<double>() == doctest::Approx(2.0 / 11.0));
  CHECK(doc["eigenvectors"].size() == 6);

  const Run csv = run({"spectrum", "cli_h65.json", "--format", "csv", "--norm", "measure"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("k,sigma\n", 0) == 0);
}

TEST_CASE("bounds output") {
  REQUIRE(run({"family", "path", "--n", "4", "--out", "cli_p4.json"}).code == 0);
  const Run js = run({"bounds", "cli_p4.json", "--format", "json"});
  REQUIRE(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["d_B"] == 4);
  CHECK(doc["thm2"].get<double>() == 0.5);
  CHECK(doc["violations"].empty());
  const Run csv = run({"bounds", "cli_p4.json", "--format", "csv"});
  CHECK(csv.out.rfind("b,d_B,sigma1,thm1,thm2,weighted,slack\n2,4,", 0) == 0);
}

TEST_CASE("sweep writes the documented header and one row per tuple") {
  const Run r = run({"sweep", "h", "--b", "2:4", "--dB", "3:5"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == steklov::cli::kSweepHeader);
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 9);

  const Run a = run({"sweep", "random", "--count", "5", "--seed", "3", "--b", "2:5"});
  const Run b = run({"sweep", "random", "--count", "5", "--seed", "3", "--b", "2:5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
  write("cli_bad.json", R"({"n": 3, "edges": [[0, 1], [0, 2], [1, 2]], "boundary": [0, 1]})");
  const Run invalid = run({"spectrum", "cli_bad.json"});
  CHECK(invalid.code == 2);
  CHECK(invalid.err.find("E(B,B) ≠ ∅") != std::string::npos);

  write("cli_broken.json", "{\"n\": 3");
  CHECK(run({"spectrum", "cli_broken.json"}).code == 1);
  CHECK(run({"bounds", "missing_file.json"}).code == 1);
  CHECK(run({"search", "--b", "2", "--dB", "3", "--max-vertices", "11"}).code == 4);
  CHECK(run({"family", "random", "--b", "3"}).code == 4);
  CHECK(run({"sweep", "h", "--b", "5:2"}).code == 4);
  CHECK(run({"spectrum", "cli_bad.json", "--norm", "nope"}).code == 4);
  CHECK(run({"frobnicate"}).code == 4);
  CHECK(run({}).code == 4);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("search text output") {
  const Run r = run({"search", "--b", "2", "--dB", "2", "--max-vertices", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("minimal sigma1: 1") != std::string::npos);
  CHECK(r.out.find("among minimizers: yes") != std::string::npos);
}
