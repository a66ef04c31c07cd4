// ifc3 — sum-rate outer bounds for the three-user Gaussian interference channel
// Copyright (C) 2026 the ifc3 authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end checks against the installed binary (path injected via IFC3_BIN).

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ifc3/classic_bounds.hpp"
#include "ifc3/json_io.hpp"

using namespace ifc3;
namespace fs = std::filesystem;

namespace {

const std::string kBin = IFC3_BIN;

int run(const std::string& args) {
  const int status = std::system((kBin + " " + args).c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "ifc3_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("help and bad invocations use the documented exit codes", "[cli]") {
  CHECK(run("--help > /dev/null") == 0);
  CHECK(run("> /dev/null 2>&1") == 2);                        // no subcommand
  CHECK(run("bound --family nope > /dev/null 2>&1") == 2);    // unknown family
  CHECK(run("verify nonsense > /dev/null 2>&1") == 2);        // unknown suite
  CHECK(run("sweep --family fully_symmetric --alpha foo > /dev/null 2>&1") ==
        2);
  CHECK(run("sweep --family mixed_strong_very_strong > /dev/null 2>&1") == 2);
}

TEST_CASE("channel file and family flags are mutually exclusive", "[cli]") {
  const fs::path file = scratch() / "dummy_channel.json";
  {
    std::ofstream out(file);
    out << channel_to_json(ChannelMatrix::from_standard(
               Eigen::Matrix3cd::Identity()))
               .dump();
  }
  CHECK(run("bound --channel " + file.string() +
            " --family fully_symmetric > /dev/null 2>&1") == 2);
}

TEST_CASE("malformed channel JSON is rejected", "[cli]") {
  const fs::path file = scratch() / "broken.json";
  {
    std::ofstream out(file);
    out << "{ this is not json";
  }
  CHECK(run("bound --channel " + file.string() + " > /dev/null 2>&1") == 2);
}

TEST_CASE("bound emits all five bounds as JSON", "[cli]") {
  const fs::path out = scratch() / "bounds_all.json";
  REQUIRE(run("bound --family fully_symmetric --out " + out.string()) == 0);
  const json j = json::parse(slurp(out));
  REQUIRE(j.contains("bounds"));
  REQUIRE(j["bounds"].size() == 5);
  CHECK(j["bounds"][0]["bound"] == "composite_kra");
  CHECK(j["bounds"][4]["bound"] == "mac");
  for (const json& b : j["bounds"]) {
    CHECK(b.contains("value_bits"));
    CHECK(b.contains("detail"));
    CHECK(b["value_bits"].get<double>() > 0.0);
  }
}

TEST_CASE("bound csv honors the bound subset", "[cli]") {
  const fs::path out = scratch() / "bounds_sub.csv";
  REQUIRE(run("bound --family fully_symmetric --bounds kra,etw --format csv "
              "--out " +
              out.string()) == 0);
  const auto lines = lines_of(slurp(out));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "bound,value_bits");
  CHECK(lines[1].rfind("composite_kra,", 0) == 0);
  CHECK(lines[2].rfind("composite_etw,", 0) == 0);
}

TEST_CASE("bound on a channel file matches the library value", "[cli]") {
  Eigen::Matrix3cd m;
  m << cd(2.0, 0.0), cd(0.3, 0.4), cd(0.1, 0.0),
       cd(0.0, 0.5), cd(3.0, 0.0), cd(0.2, -0.2),
       cd(0.7, 0.0), cd(0.0, 0.0), cd(1.5, 0.0);
  const ChannelMatrix ch = ChannelMatrix::standardize(m);

  const fs::path file = scratch() / "fixture_channel.json";
  {
    std::ofstream out(file);
    out << channel_to_json(ch).dump();
  }
  const fs::path out = scratch() / "fixture_bound.json";
  REQUIRE(run("bound --channel " + file.string() + " --bounds kra --out " +
              out.string()) == 0);
  const json j = json::parse(slurp(out));
  REQUIRE(j["bounds"].size() == 1);
  const double cli_value = j["bounds"][0]["value_bits"].get<double>();
  const double lib_value = composite_sum_rate(ch, TwoUserRule::Kramer).value_bits;
  CHECK(std::abs(cli_value - lib_value) <= 1e-12);
}

TEST_CASE("sweep writes the table and its crossover sidecar", "[cli]") {
  const fs::path out = scratch() / "mini_sweep.csv";
  REQUIRE(run("sweep --family fully_symmetric --alpha 0.5:0.52:0.01 --out " +
              out.string()) == 0);
  const auto lines = lines_of(slurp(out));
  REQUIRE(lines.size() == 4);  // header + three alphas
  CHECK(lines[0].rfind("alpha,p_db,r_sum,", 0) == 0);

  const fs::path sidecar = out.string() + ".crossovers.json";
  REQUIRE(fs::exists(sidecar));
  const json cx = json::parse(slurp(sidecar));
  CHECK(cx.contains("intervals"));
  CHECK(cx["family"] == "fully_symmetric");
}

TEST_CASE("verify runs a tiny suite and reports a pass", "[cli]") {
  const fs::path log = scratch() / "verify_lemma.txt";
  REQUIRE(run("verify lemma --samples 3 --seed 9 > " + log.string()) == 0);
  const std::string text = slurp(log);
  CHECK(text.find("[PASS] suite=lemma") != std::string::npos);
}
