// Copyright 2026 The eprgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

using Json = nlohmann::json;

struct Result {
  int code = -1;
  std::string out;
};

std::string Quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') {
      q += "'\\''";
    } else {
      q += c;
    }
  }
  return q + "'";
}

// Runs the CLI with stderr discarded and returns its exit code and stdout.
Result Run(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + " " + Quote(EPRGAME_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Result r;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json Doc(const Result& r) {
  Json j = Json::parse(r.out, nullptr, false);
  REQUIRE_FALSE(j.is_discarded());
  return j;
}

const char kChicken[] = R"({"family":"chicken","alpha":1,"beta":1})";
const char kMax1[] = R"({"named":"chsh-max-1"})";

TEST_CASE("reproduce chicken-set1") {
  const Result r = Run("reproduce chicken-set1");
  CHECK(r.code == 0);
  const Json j = Doc(r);
  CHECK(j["passed"] == true);
  CHECK(j["scenario"] == "chicken-set1");
}

TEST_CASE("reproduce all and unknown scenarios") {
  const Result all = Run("reproduce all");
  CHECK(all.code == 0);
  CHECK(Doc(all)["scenarios"].size() == 8);
  const Result unknown = Run("reproduce nothing");
  CHECK(unknown.code == 1);
  CHECK(Doc(unknown).contains("error"));
}

TEST_CASE("box-factorize on a maximal box") {
  const Result r = Run("box-factorize " + Quote(kMax1));
  CHECK(r.code == 0);
  const Json j = Doc(r);
  CHECK(j["verdict"] == "NotFactorizable");
  CHECK(std::abs(j["detail"]["max_residual"].get<double>() -
                 std::sqrt(2.0) / 8) < 1e-12);
  const Result coins = Run(
      "box-factorize " +
      Quote(R"({"coins":{"r":0.1,"s":0.2,"rp":0.3,"sp":0.4}})"));
  CHECK(Doc(coins)["verdict"] == "Factorizable");
}

TEST_CASE("box-check on fair coins") {
  const Result r =
      Run("box-check " +
          Quote(R"({"coins":{"r":0.5,"s":0.5,"rp":0.5,"sp":0.5}})"));
  CHECK(r.code == 0);
  const Json j = Doc(r);
  CHECK(j["ok"] == true);
  for (const Json& res : j["residuals"]) CHECK(res["residual"] == 0.0);
}

TEST_CASE("box-check failure and tolerance") {
  std::string p = R"({"p":[0.25,0.25,0.25,0.25000001)";
  for (int k = 4; k < 16; ++k) p += ",0.25";
  p += "]}";
  const Result strict = Run("box-check " + Quote(p));
  CHECK(strict.code == 1);
  CHECK(Doc(strict)["ok"] == false);
  CHECK(Run("box-check --tol 1e-6 " + Quote(p)).code == 0);
  CHECK(Run("box-check " + Quote(p), "EPRGAME_TOL=1e-6").code == 0);
  CHECK(Run("box-check " + Quote(p), "EPRGAME_TOL=abc").code == 2);
}

TEST_CASE("box-complete") {
  const Result ok = Run("box-complete " +
                        Quote(R"({"mu":[0.25,0.25,0.25,0.25,0.25,0.25,0.25,0.25]})"));
  CHECK(ok.code == 0);
  CHECK(Doc(ok)["box"]["p"].size() == 16);
  const Result bad =
      Run("box-complete " + Quote(R"({"mu":[0.9,0.9,0,0,0,0,0,0]})"));
  CHECK(bad.code == 1);
  CHECK(Doc(bad)["valid"] == false);
}

TEST_CASE("box-bell") {
  const Result r = Run("box-bell " + Quote(kMax1));
  CHECK(r.code == 0);
  const Json j = Doc(r);
  CHECK(std::abs(j["chsh_default"].get<double>() - 2 * std::sqrt(2.0)) < 1e-12);
  CHECK(j["ch_max"].get<double>() > 0);
}

TEST_CASE("game-equilibria") {
  const Result r = Run("game-equilibria " +
                       Quote(R"({"family":"chicken","alpha":1,"beta":2})"));
  CHECK(r.code == 0);
  const Json j = Doc(r);
  CHECK(j["equilibria"]["points"].size() == 3);
  CHECK(j["closed_form"].size() == 3);
  CHECK(j.contains("deltas"));
}

TEST_CASE("analyze with constraints") {
  const Result r = Run("analyze " + Quote(kChicken) + " " + Quote(kMax1) +
                       " --constraints chicken-mixed " + Quote("chicken-(1,0)"));
  CHECK(r.code == 0);
  const Json j = Doc(r);
  CHECK(j["constraints"].size() == 2);
  CHECK(j["nash_residuals"].size() == j["equilibria"]["points"].size());
  const Result raw = Run("analyze " + Quote(R"({"K":0,"L":1,"M":1,"N":0})") +
                         " " + Quote(kMax1) + " --constraints chicken-mixed");
  CHECK(raw.code == 1);
  CHECK(Doc(raw).contains("error"));
}

TEST_CASE("simulate is reproducible") {
  const std::string args = "simulate " + Quote(kChicken) + " " + Quote(kMax1) +
                           " --x 0 --y 0 --runs 20000 --seed 17";
  const Result a = Run(args);
  const Result b = Run(args + " --workers 3");
  CHECK(a.code == 0);
  const Json ja = Doc(a);
  const Json jb = Doc(b);
  CHECK(ja["meanA"] == jb["meanA"]);
  CHECK(ja["counts"] == jb["counts"]);
  CHECK(ja["seed"] == 17);
  CHECK(std::abs(ja["meanA"].get<double>() - (2 + std::sqrt(2.0)) / 4) <
        4 * ja["stderrA"].get<double>());
}

TEST_CASE("search with injected boxes") {
  const Result r =
      Run("search " + Quote(kChicken) +
          " --constraint none --samples 20 --seed 3 --inject " + Quote(kMax1));
  CHECK(r.code == 0);
  const Json j = Doc(r);
  REQUIRE(j["hits"].size() >= 1);
  CHECK(j["hits"][0]["index"] == 0);
  CHECK(j["hits"][0]["factorizable"] == false);
}

TEST_CASE("input files are read from disk") {
  const auto path =
      std::filesystem::temp_directory_path() / "eprgame_cli_test_box.json";
  std::ofstream(path) << kMax1;
  const Result r = Run("box-bell " + Quote(path.string()));
  CHECK(r.code == 0);
  std::filesystem::remove(path);
  CHECK(Run("box-bell /nonexistent/box.json").code == 2);
}

TEST_CASE("usage and parse errors exit with 2 and leave stdout empty") {
  for (const std::string& args :
       {std::string(""), std::string("frobnicate"),
        "box-check " + Quote("{not json"),
        "box-check " + Quote(R"({"named":"nope"})"),
        "simulate " + Quote(kChicken) + " " + Quote(kMax1) +
            " --x 0 --y 0 --runs 10"}) {
    const Result r = Run(args);
    INFO(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
  }
}

TEST_CASE("invalid boxes are domain errors") {
  const Result r = Run("box-bell " + Quote(R"({"p":[1,0,0,0,1,0,0,0,1,0,0,0,0,0,0,1]})"));
  CHECK(r.code == 1);
  const Json j = Doc(r);
  CHECK(j.contains("error"));
  CHECK(j["validation"]["ok"] == false);
}

}  // namespace
