// Copyright 2026 The wigner-codes Authors
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

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using wigner_codes::cli::kExitCheckFailed;
using wigner_codes::cli::kExitOk;
using wigner_codes::cli::kExitUsage;
using wigner_codes::cli::run_cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("wigner_codes_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("field info") {
  const auto r = run({"field", "info", "--q", "4"});
  REQUIRE(r.code == kExitOk);
  const json j = r.parsed();
  CHECK(j["q"] == 4);
  CHECK(j["elements"].size() == 4);
  CHECK(j["alpha_powers"].size() == 3);
  CHECK(run({"field", "info", "--q", "6"}).code == kExitUsage);
}

TEST_CASE("code commands") {
  const json s = run({"code", "simplex", "--q", "3"}).parsed();
  CHECK(s["N"] == 4);
  CHECK(s["k"] == 2);
  CHECK(s["d"] == 3);
  CHECK(s["codewords"].size() == 9);
  const json h = run({"code", "hamming", "--q", "3"}).parsed();
  CHECK(h["k"] == 2);
  CHECK(h["d"] == 3);
  const json c = run({"code", "cosets", "--q", "2", "--which", "hamming"}).parsed();
  CHECK(c["num_cosets"] == 4);
  CHECK(c["rows"].size() == 4);
  const json w = run({"code", "weights", "--q", "5", "--which", "simplex"}).parsed();
  CHECK(w["weights"] == json::array({1, 0, 0, 0, 0, 24, 0}));
  CHECK(w["total"] == 25);
  CHECK(run({"code", "weights", "--q", "5", "--which", "dual"}).code == kExitUsage);
  const json mid = run({"code", "hamming", "--q", "8"}).parsed();
  CHECK(mid["codewords_omitted"] == true);
  CHECK(mid["d"] == 3);
  const json big = run({"code", "hamming", "--q", "16"}).parsed();
  CHECK(big["codewords_omitted"] == true);
  CHECK(big["d"].is_null());
}

TEST_CASE("mub commands") {
  const json t = run({"mub", "table", "--q", "3"}).parsed();
  CHECK(t["bases"].size() == 4);
  CHECK(run({"mub", "table", "--q", "3", "--format", "text"}).out.find("basis") != std::string::npos);
  const auto v = run({"mub", "verify", "--q", "8"});
  CHECK(v.code == kExitOk);
  CHECK(v.parsed()["passed"] == true);
}

TEST_CASE("facet and distance") {
  const json f = run({"facet", "--q", "3", "--label", "0,1,2,0"}).parsed();
  CHECK(f["K"].get<double>() == doctest::Approx(1.0));
  CHECK(f["trace_of_square"].get<double>() == doctest::Approx(3.0));
  const json u = run({"facet", "--q", "3", "--label", "0,1", "--bases", "0,2", "--unit-trace"}).parsed();
  CHECK(u["trace"].get<double>() == doctest::Approx(1.0));
  CHECK(run({"facet", "--q", "3", "--label", "0,1,2"}).code == kExitOk);
  CHECK(run({"facet", "--q", "3", "--label", "0,1,2,7"}).code == kExitUsage);

  const json d = run({"distance", "--q", "2", "--r", "0,0,0", "--s", "1,1,1"}).parsed();
  CHECK(d["delta"] == 3);
  CHECK(d["hs"].get<double>() == doctest::Approx(std::sqrt(6.0)));
  CHECK(d["fs"].get<double>() == doctest::Approx(1.0));
  CHECK(run({"distance", "--q", "3", "--r", "0,0,0,0", "--s", "1,1"}).code == kExitUsage);
}

TEST_CASE("wigner command") {
  const std::string mixed = temp_file("mixed.json", R"({"dim": 3, "entries": [[[0.3333333333333333,0],[0,0],[0,0]],
    [[0,0],[0.3333333333333333,0],[0,0]], [[0,0],[0,0],[0.3333333333333334,0]]]})");
  const auto r = run({"wigner", "--q", "3", "--state", mixed, "--negativity", "--polytope"});
  REQUIRE(r.code == kExitOk);
  const json j = r.parsed();
  CHECK(j["table"][1][2].get<double>() == doctest::Approx(1.0 / 9));
  CHECK(j["negativity"].get<double>() == doctest::Approx(0.0));
  CHECK(j["polytope"]["member"] == true);
  CHECK_FALSE(j.contains("warning"));

  const std::string strange = temp_file("strange.json", R"({"dim": 3, "entries": [[0,0],[0.7071067811865476,0],[-0.7071067811865476,0]]})");
  const json s = run({"wigner", "--q", "3", "--state", strange, "--polytope"}).parsed();
  CHECK(s["polytope"]["member"] == false);

  const std::string unnormalised = temp_file("twice.json", R"({"dim": 2, "entries": [[[1,0],[0,0]],[[0,0],[1,0]]]})");
  const auto w = run({"wigner", "--q", "2", "--state", unnormalised});
  CHECK(w.code == kExitOk);
  CHECK(w.parsed().contains("warning"));
  CHECK(w.err.find("warning") != std::string::npos);

  const std::string broken = temp_file("broken.json", "{\"dim\": 2,\n  \"entries\": [1, 2,,]}");
  const auto b = run({"wigner", "--q", "2", "--state", broken});
  CHECK(b.code == kExitUsage);
  CHECK(b.err.find("line 2") != std::string::npos);
  CHECK(b.err.find("column") != std::string::npos);

  CHECK(run({"wigner", "--q", "2", "--state", "/nonexistent/state.json"}).code == kExitUsage);
  CHECK(run({"wigner", "--q", "3", "--state", unnormalised}).code == kExitUsage);
}

TEST_CASE("verify all") {
  const auto ok = run({"verify", "all", "--q", "3", "--seed", "1"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("ALL PASSED") != std::string::npos);
  const auto j = run({"verify", "all", "--q", "5", "--format", "json"});
  CHECK(j.code == kExitOk);
  CHECK(j.parsed()["passed"] == true);
  // The qubit distance bound is a known failure, reported as such.
  const auto q2 = run({"verify", "all", "--q", "2"});
  CHECK(q2.code == kExitCheckFailed);
  CHECK(q2.out.find("FAIL distances") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"field", "info"}).code == kExitUsage);
  CHECK(run({"--tol", "-1", "mub", "verify", "--q", "3"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}
