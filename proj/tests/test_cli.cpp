/*
 * Copyright (c) 2026, The wflag Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_wflag(std::vector<std::string> args) {
  args.insert(args.begin(), "wflag");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = wflag::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return std::string(WFLAG_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("hilbert text and json") {
  const auto t = run_wflag({"hilbert", "--mu", "2,-3", "--u", "4"});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("P^13[1^2,2,3^2,4^4,5^2,6,7^2]") != std::string::npos);
  CHECK(t.out.find("O(-12)") != std::string::npos);

  const auto j = run_wflag({"hilbert", "--mu", "2,-3", "--u", "4", "--sections", "7,5", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["d3"] == "45/56");
  CHECK(doc["canonical_degree"] == 0);
  CHECK(doc["weights"] == "1^2,2,3^2,4^4,5,6,7");
}

TEST_CASE("exit codes") {
  CHECK(run_wflag({}).code == wflag::cli::kInputError);
  CHECK(run_wflag({"frobnicate"}).code == wflag::cli::kInputError);
  CHECK(run_wflag({"hilbert", "--group", "E8"}).code == wflag::cli::kInputError);
  CHECK(run_wflag({"hilbert", "--mu", "1,2,3"}).code == wflag::cli::kInputError);
  CHECK(run_wflag({"hilbert", "--format", "xml"}).code == wflag::cli::kInputError);
  const auto neg = run_wflag({"hilbert", "--mu", "5,-9", "--u", "1"});
  CHECK(neg.code == wflag::cli::kPreconditionFailed);
  CHECK(neg.err.find("not positive") != std::string::npos);
  CHECK(run_wflag({"hilbert", "--sections", "9"}).code == wflag::cli::kPreconditionFailed);
  CHECK(run_wflag({"hilbert", "--order", "50", "--max-order", "20"}).code == wflag::cli::kResourceBound);
  CHECK(run_wflag({"equations", "--oracle", "20", "--max-oracle-degree", "5"}).code == wflag::cli::kResourceBound);
  CHECK(run_wflag({"equations", "--set", "gr27"}).code == wflag::cli::kInputError);
  CHECK(run_wflag({"--help"}).code == wflag::cli::kOk);
}

TEST_CASE("config file with flag override") {
  const std::string cfg = temp_path("cli_test.cfg");
  std::ofstream(cfg) << "format=json\nmu=2,-3\nu=4\n";
  const auto from_file = run_wflag({"hilbert", "--config", cfg});
  REQUIRE(from_file.code == 0);
  CHECK(nlohmann::json::parse(from_file.out)["canonical_degree"] == -12);
  const auto overridden = run_wflag({"hilbert", "--config", cfg, "--format", "text"});
  REQUIRE(overridden.code == 0);
  CHECK(overridden.out.rfind("group", 0) == 0);
  std::remove(cfg.c_str());
}

TEST_CASE("strata command") {
  const auto r = run_wflag({"strata", "--weights", "2,2,3,3,3,5", "--codim", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["wellformed"] == true);
  REQUIRE(doc["report"]["flags"].size() == 1);
  CHECK(doc["report"]["flags"][0]["r"] == 3);
  const auto q = run_wflag({"strata", "--weights", "1^2,2,3^2,4^4,5,6,7", "--r", "7", "--transverse", "6,4,4"});
  CHECK(q.out.find("1/7(6,4,4)") != std::string::npos);
  CHECK(run_wflag({"strata", "--weights", "1,x"}).code == wflag::cli::kInputError);
}

TEST_CASE("equations export and reload") {
  const std::string path = temp_path("cli_quadrics.json");
  REQUIRE(run_wflag({"equations", "--mu", "2,-3", "--u", "4", "--export", path}).code == 0);
  const auto reloaded = run_wflag({"equations", "--file", path, "--stratum", "6", "--format", "json"});
  REQUIRE(reloaded.code == 0);
  const auto doc = nlohmann::json::parse(reloaded.out);
  REQUIRE(doc["polynomials"].size() == 1);
  CHECK(doc["polynomials"][0]["label"] == "A.26");

  const auto oracle = run_wflag({"equations", "--mu", "2,-3", "--u", "4", "--oracle", "6"});
  CHECK(oracle.code == 0);
  CHECK(oracle.out.find("(agree)") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("search json lines") {
  const auto r = run_wflag({"search", "--box", "3", "--u-range", "4:4", "--format", "json", "--threads", "2"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t candidates = 0;
  nlohmann::json summary;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    if (j["schema"] == "wflag-candidate/1")
      ++candidates;
    else
      summary = j;
  }
  CHECK(summary["schema"] == "wflag-search-summary/1");
  CHECK(summary["candidates"] == candidates);
  CHECK(candidates > 0);

  const auto capped = run_wflag({"search", "--box", "3", "--u-range", "4:4", "--max-candidates", "1"});
  CHECK(capped.code == wflag::cli::kResourceBound);
  CHECK(capped.err.find("incomplete") != std::string::npos);
}

TEST_CASE("report and verify") {
  const auto r = run_wflag({"report", "--mu", "0,0", "--u", "1", "--sections", "1,1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("genus             10") != std::string::npos);
  const auto v = run_wflag({"verify", "--suite", "denominator", "--trials", "5"});
  CHECK(v.code == 0);
  CHECK(v.out.find("denominator: PASS") != std::string::npos);
  CHECK(run_wflag({"verify", "--suite", "nope"}).code == wflag::cli::kInputError);
}
