/*
 * Copyright 2026 The rghw Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using rghw::cli::run_cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rghw");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Splits CSV without quoted fields.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("table over all routes") {
  auto r = run({"table", "--q", "2", "--k1", "2", "--k2", "3", "--e1", "1", "--e2", "1", "--routes", "all"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["spec"]["n"] == 21);
  REQUIRE(doc["results"].size() == 2);
  CHECK(doc["results"][0]["routes"]["bruteforce"] == 10);
  CHECK(doc["results"][0]["routes"]["theorem1"] == 10);
  CHECK(doc["results"][0]["routes"]["closed_form"] == 10);
  CHECK(doc["results"][1]["routes"]["theorem1"] == 15);
  CHECK(doc["results"][0]["agree"] == true);
  CHECK(doc["results"][1]["agree"] == true);
}

TEST_CASE("table for a single j") {
  auto r = run({"table", "--q", "3", "--k1", "2", "--k2", "3", "--e1", "1", "--e2", "2", "--j", "1"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  REQUIRE(doc["results"].size() == 1);
  CHECK(doc["results"][0]["routes"]["theorem1"] == 69);
  CHECK(doc["results"][0]["N"] == 35);
}

TEST_CASE("bad input exits with 2") {
  auto r = run({"table", "--q", "3", "--k1", "2", "--k2", "3", "--e2", "5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("BadIndex") != std::string::npos);
  CHECK(run({"table", "--q", "2", "--k1", "2", "--k2", "3", "--j", "3"}).code == 2);
  CHECK(run({"table", "--q", "2", "--k1", "2", "--k2", "3", "--j", "x"}).code == 2);
  CHECK(run({"table", "--q", "6", "--k1", "2", "--k2", "3"}).code == 2);
  CHECK(run({"table", "--q", "2", "--k1", "2", "--k2", "3", "--routes", "magic"}).code == 2);
  CHECK(run({"table", "--q", "2", "--k1", "2", "--k2", "3", "--format", "xml"}).code == 2);
  CHECK(run({"table", "--q", "2", "--k1", "2", "--k2", "3", "--cap", "0"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("help exits with 0") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("table") != std::string::npos);
}

TEST_CASE("cap exceeded exits with 3") {
  CHECK(run({"table", "--q", "2", "--k1", "2", "--k2", "3", "--cap", "5"}).code == 3);
  ::setenv("RGHW_CAP", "5", 1);
  CHECK(run({"table", "--q", "2", "--k1", "2", "--k2", "3"}).code == 3);
  // An explicit flag takes precedence over the environment.
  CHECK(run({"table", "--q", "2", "--k1", "2", "--k2", "3", "--cap", "1000"}).code == 0);
  ::setenv("RGHW_CAP", "lots", 1);
  CHECK(run({"table", "--q", "2", "--k1", "2", "--k2", "3"}).code == 2);
  ::unsetenv("RGHW_CAP");
  CHECK(run({"table", "--q", "2", "--k1", "2", "--k2", "3"}).code == 0);
}

TEST_CASE("output is byte-stable and independent of worker count") {
  std::vector<std::string> base{"table", "--q", "2", "--k1", "3", "--k2", "2"};
  for (const char* fmt : {"json", "csv", "pretty"}) {
    auto args = base;
    args.insert(args.end(), {"--format", fmt});
    auto a = run(args);
    auto b = run(args);
    auto w = args;
    w.insert(w.end(), {"--workers", "3"});
    auto c = run(w);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
}

TEST_CASE("CSV carries the same numbers as JSON") {
  std::vector<std::string> base{"table", "--q", "3", "--k1", "3", "--k2", "2", "--e1", "2", "--e2", "1"};
  auto j = run([&] { auto a = base; a.insert(a.end(), {"--format", "json"}); return a; }());
  auto c = run([&] { auto a = base; a.insert(a.end(), {"--format", "csv"}); return a; }());
  REQUIRE(j.code == 0);
  REQUIRE(c.code == 0);
  auto doc = json::parse(j.out);
  auto rows = csv_rows(c.out);
  REQUIRE(rows.size() == doc["results"].size() + 1);
  const auto& h = rows[0];
  auto col = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(h.begin(), h.end(), name) - h.begin());
  };
  for (std::size_t i = 0; i < doc["results"].size(); ++i) {
    const auto& res = doc["results"][i];
    const auto& row = rows[i + 1];
    CHECK(row[col("n")] == doc["spec"]["n"].dump());
    CHECK(row[col("j")] == res["j"].dump());
    CHECK(row[col("bruteforce")] == res["routes"]["bruteforce"].dump());
    CHECK(row[col("theorem1")] == res["routes"]["theorem1"].dump());
    CHECK(row[col("closed_form")] == res["routes"]["closed_form"].dump());
    CHECK(row[col("N")] == res["N"].dump());
    CHECK(row[col("agree")] == res["agree"].dump());
  }
}

TEST_CASE("gauss listings") {
  auto r = run({"gauss", "--q", "5"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  REQUIRE(doc["rows"].size() == 4);
  for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(doc["rows"][i]["modulus"].get<double>() - std::sqrt(5.0)) < 1e-9);

  auto two = json::parse(run({"gauss", "--q", "2", "--beta", "0"}).out);
  REQUIRE(two["rows"].size() == 1);
  CHECK(two["rows"][0]["re"] == 1.0);

  auto nine = json::parse(run({"gauss", "--q", "9", "--lambda", "0", "--beta", "0"}).out);
  REQUIRE(nine["rows"].size() == 1);
  CHECK(nine["rows"][0]["re"] == 8.0);
  CHECK(nine["rows"][0]["im"] == 0.0);

  CHECK(json::parse(run({"gauss", "--q", "4", "--dump-field"}).out)["tables"]["exp_table"].size() == 3);
  CHECK(run({"gauss", "--q", "9", "--lambda", "8"}).code == 2);
  CHECK(run({"gauss", "--q", "10"}).code == 2);

  auto csv = csv_rows(run({"gauss", "--q", "5", "--format", "csv"}).out);
  REQUIRE(csv.size() == 5);
  CHECK(csv[0] == std::vector<std::string>{"lambda", "beta", "re", "im", "modulus"});
  for (std::size_t i = 0; i < 4; ++i) CHECK(csv[i + 1][4] == doc["rows"][i]["modulus"].dump());
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "gauss"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  REQUIRE(doc["suites"].size() == 1);
  CHECK(doc["suites"][0]["name"] == "gauss");
  CHECK(doc["passed"] == true);

  auto c = run({"verify", "--seed", "7", "--samples", "100", "--suite", "charsum"});
  REQUIRE(c.code == 0);
  auto cd = json::parse(c.out);
  CHECK(cd["suites"][0]["max_residual"].get<double>() < 1e-6);
  CHECK(run({"verify", "--seed", "7", "--samples", "100", "--suite", "charsum"}).out == c.out);

  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("bench") {
  auto r = run({"bench", "--q", "2", "--k1", "2", "--k2", "3", "--repeat", "2", "--routes", "theorem1,closed_form"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  REQUIRE(doc["results"].size() == 4);
  CHECK(doc["results"][0]["route"] == "theorem1");
  CHECK(doc["results"][0]["value"] == 10);
  CHECK(doc["results"][3]["value"] == 15);
  CHECK(run({"bench", "--q", "2", "--k1", "2", "--k2", "3", "--repeat", "0"}).code == 2);
}

TEST_CASE("--out writes the report to a file") {
  auto path = std::filesystem::temp_directory_path() / "rghw_cli_test_out.json";
  std::filesystem::remove(path);
  auto r = run({"table", "--q", "2", "--k1", "2", "--k2", "3", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == run({"table", "--q", "2", "--k1", "2", "--k2", "3"}).out);
  std::filesystem::remove(path);
  CHECK(run({"table", "--q", "2", "--k1", "2", "--k2", "3", "--out", "/nonexistent/dir/x.json"}).code == 2);
}
