// Copyright 2026 The constq-waves Authors
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


#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "constq/cli/cli.hpp"
#include "constq/green.hpp"
#include "constq/stable.hpp"
#include "constq/version.hpp"
#include "test_support.hpp"

using namespace constq;

namespace {

constexpr double kPi = std::numbers::pi;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Table {
  std::string comment;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  double num(std::size_t row, std::size_t col) const { return std::stod(rows[row][col]); }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

Table parse(const std::string& text) {
  Table t;
  std::stringstream ss(text);
  std::string line;
  std::getline(ss, t.comment);
  std::getline(ss, line);
  t.columns = split(line);
  while (std::getline(ss, line)) t.rows.push_back(split(line));
  return t;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

}  // namespace

TEST_CASE("usage errors exit with status 2") {
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"no-such-command"}).code == cli::kExitUsage);
  CHECK(invoke({"eval-m", "--beta", "1.5"}).code == cli::kExitUsage);
  CHECK(invoke({"eval-m"}).code == cli::kExitUsage);
  CHECK(invoke({"eval-m", "--beta", "0.5", "--q", "100"}).code == cli::kExitUsage);
  CHECK(invoke({"eval-m", "--beta", "0.5", "--steps", "1"}).code == cli::kExitUsage);
  CHECK(invoke({"eval-m", "--beta", "0.5", "--rmin", "3", "--rmax", "1"}).code == cli::kExitUsage);
  CHECK(invoke({"eval-m", "--beta", "0.5", "--method", "magic"}).code == cli::kExitUsage);
  CHECK(invoke({"material"}).code == cli::kExitUsage);
  CHECK(invoke({"material", "--nu", "0.5", "--q", "10"}).code == cli::kExitUsage);
  CHECK(invoke({"pulse", "--beta", "0.5", "--axis", "diagonal"}).code == cli::kExitUsage);
  CHECK(invoke({"stable", "--alpha", "0.5", "--theta", "0.9"}).code == cli::kExitUsage);
  const Run r = invoke({"eval-m", "--beta", "2"});
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("evaluation failures exit with status 1") {
  const Run r = invoke({"eval-m", "--beta", "0.99", "--method", "series", "--rmax", "4", "--steps", "5"});
  CHECK(r.code == cli::kExitEvaluation);
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("version flag") {
  const Run r = invoke({"--version"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find(kVersion) != std::string::npos);
}

TEST_CASE("eval-m table layout") {
  const Run r = invoke({"eval-m", "--beta", "0.75", "--rmax", "4", "--steps", "401"});
  REQUIRE(r.code == cli::kExitOk);
  const Table t = parse(r.out);
  CHECK(t.comment == std::string("# constq-waves v") + kVersion);
  CHECK(t.columns == std::vector<std::string>{"r", "M", "F", "method", "est_abs_error"});
  REQUIRE(t.rows.size() == 401);
  CHECK(t.num(0, 0) == 0.0);
  CHECK(t.num(400, 0) == 4.0);
  CHECK(r.out.find('\r') == std::string::npos);
  CHECK(t.rows[0][1].find('e') != std::string::npos);
}

TEST_CASE("eval-m is single peaked for beta 3/4") {
  const Table t = parse(invoke({"eval-m", "--beta", "0.75", "--rmax", "4", "--steps", "401"}).out);
  int changes = 0;
  for (std::size_t i = 2; i < t.rows.size(); ++i) {
    const double d1 = t.num(i - 1, 1) - t.num(i - 2, 1);
    const double d2 = t.num(i, 1) - t.num(i - 1, 1);
    if ((d1 > 0.0) != (d2 > 0.0)) ++changes;
  }
  CHECK(changes == 1);
}

TEST_CASE("eval-m is strictly decreasing for beta 1/4") {
  const Table t = parse(invoke({"eval-m", "--beta", "0.25", "--rmax", "4", "--steps", "401"}).out);
  REQUIRE(t.rows.size() == 401);
  for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.num(i, 1) < t.num(i - 1, 1));
}

TEST_CASE("eval-m matches the closed form at beta 1/2") {
  const Table t = parse(invoke({"eval-m", "--beta", "0.5"}).out);
  REQUIRE(t.rows.size() == 401);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double r = t.num(i, 0);
    CHECK_CLOSE(t.num(i, 1), std::exp(-r * r / 4.0) / std::sqrt(kPi), 1e-12);
  }
}

TEST_CASE("eval-m accepts a quality factor") {
  const Table t = parse(invoke({"eval-m", "--q", "10", "--rmax", "1", "--steps", "3"}).out);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.num(2, 0) == 1.0);
  CHECK(t.num(2, 1) > 0.0);
}

TEST_CASE("repeated invocations are byte identical") {
  const std::vector<std::string> args = {"eval-m", "--beta", "0.6", "--rmax", "5", "--steps", "101"};
  const Run a = invoke(args);
  const Run b = invoke(args);
  REQUIRE(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
}

TEST_CASE("pulse in space for a nearly elastic medium") {
  const Table t = parse(invoke({"pulse", "--axis", "space", "--epsilon", "0.01", "--xmax", "2", "--steps", "400"}).out);
  REQUIRE(t.rows.size() == 400);
  CHECK(t.columns == std::vector<std::string>{"x", "G_c"});
  std::size_t best = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.num(i, 1) > t.num(best, 1)) best = i;
  CHECK(std::abs(std::abs(t.num(best, 0)) - 1.0) < 0.1);
}

TEST_CASE("pulse in space is symmetric") {
  const Table t = parse(invoke({"pulse", "--axis", "space", "--beta", "0.5", "--t", "1"}).out);
  const std::size_t n = t.rows.size();
  REQUIRE(n == 401);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(t.num(i, 0) == -t.num(n - 1 - i, 0));
    CHECK(t.num(i, 1) == t.num(n - 1 - i, 1));
  }
}

TEST_CASE("pulse in time matches the closed form") {
  const Table t = parse(invoke({"pulse", "--axis", "time", "--beta", "0.5", "--x", "1"}).out);
  CHECK(t.columns == std::vector<std::string>{"t", "G_s"});
  REQUIRE(t.rows.size() == 401);
  CHECK(t.num(0, 1) == 0.0);
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    const double s = t.num(i, 0);
    const double want = std::exp(-1.0 / (4.0 * s)) / (2.0 * std::sqrt(kPi) * std::pow(s, 1.5));
    CHECK_CLOSE(t.num(i, 1), want, 1e-12);
  }
}

TEST_CASE("material output") {
  const Run q = invoke({"material", "--q", "1000"});
  REQUIRE(q.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(q.out);
  CHECK_REL(j["nu"].get<double>(), 0.00063661956016111788, 1e-14);
  CHECK_REL(j["beta"].get<double>(), 0.99968169021991944, 1e-14);
  CHECK_CLOSE(j["q_inv"].get<double>(), 1e-3, 1e-18);
  CHECK(j["approx_rel_err"].get<double>() < 1e-6);
  CHECK(j.size() == 5);

  const auto h = nlohmann::json::parse(invoke({"material", "--nu", "0.5"}).out);
  CHECK_CLOSE(h["q_inv"].get<double>(), 1.0, 1e-15);
  CHECK(h["beta"].get<double>() == 0.75);

  const auto v = nlohmann::json::parse(invoke({"material", "--nu", "1"}).out);
  CHECK(v["q_inv"] == "infinite");
  CHECK(v["beta"].get<double>() == 0.5);
  CHECK(v["nu_approx"].is_null());
}

TEST_CASE("stable output matches the Levy law") {
  const Table t = parse(invoke({"stable", "--alpha", "0.5", "--theta", "-0.5", "--ymax", "10"}).out);
  CHECK(t.columns == std::vector<std::string>{"y", "p", "path", "closed_form"});
  REQUIRE(t.rows.size() == 401);
  const stable::LevyParams levy(0.5);
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    const double y = t.num(i, 0);
    CHECK_CLOSE(t.num(i, 1), stable::levy_pdf(y, levy), 1e-10);
    CHECK_CLOSE(t.num(i, 3), stable::levy_pdf(y, levy), 1e-15);
  }
}

TEST_CASE("fracderiv of a constant is zero") {
  const Table t = parse(invoke({"fracderiv", "--kind", "caputo", "--alpha", "0.5", "--gamma", "0"}).out);
  REQUIRE(t.rows.size() == 101);
  for (std::size_t i = 0; i < t.rows.size(); ++i) CHECK(t.num(i, 1) == 0.0);
  const Table s =
      parse(invoke({"fracderiv", "--kind", "caputo", "--alpha", "0.5", "--gamma", "0", "--sampled"}).out);
  REQUIRE(s.columns.size() == 3);
  for (std::size_t i = 0; i < s.rows.size(); ++i) CHECK(std::abs(s.num(i, 2)) <= 1e-12);
}

TEST_CASE("fracderiv of t") {
  const Table t = parse(invoke({"fracderiv", "--kind", "caputo", "--alpha", "0.5", "--gamma", "1", "--tmax", "1"}).out);
  REQUIRE(t.rows.size() == 101);
  CHECK_CLOSE(t.num(100, 1), 1.0 / std::tgamma(1.5), 1e-14);
  const Table i = parse(invoke({"fracderiv", "--kind", "integral", "--alpha", "1", "--gamma", "1", "--tmax", "2"}).out);
  CHECK_CLOSE(i.num(100, 1), 2.0, 1e-14);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "constq_cli_out.csv";
  const Run r = invoke({"--out", path.string(), "eval-m", "--beta", "0.5", "--steps", "11"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == invoke({"eval-m", "--beta", "0.5", "--steps", "11"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("selftest passes") {
  const auto results = cli::run_selftest();
  CHECK(results.size() > 10);
  for (const auto& r : results) {
    CAPTURE(r.suite);
    CAPTURE(r.name);
    CAPTURE(r.note);
    CHECK(r.passed);
  }
}

TEST_CASE("installed executable") {
  int status = -1;
  const std::string exe = CONSTQ_WAVES_EXE;
  const std::string a = capture(exe + " eval-m --beta 0.3 --steps 51", status);
  CHECK(status == 0);
  const std::string b = capture(exe + " eval-m --beta 0.3 --steps 51", status);
  CHECK(a == b);
  CHECK(a == invoke({"eval-m", "--beta", "0.3", "--steps", "51"}).out);
  capture(exe + " eval-m --beta 7 2>/dev/null", status);
  CHECK(status == 2);
  capture(exe + " eval-m --beta 0.99 --method series --steps 3 2>/dev/null", status);
  CHECK(status == 1);
  const std::string self = capture(exe + " selftest", status);
  CHECK(status == 0);
  CHECK(self.find("FAIL") == std::string::npos);
}
