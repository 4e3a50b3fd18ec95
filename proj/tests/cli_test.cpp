// Copyright 2026 The Fourier Knots Authors.
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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult RunKnot(const std::string& args) {
  const std::string cmd = std::string(KNOT_BIN) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

int ExitOf(const std::string& args) { return RunKnot(args).status; }

int Count(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

TEST(KnotCli, GenEmitsKnotJson) {
  const RunResult r = RunKnot("gen -p 3 -q 7");
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["y"][0][1], 7);
  EXPECT_NE(r.out.find("0.5235987755982988"), std::string::npos);
  EXPECT_EQ(RunKnot("gen -p 2 -q 3 --standard").status, 0);
  EXPECT_EQ(RunKnot("gen -p 2 -q 3 --simplified").status, 0);
}

TEST(KnotCli, InvalidArgumentsExitTwo) {
  EXPECT_EQ(ExitOf("gen -p 3 -q 3"), 2);
  EXPECT_EQ(ExitOf("crossings -p 2 -q 4"), 2);
  EXPECT_EQ(ExitOf("gen -p 3 -q 5 --simplified"), 2);
  EXPECT_EQ(ExitOf("gen -p 2 -q 3 --standard --major 1 --minor 2"), 2);
  EXPECT_EQ(ExitOf("phase-map --grid 8"), 2);
  EXPECT_EQ(ExitOf("crossings -p 3 -q 7 --numeric --grid 16"), 2);
  EXPECT_EQ(ExitOf("no-such-command"), 2);
  EXPECT_EQ(ExitOf("verify --pmax 2 --qmax 2"), 2);
}

TEST(KnotCli, ErrorMessageNamesConstraint) {
  const std::string cmd = std::string(KNOT_BIN) + " gen -p 3 -q 3 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string text;
  std::array<char, 512> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), n);
  pclose(pipe);
  EXPECT_NE(text.find("p < q required"), std::string::npos) << text;
}

TEST(KnotCli, CrossingsFormats) {
  const RunResult json = RunKnot("crossings -p 3 -q 7 --format json");
  ASSERT_EQ(json.status, 0);
  EXPECT_EQ(nlohmann::json::parse(json.out).size(), 32u);
  EXPECT_EQ(RunKnot("crossings -p 3 -q 7 --format json").out, json.out);

  const RunResult csv = RunKnot("crossings -p 3 -q 7 --format csv");
  ASSERT_EQ(csv.status, 0);
  EXPECT_EQ(Count(csv.out, "\n"), 33);
  EXPECT_EQ(csv.out.rfind("kind,k,j,t1,t2,sign,over,x,y\n", 0), 0u);
}

TEST(KnotCli, NumericCheckAgrees) {
  EXPECT_EQ(ExitOf("crossings -p 2 -q 3 --numeric --grid 512 --check"), 0);
  EXPECT_EQ(ExitOf("crossings -p 3 -q 7 --numeric --grid 2048 --check"), 0);
}

TEST(KnotCli, VerifyPasses) {
  const RunResult small = RunKnot("verify --pmax 2 --qmax 3");
  EXPECT_EQ(small.status, 0);
  EXPECT_NE(small.out.find("1/1 pairs pass"), std::string::npos);

  const RunResult r = RunKnot("verify --pmax 5 --qmax 9");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("15/15 pairs pass"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("certified as: (1/p - 1/q) * pi/2"), std::string::npos);
  EXPECT_EQ(Count(r.out, "FAIL"), 0);
}

TEST(KnotCli, RenderHasOneBreakPerCrossing) {
  const RunResult r = RunKnot("render -p 3 -q 7");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(Count(r.out, "class=\"strand\""), 32);
  EXPECT_EQ(Count(RunKnot("render -p 2 -q 3").out, "class=\"strand\""), 7);
}

TEST(KnotCli, PhaseMapOutputs) {
  const RunResult svg = RunKnot("phase-map -p 2 -q 3 --grid 64 --mark-theorem-points");
  ASSERT_EQ(svg.status, 0);
  EXPECT_EQ(Count(svg.out, "theorem-point"), 1);
  const auto png = std::filesystem::temp_directory_path() / "fknot_cli_map.png";
  EXPECT_EQ(ExitOf("phase-map -p 3 -q 5 --grid 64 -o " + png.string()), 0);
  std::ifstream in(png, std::ios::binary);
  char sig[4] = {};
  in.read(sig, 4);
  EXPECT_EQ(std::string(sig + 1, 3), "PNG");
  std::filesystem::remove(png);
}

}  // namespace
