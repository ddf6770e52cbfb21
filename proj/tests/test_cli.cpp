// Copyright 2026 The sesqui Authors.
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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = sesqui::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kKappa = SESQUI_DATA_DIR "/kappa.rules";
const std::string kKappaPrime = SESQUI_DATA_DIR "/kappa-prime.rules";

}  // namespace

TEST_CASE("encode") {
  auto r = run({"encode", "--base", "3/2", "0..10"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n1\n2\n20\n21\n22\n210\n211\n212\n2100\n2101\n");
  r = run({"encode", "--variant", "afs", "0..10"});
  CHECK(r.out == "ε\n2\n21\n210\n212\n2101\n2120\n2122\n21011\n21200\n21202\n");
  r = run({"encode", "--format", "bfile", "3", "7"});
  CHECK(r.out == "3 20\n7 211\n");
  CHECK(run({"encode", "--", "-1"}).code == 2);
  CHECK(run({"encode", "5..2"}).code == 2);
  CHECK(run({"encode", "--base", "4/2", "3"}).code == 2);
  CHECK(run({"encode", "--variant", "xyz", "3"}).code == 2);
}

TEST_CASE("decode") {
  CHECK(run({"decode", "--variant", "afs", "21202"}).out == "10\n");
  CHECK(run({"decode", "2101", "ε"}).out == "10\n0\n");
  auto r = run({"decode", "--variant", "afs", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "not-natural digits=1 value=1/2\n");
  r = run({"decode", "--variant", "afs", "--strict", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("value=1/2") != std::string::npos);
  CHECK(run({"decode", "--strict", "0210"}).code == 1);
  CHECK(run({"decode", "0210"}).out == "6\n");
  CHECK(run({"decode", "13"}).code == 2);
}

TEST_CASE("seq") {
  auto r = run({"seq", "t32", "-n", "25", "--format", "plain"});
  CHECK(r.out == "0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 1\n");
  r = run({"seq", "s32", "-n", "36", "--format", "plain"});
  CHECK(r.out ==
        "0, 1, 2, 2, 3, 4, 3, 4, 5, 3, 4, 5, 5, 6, 7, 4, 5, 6, 5, 6, 7, 7, 8, 9, 5, 6, 7, 5, 6, "
        "7, 7, 8, 9, 8, 9, 10\n");
  CHECK(run({"seq", "t32", "-n", "1"}).out == "0\n");
  CHECK(run({"seq", "sq-digits", "-n", "8", "--format", "bfile"}).out ==
        "0 0\n1 1\n2 2\n3 20\n4 21\n5 22\n6 210\n7 211\n");
  CHECK(run({"seq", "s32", "-n", "3", "--format", "csv"}).out == "n,value\n0,0\n1,1\n2,2\n");
  CHECK(run({"seq", "t32", "-n", "2", "--format", "json-lines"}).out ==
        "{\"n\":0,\"value\":0}\n{\"n\":1,\"value\":1}\n");
  for (const char* name : {"s32", "t32", "ttilde"})
    CHECK(run({"seq", name, "-n", "5000", "--format", "bfile", "--method", "fixpoint"}).out ==
          run({"seq", name, "-n", "5000", "--format", "bfile", "--method", "direct"}).out);
  CHECK(run({"seq", "foo", "-n", "3"}).code == 2);
  CHECK(run({"seq", "t32", "-n", "0"}).code == 2);
  CHECK(run({"seq", "t32"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("subst") {
  CHECK(run({"subst", "apply", "--rules", kKappa, "0100"}).out == "010010\n");
  CHECK(run({"subst", "fixpoint", "--rules", kKappa, "--seed", "0100", "-n", "25"}).out ==
        "0100101011011010101011011\n");
  CHECK(run({"subst", "fixpoint", "--rules", kKappa, "-n", "9"}).out == "010010101\n");
  CHECK(run({"subst", "fixpoint", "--rules", kKappaPrime, "--seed", "0011", "-n", "3"}).out ==
        "001\n");
  auto r = run({"subst", "fixpoint", "--rules", kKappaPrime, "--seed", "0010", "-n", "3"});
  CHECK(r.code == 1);
  CHECK(r.err.find("not a prefix") != std::string::npos);
  CHECK(run({"subst", "fixpoint", "--rules", kKappa, "--seed", "010", "-n", "9"}).code == 1);
  CHECK(run({"subst", "apply", "--rules", kKappa, "010"}).code == 1);
  CHECK(run({"subst", "apply", "--rules", "/nonexistent.rules", "01"}).code == 1);

  const std::string bad = "sesqui_test_bad.rules";
  std::ofstream(bad) << "2 3\n00 010\n01 01\n";
  r = run({"subst", "apply", "--rules", bad, "00"});
  std::remove(bad.c_str());
  CHECK(r.code == 1);
  CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("induce") {
  auto r = run({"induce", "--rules", kKappa, "-r", "2", "--labels", "sorted"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 3\nac bbb\nba bac\nbb bac\nbc bbb\ncb ccc\ncc cdb\ncd cdb\ndb ccc\n"
                   "code 00 a\ncode 01 b\ncode 10 c\ncode 11 d\n") != std::string::npos);
  CHECK(r.out.find("#   1101 101010\n") != std::string::npos);

  r = run({"induce", "--rules", kKappa, "-r", "1"});
  CHECK(r.out.find("2 3\n00 010\n01 010\n10 101\n11 101\n") != std::string::npos);

  r = run({"induce", "--rules", kKappa, "-r", "2", "--code2", "ab=0,cd=1"});
  CHECK(r.out.find("2 3\n00 001\n01 000\n10 111\n11 110\n") != std::string::npos);

  r = run({"induce", "--rules", kKappa, "-r", "2", "--verify", "20000"});
  CHECK(r.out.find("checked=20000 mismatches=0") != std::string::npos);

  r = run({"induce", "--rules", kKappa, "-r", "3", "--prefix-len", "8"});
  CHECK(r.code == 1);
  CHECK(r.err.find("longer prefix") != std::string::npos);
  CHECK(run({"induce", "--rules", kKappa, "-r", "2", "--labels", "other"}).code == 2);

  SUBCASE("emitted rule files re-parse losslessly") {
    const std::string path = "sesqui_test_induced.rules";
    const auto first = run({"induce", "--rules", kKappa, "-r", "2"});
    std::ofstream(path) << first.out;
    const auto again = run({"subst", "fixpoint", "--rules", path, "--seed", "bacc", "-n", "12"});
    std::remove(path.c_str());
    CHECK(again.code == 0);
    CHECK(again.out == "baccdbccccdb\n");
  }
}

TEST_CASE("analyze") {
  auto r = run({"analyze", "factors", "t32", "-n", "100000", "-m", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("record=factors source=t32 n=100000 m=6 count=16\n") != std::string::npos);

  r = run({"analyze", "closure", "t32", "-n", "100000", "--m-max", "12", "--machine"});
  CHECK(r.code == 0);
  CHECK(r.out.find("kind=complement n=100000 m_max=12 unconfirmed=0") != std::string::npos);
  CHECK(r.out.find("kind=reversal n=100000 m_max=12 unconfirmed=0") != std::string::npos);
  CHECK(run({"analyze", "closure", "t32", "-n", "30", "--m-max", "8"}).code == 3);

  r = run({"analyze", "freq", "t32", "-n", "100000", "-w", "00,01"});
  CHECK(r.code == 0);
  CHECK(r.out.find("record=target word=01 target=4/10") != std::string::npos);
  CHECK(run({"analyze", "freq", "t32", "-n", "100000", "-w", "00,01", "--tolerance", "1e-7"})
            .code == 3);
  CHECK(run({"analyze", "freq", "t32", "-n", "1000"}).code == 2);

  r = run({"analyze", "gaps", "t32", "-n", "1000", "-w", "0,010"});
  CHECK(r.out.find("record=gaps word=0 n=1000 count=488 max_gap=3\n") != std::string::npos);
  CHECK(run({"analyze", "gaps", "t32", "-n", "1000", "-w", "111"}).code == 1);

  r = run({"analyze", "exponent", "t32", "-n", "100000", "--machine"});
  CHECK(r.code == 0);
  CHECK(r.out.find(" max=5/1 witness_start=18 witness_period=3 witness_length=15 "
                   "witness=101101101101101 bound=5/1 attains_bound=true "
                   "status=bounded-up-to-n\n") != std::string::npos);
  CHECK(run({"analyze", "exponent", "t32", "-n", "10000", "--bound", "4"}).code == 3);
  CHECK(run({"analyze", "exponent", "--rules", kKappa, "-n", "10000"}).code == 0);
}

TEST_CASE("determinism and config files") {
  const std::vector<std::string> args{"induce", "--rules", kKappa, "-r", "3"};
  CHECK(run(args).out == run(args).out);

  const std::string path = "sesqui_test.ini";
  std::ofstream(path) << "[seq]\nn=4\nformat=\"bfile\"\n";
  const auto r = run({"--config", path, "seq", "t32"});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(r.out == "0 0\n1 1\n2 0\n3 0\n");
}
