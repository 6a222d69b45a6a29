#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

#include "hecke/serialize.hpp"
#include "hecke_tools/bench_harness.hpp"
#include "hecke_tools/commands.hpp"

using testing::HasSubstr;
using testing::StartsWith;

namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = hecke::tools::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

const char* kExampleH = R"({"repr":"nested","m":2,"tree":[[[1,2],[3]],[[-4],[5,0,1]],[[6],[-7,1]]]})";
const char* kExampleG = R"({"repr":"nested","m":1,"tree":[[2,-1],[1,1]]})";

}  // namespace

TEST(CliTower, WorkedExample) {
  EXPECT_EQ(cli({"tower", "inv", "[1,2,1,3,1,3,0,1,7]"}).out, "[0,0,3,1,3,2,7,1,2]\n");
  EXPECT_EQ(cli({"tower", "fromperm", "(1,8,10,3)(2,4,6,7,5)"}).out, "[1,2,1,3,1,3,0,1,7]\n");
  EXPECT_EQ(cli({"tower", "perm", "[1,2,1,3,1,3,0,1,7]"}).out, "(1,8,10,3)(2,4,6,7,5)\n");
  EXPECT_EQ(cli({"tower", "perm", "--images", "[1,2,1,3,1,3,0,1,7]"}).out, "[8,4,1,6,2,7,5,10,9,3]\n");
  EXPECT_EQ(cli({"tower", "len", "[1,2,1,3,1,3,0,1,7]"}).out, "19\n");
  EXPECT_EQ(cli({"tower", "descents", "[1,2,1,3,1,3,0,1,7]"}).out, "[1,2,4,6,8,9]\n");
  EXPECT_EQ(cli({"tower", "word", "[1,2,1,3,1,3,0,1,7]"}).out, "[1,2,1,3,4,3,2,5,6,5,4,8,9,8,7,6,5,4,3]\n");
}

TEST(CliTower, SmallCases) {
  EXPECT_EQ(cli({"tower", "len", "[]"}).out, "0\n");
  EXPECT_EQ(cli({"tower", "mult", "[1]", "[1]"}).out, "[]\n");
  EXPECT_EQ(cli({"tower", "mult", "[0,1]", "[1]"}).out, "[0,2]\n");
  EXPECT_EQ(cli({"tower", "mult", "[1]", "[0,1]"}).out, "[1,1]\n");
  EXPECT_EQ(cli({"tower", "diagram", "[]"}).out, "(identity)\n");
}

TEST(CliTower, DiagramColumnHeightsAreTheDigits) {
  const CliRun r = cli({"tower", "diagram", "[1,2,1,3,1,3,0,1,7]"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(hecke::diagram_column_heights(r.out), (std::vector<int>{1, 2, 1, 3, 1, 3, 0, 1, 7}));
}

TEST(CliTower, ErrorsNamePosition) {
  const CliRun r = cli({"tower", "inv", "[1,3,0]"});
  EXPECT_EQ(r.status, 1);
  EXPECT_THAT(r.err, HasSubstr("position 2"));
  EXPECT_NE(cli({"tower", "mult", "[1]"}).status, 0);
  EXPECT_NE(cli({"tower", "frobnicate", "[1]"}).status, 0);
  EXPECT_NE(cli({"tower", "fromperm", "[1,1,2]"}).status, 0);
}

TEST(CliHecke, UnitTimesUnit) {
  for (const char* repr : {"simple", "nested"}) {
    const CliRun r = cli({"hecke", "--repr", repr, R"({"repr":"simple","m":2,"coeffs":[{"rank":0,"poly":[1]}]})",
                       R"({"repr":"nested","m":2,"tree":[[[1],[]],[[],[]],[[],[]]]})", "--format", "text"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out, "T[]\n");
  }
}

TEST(CliHecke, WorkedExampleCounts27InBothRepresentations) {
  const CliRun nested = cli({"hecke", kExampleH, kExampleG, "--repr", "nested", "--count"});
  const CliRun simple = cli({"hecke", kExampleH, kExampleG, "--repr", "simple", "--count"});
  ASSERT_EQ(nested.status, 0) << nested.err;
  ASSERT_EQ(simple.status, 0) << simple.err;
  EXPECT_THAT(nested.out, HasSubstr("\nops=27 "));
  EXPECT_THAT(simple.out, HasSubstr("\nops=27 "));

  const std::string nested_json = nested.out.substr(0, nested.out.find('\n'));
  const std::string simple_json = simple.out.substr(0, simple.out.find('\n'));
  EXPECT_EQ(hecke::as_simple(hecke::parse_hecke_json(nested_json)),
            hecke::as_simple(hecke::parse_hecke_json(simple_json)));
  EXPECT_THAT(nested_json, StartsWith(R"({"m":2,"repr":"nested")"));
}

TEST(CliHecke, ReadsFiles) {
  const std::string path = testing::TempDir() + "hecke_cli_h.json";
  std::ofstream(path) << kExampleH;
  const CliRun r = cli({"hecke", path, kExampleG, "--format", "text"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, cli({"hecke", kExampleH, kExampleG, "--format", "text"}).out);
}

TEST(CliHecke, Errors) {
  CliRun r = cli({"hecke", kExampleG, kExampleH});
  EXPECT_EQ(r.status, 1);
  EXPECT_THAT(r.err, HasSubstr("rank mismatch"));
  r = cli({"hecke", "{not json", kExampleG});
  EXPECT_EQ(r.status, 1);
  EXPECT_THAT(r.err, HasSubstr("malformed JSON"));
  EXPECT_NE(cli({"hecke", kExampleH, kExampleG, "--repr", "sparse"}).status, 0);
  EXPECT_NE(cli({"hecke", "/no/such/file.json", kExampleG}).status, 0);
}

TEST(CliBench, HeaderOnlyForZeroTrials) {
  const CliRun r = cli({"bench", "--trials", "0"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "m,repr,trials,M,max_ops,bound,ratio,wall_ns\n");
}

TEST(CliBench, RowsWithinBounds) {
  const CliRun r = cli({"bench", "--m-max", "3", "--trials", "3", "--seed", "9"});
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string x; std::getline(ss, x, ',');) f.push_back(x);
    ASSERT_EQ(f.size(), 8u) << line;
    EXPECT_LE(std::stod(f[6]), 1.0) << line;
    EXPECT_LE(std::stod(f[4]), std::stod(f[5])) << line;
    EXPECT_EQ(f[7], "0");
  }
  EXPECT_EQ(rows, 4);
  EXPECT_THAT(r.out, HasSubstr("3,simple,3,24,"));
}

TEST(CliBench, KnownBoundsAtSmallRanks) {
  hecke::tools::BenchConfig config;
  config.m_max = 3;
  config.trials = 2;
  const auto rows = hecke::tools::run_bench(config);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[1].m, 2);
  EXPECT_EQ(rows[1].repr, hecke::tools::Repr::nested);
  EXPECT_LE(rows[1].max_ops, 134u);
  EXPECT_EQ(rows[2].m, 3);
  EXPECT_EQ(rows[2].repr, hecke::tools::Repr::simple);
  EXPECT_LE(rows[2].max_ops, 4608u);
}

TEST(CliBench, SeedAndEnvironmentOverride) {
  const CliRun a = cli({"bench", "--m-max", "2", "--trials", "2", "--seed", "1"});
  const CliRun b = cli({"bench", "--m-max", "2", "--trials", "2", "--seed", "1"});
  EXPECT_EQ(a.out, b.out);
  setenv("HECKE_SEED", "123", 1);
  const CliRun c = cli({"bench", "--m-max", "2", "--trials", "2", "--seed", "1"});
  unsetenv("HECKE_SEED");
  EXPECT_EQ(c.status, 0);
  // Dense counts do not depend on the sample, so the CSV is the same.
  EXPECT_EQ(a.out, c.out);
  const auto p1 = hecke::tools::random_dense_pair(3, 1, 0);
  const auto p2 = hecke::tools::random_dense_pair(3, 123, 0);
  EXPECT_NE(p1.first, p2.first);
  EXPECT_EQ(p1.first, hecke::tools::random_dense_pair(3, 1, 0).first);
}

TEST(CliBench, JobsDoNotChangeOutput) {
  EXPECT_EQ(cli({"bench", "--m-max", "3", "--trials", "4", "--jobs", "3"}).out,
            cli({"bench", "--m-max", "3", "--trials", "4"}).out);
}

TEST(CliBench, RefusesOversizedRanks) {
  CliRun r = cli({"bench", "--m-max", "7"});
  EXPECT_EQ(r.status, 1);
  EXPECT_THAT(r.err, HasSubstr("M = 40320"));
  EXPECT_THAT(r.err, HasSubstr("MB"));
  r = cli({"bench", "--m-max", "6"});
  EXPECT_EQ(r.status, 1);
  EXPECT_THAT(r.err, HasSubstr("--big"));
}

TEST(CliBench, TimingFillsWallClock) {
  const CliRun r = cli({"bench", "--m-max", "2", "--trials", "1", "--timing"});
  ASSERT_EQ(r.status, 0);
  EXPECT_THAT(r.out, testing::Not(HasSubstr(",0\n")));
}

TEST(CliBench, WritesOutputFile) {
  const std::string path = testing::TempDir() + "hecke_bench.csv";
  ASSERT_EQ(cli({"bench", "--m-max", "2", "--trials", "1", "--out", path}).status, 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), cli({"bench", "--m-max", "2", "--trials", "1"}).out);
}

TEST(CliVerify, TowerGroupPasses) {
  const CliRun r = cli({"verify", "--only", "towers"});
  EXPECT_EQ(r.status, 0) << r.out << r.err;
  EXPECT_THAT(r.out, HasSubstr("PASS  5 mu-soundness"));
  EXPECT_THAT(r.out, HasSubstr("5/5 criteria passed"));
  EXPECT_THAT(r.out, testing::Not(HasSubstr("hecke-relations")));
}

TEST(CliVerify, SingleCriterionByName) {
  const CliRun r = cli({"verify", "--only", "example-cost"});
  EXPECT_EQ(r.status, 0);
  EXPECT_THAT(r.out, HasSubstr("PASS  9 example-cost"));
  EXPECT_THAT(r.out, HasSubstr("1/1 criteria passed"));
}

TEST(CliVerify, InjectedMuFaultIsCaught) {
  const CliRun r = cli({"verify", "--only", "towers", "--inject-mu-fault"});
  EXPECT_NE(r.status, 0);
  EXPECT_THAT(r.out, HasSubstr("FAIL  5 mu-soundness"));
  EXPECT_THAT(r.err, HasSubstr("first failing criterion: 5 mu-soundness"));
}

TEST(CliVerify, UnknownSelection) {
  const CliRun r = cli({"verify", "--only", "nothing-here"});
  EXPECT_EQ(r.status, 1);
  EXPECT_THAT(r.err, HasSubstr("nothing-here"));
}

TEST(Cli, NeedsSubcommand) {
  EXPECT_NE(cli({}).status, 0);
  EXPECT_EQ(cli({"--help"}).status, 0);
}
