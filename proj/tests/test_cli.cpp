#include <gtest/gtest.h>

#include <sstream>

#include "ulam/ulam.hpp"
#include "ulam_cli.hpp"

using namespace ulam;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SequenceCsv) {
  const auto r = run({"sequence", "--class", "u", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,k,count\n4,1,1\n4,2,13\n4,3,9\n4,4,1\n");
}

TEST(Cli, SequenceJsonRoundTrips) {
  const auto r = run({"sequence", "--class", "p", "--lm", "2,4", "--n", "7", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto s = sequence_from_json(nlohmann::json::parse(r.out));
  EXPECT_EQ(s, sequence({ClassKind::protected_tableaux, 2, 4}, 7));
  const auto csv = run({"sequence", "--class", "b", "--n", "6"});
  EXPECT_EQ(sequences_from_csv(csv.out, {ClassKind::avoid321_permutations}).front(),
            sequence({ClassKind::avoid321_permutations}, 6));
}

TEST(Cli, SequenceDeterministicAcrossThreads) {
  const auto a = run({"sequence", "--class", "u", "--n", "8", "--threads", "1"});
  const auto b = run({"sequence", "--class", "u", "--n", "8", "--threads", "5"});
  const auto c = run({"sequence", "--class", "u", "--n", "8", "--method", "shape"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, FlipAndPaths) {
  EXPECT_EQ(run({"path", "flip", "--p", "EENENNE", "--q", "ENEEEEE"}).out, "EENENEE ENEEENE\n");
  EXPECT_EQ(run({"path", "unflip", "--r", "EENENEE", "--s", "ENEEENE"}).out, "EENENNE ENEEEEE\n");
  EXPECT_EQ(run({"path", "--tableau", "1,3,4,5,6,7/2"}).out, "ENEEEEE\n");
  EXPECT_EQ(run({"path", "--steps", "ENEEEEE"}).out, "1,3,4,5,6,7/2\n");
  const auto bad = run({"path", "flip", "--p", "ENNE", "--q", "EEEE"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("ENNE"), std::string::npos);
}

TEST(Cli, Rsk) {
  EXPECT_EQ(run({"rsk", "--perm", "3,1,4,2"}).out, "P 1,2/3,4\nQ 1,3/2,4\n");
  EXPECT_EQ(run({"rsk", "--inverse", "1,2/3,4;1,3/2,4"}).out, "3,1,4,2\n");
  const auto bad = run({"rsk", "--perm", "3,1,3"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("3,1,3"), std::string::npos);
  EXPECT_EQ(run({"rsk", "--inverse", "1,2;1/2"}).code, 2);
}

TEST(Cli, Inject) {
  EXPECT_EQ(run({"inject", "hook", "--t1", "1/2/3", "--t2", "1,2,3"}).out, "1,2/3 1,3/2\n");
  EXPECT_EQ(run({"inject", "hook", "--t1", "1,2/3/4/5", "--t2", "1,2,4,5/3"}).out,
            "1,2,4/3/5 1,2,5/3/4\n");
  EXPECT_EQ(run({"inject", "protected", "--t1", "1,3,6,9/2,4,7,15/5,8/10,13/11/12/14", "--t2",
                 "1,2,3,4,11,14/5,6,8,12/7,10,13,15/9"})
                .out,
            "1,3,6,9,12/2,4,7,15/5,8/10,13/11/14 1,2,3,4,14/5,6,8,12/7,10,13,15/9/11\n");
  EXPECT_EQ(run({"inject", "hook", "--t1", "1,2/3,4", "--t2", "1,2,3,4"}).code, 2);
}

TEST(Cli, Verify) {
  const auto c = run({"verify", "conjecture", "--n-max", "3"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("n=3 u: 1 4 1  holds"), std::string::npos) << c.out;
  EXPECT_EQ(run({"verify", "formulas", "--n-max", "6"}).code, 0);
  EXPECT_EQ(run({"verify", "injection", "--kind", "hook", "--n", "7"}).code, 0);
  EXPECT_EQ(run({"verify", "injection", "--kind", "flip", "--n", "7", "--k", "4"}).code, 0);
  EXPECT_EQ(run({"verify", "injection", "--kind", "protected", "--n", "7", "--lm", "2,4"}).code, 0);
  EXPECT_EQ(run({"verify", "injection", "--kind", "lift", "--n", "5", "--class", "two-row"}).code, 0);
  EXPECT_EQ(run({"verify", "injection", "--kind", "flip", "--n", "7", "--k", "2"}).code, 2);
  const auto j = run({"verify", "conjecture", "--n-max", "5", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out).size(), 5u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"sequence", "--class", "zz", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"sequence", "--class", "u", "--n", "x"}).code, 2);
  EXPECT_EQ(run({"sequence", "--class", "p", "--n", "5"}).code, 2);
  EXPECT_EQ(run({"sequence", "--class", "u", "--n", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BudgetRefusal) {
  const auto r = run({"sequence", "--class", "u", "--n", "13"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ULAM_BUDGET"), std::string::npos);
}
