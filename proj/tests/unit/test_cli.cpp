#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"

using ncball::cli::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ncball::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, KTheoryOfTheEvenBall) {
  const auto r = run({"ktheory", "--graph", "M", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["K0"], (Json{{"rank", 1}, {"torsion", Json::array()}}));
  EXPECT_EQ(j["K1"], (Json{{"rank", 0}, {"torsion", Json::array()}}));
  EXPECT_EQ(j["command"]["verb"], "ktheory");
}

TEST(Cli, MirrorIndex) {
  const auto r = run({"index", "--beta", "mirror", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["index"], Json::array({-1, 1}));
  EXPECT_EQ(r.json()["generator_relation"], "p1=p2");
  const auto id = run({"index", "--beta", "identity", "--n", "2"});
  EXPECT_EQ(id.json()["index"], Json::array({-1, -1}));
}

TEST(Cli, NormalForms) {
  auto nf = [](std::vector<std::string> a) { return run(std::move(a)).json()["normal_form"].get<std::string>(); };
  EXPECT_EQ(nf({"nf", "--family", "boundary-even", "--n", "2", "--expr", "w1'*w1 - w1*w1'"}), "0");
  EXPECT_EQ(nf({"nf", "--family", "ball-even", "--n", "2", "--expr", "z2'*z2"}), "q z2 z2' + (1 - q)");
  EXPECT_EQ(nf({"nf", "--family", "ball-even", "--n", "1", "--expr", "z1"}), "z1");
  EXPECT_EQ(run({"nf", "--family", "ball-even", "--n", "1", "--expr", "z1"}).code, 0);
}

TEST(Cli, VerifyCatalogPasses) {
  const auto r = run({"verify", "--family", "ball-even", "--n", "2", "--q", "0.5", "--cutoff", "8", "--margin", "2"});
  EXPECT_EQ(r.code, 0);
  const auto j = r.json();
  EXPECT_EQ(j["summary"]["failed"], 0);
  EXPECT_GT(j["summary"]["passed"].get<int>(), 0);
}

TEST(Cli, FailingChecksExitOne) {
  // Margin 0 exposes the truncation edge, so relation checks fail.
  const auto r = run({"verify", "--family", "ball-even", "--n", "1", "--margin", "0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_GT(r.json()["summary"]["failed"].get<int>(), 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"verify", "--q", "1.5"}).code, 2);
  EXPECT_EQ(run({"verify", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"ktheory", "--graph", "Q"}).code, 2);
  const auto bad = run({"nf", "--family", "ball-even", "--n", "2", "--expr", "z1 * + z2"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("^"), std::string::npos);
  EXPECT_EQ(run({"nf", "--family", "ball-even", "--n", "2", "--expr", "z3"}).code, 2);
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"mirror", "--n", "2"}, {"reps", "--family", "boundary-odd", "--n", "2"},
        {"suspend", "--n", "1", "--cutoff", "5"}, {"ktheory", "--edges", "2;1>1;1>2"}}) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.code, 0) << a.out << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, TextFormat) {
  const auto r = run({"--format", "text", "ktheory", "--graph", "L-odd", "--n", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("K1"), std::string::npos);
  EXPECT_THROW(Json::parse(r.out), Json::parse_error);
}
