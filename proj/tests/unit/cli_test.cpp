// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "colorforge/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "colorforge/document.hpp"

namespace colorforge::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("colorforge-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }

  std::filesystem::path dir_;
};

std::string replaced(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  if (at != std::string::npos) text.replace(at, from.size(), to);
  return text;
}

TEST_F(CliFiles, Validate) {
  EXPECT_EQ(run({"validate", "paper-3bihomlie-z2"}).code, kPass);
  const std::string text = fixture_text("paper-3bihomlie-z2");
  EXPECT_EQ(run({"validate", write("a.json", text)}).code, kPass);

  const Outcome truncated = run({"validate", write("t.json", text.substr(0, 200))});
  EXPECT_EQ(truncated.code, kParseError);
  EXPECT_NE(truncated.err.find("line"), std::string::npos);

  // e1 e2 e3 has odd degree; a coefficient on e1 breaks homogeneity.
  const Outcome degree = run({"validate", write("d.json", replaced(text, R"("index": 2)", R"("index": 0)"))});
  EXPECT_EQ(degree.code, kAxiomFail);
  EXPECT_NE(degree.out.find("FAIL  grading.bracket"), std::string::npos);
  EXPECT_NE(degree.out.find("/ops/bracket/entries/0"), std::string::npos);

  const Outcome odd_map = run({"validate", write("m.json", replaced(text, R"(["0", "0", "1"]],)", R"(["1", "0", "1"]],)"))});
  EXPECT_EQ(odd_map.code, kAxiomFail);
  EXPECT_NE(odd_map.out.find("/maps/alpha/2/0"), std::string::npos);

  EXPECT_EQ(run({"validate", write("u.json", replaced(text, "\"kind\"", "\"knd\""))}).code, kParseError);
  EXPECT_EQ(run({"validate", (dir_ / "missing.json").string()}).code, kParseError);
}

TEST(Cli, CheckVerdictsAndWitness) {
  EXPECT_EQ(run({"check", "paper-poisson-z2"}).code, kPass);
  const Outcome a = run({"check", "paper-3bihomlie-z2"});
  EXPECT_EQ(a.code, kAxiomFail);
  EXPECT_NE(a.out.find("FAIL  multiplicative.alpha.bracket"), std::string::npos);
  EXPECT_NE(a.out.find("at (e1,e2,e3): [0,0,2] != [0,0,0]"), std::string::npos);
  EXPECT_EQ(run({"check", "paper-3bihomlie-z2", "--axioms", "skew,jacobi"}).code, kPass);
  EXPECT_EQ(run({"check", "paper-3bihomlie-z2", "--axioms", "multiplicative.beta"}).code, kAxiomFail);
  EXPECT_EQ(run({"check", "paper-3bihomlie-z2", "--axioms", "nonsense"}).code, kParseError);
  EXPECT_EQ(run({"check", "classical-3lie-dim4-ad"}).code, kPass);
}

TEST(Cli, MachineFormatIsDeterministic) {
  const Outcome first = run({"check", "paper-3bihomlie-z2", "--format", "machine"});
  const Outcome second = run({"check", "paper-3bihomlie-z2", "--format", "machine"});
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.out.rfind("colorforge-report\t1\n", 0), 0U);
  EXPECT_NE(first.out.find("axiom\tmultiplicative.alpha.bracket\tfail\t27\t0,1,2\t0,0,2\t0,0,0\t-\n"),
            std::string::npos);
  EXPECT_NE(first.out.find("summary\tfail\t9\t2\n"), std::string::npos);
  EXPECT_EQ(run({"check", "paper-3bihomlie-z2", "--format", "xml"}).code, kParseError);
}

TEST_F(CliFiles, ConstructRecipes) {
  const Outcome rb = run({"construct", "classical-assoc-nilpotent", "--recipe", "rb_induced_assoc"});
  ASSERT_EQ(rb.code, kPass);
  const Document d = parse_document(rb.out);
  EXPECT_EQ(d.ops.at("mu").entries.at({0, 0}).at(1), Scalar(4));
  EXPECT_EQ(d.ops.at("mu").entries.size(), 1U);

  const std::string out = (dir_ / "pre.json").string();
  const Outcome file = run({"construct", "classical-3lie-dim4", "--recipe", "rb_induced_pre_lie", "--out", out});
  ASSERT_EQ(file.code, kPass);
  EXPECT_EQ(run({"check", out}).code, kPass);
  EXPECT_EQ(run({"construct", out, "--recipe", "commutator_3lie_from_pre_lie"}).code, kPass);

  EXPECT_EQ(run({"construct", "paper-3bihomlie-z2", "--recipe", "semidirect_3lie"}).code, kSingularMap);
  EXPECT_EQ(run({"construct", "paper-3bihomlie-z2", "--recipe", "adjoint_rep", "--r", "-1"}).code, kSingularMap);
  EXPECT_EQ(run({"construct", "paper-3bihomlie-z2", "--recipe", "twist_3lie"}).code, kPreconditionFail);
  EXPECT_EQ(run({"construct", "classical-3lie-dim4", "--recipe", "no_such_recipe"}).code, kParseError);

  const Outcome ad = run({"construct", "bihom-3lie-dim4", "--recipe", "adjoint_rep", "--r", "1", "--s", "-1"});
  ASSERT_EQ(ad.code, kPass);
  EXPECT_EQ(run({"check", write("ad.json", ad.out)}).code, kPass);
}

TEST(Cli, VerifyTheoremAndFixtures) {
  const Outcome ok = run({"verify-theorem", "--name", "rb-assoc", "--fixture", "classical-assoc-nilpotent"});
  EXPECT_EQ(ok.code, kPass);
  EXPECT_NE(ok.out.find("theorem holds"), std::string::npos);
  EXPECT_EQ(run({"verify-theorem", "--name", "adjoint-rep", "--fixture", "paper-3bihomlie-z2"}).code,
            kPreconditionFail);
  EXPECT_EQ(run({"verify-theorem", "--name", "semidirect-3lie-iff", "--fixture", "paper-3bihomlie-z2"}).code,
            kSingularMap);
  EXPECT_EQ(run({"verify-theorem", "--name", "bogus", "--fixture", "paper-3bihomlie-z2"}).code, kParseError);

  const Outcome list = run({"fixtures"});
  EXPECT_EQ(list.code, kPass);
  EXPECT_NE(list.out.find("paper-poisson-z2\n"), std::string::npos);
  EXPECT_EQ(run({"fixtures", "--show", "paper-poisson-z2"}).out, fixture_text("paper-poisson-z2"));
  EXPECT_EQ(run({"fixtures", "--show", "nothing"}).code, kParseError);
  EXPECT_NE(run({"fixtures", "--theorems"}).out.find("graph-kupershmidt\n"), std::string::npos);
  EXPECT_EQ(run({}).code, kParseError);
  EXPECT_EQ(run({"frobnicate"}).code, kParseError);
}

}  // namespace
}  // namespace colorforge::cli
