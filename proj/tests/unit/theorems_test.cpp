// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "colorforge/theorems.hpp"

#include <gtest/gtest.h>

#include <set>

#include "colorforge/errors.hpp"
#include "colorforge/representations.hpp"

namespace colorforge {
namespace {

Document poisson_rep_with_operator() {
  const Document base = load_fixture("classical-poisson-dim4");
  const AlgebraPresentation p = build_algebra(base);
  Document doc = document_from(p, "poisson-dim4-adjoint");
  attach_module(doc, adjoint_poisson_rep(p));
  attach_operator(doc, *build_operator(base));
  return doc;
}

Document no_operator(Document doc) {
  doc.op.reset();
  doc.expected.op.reset();
  return doc;
}

struct Case {
  const char* theorem;
  const char* fixture;
};

const Case kCases[] = {
    {"twist-assoc", "classical-assoc-m11"},
    {"twist-3lie", "classical-3lie-z2"},
    {"twist-poisson", "classical-poisson-z2"},
    {"twist-prelie", "classical-prelie-dim4"},
    {"twist-dendriform", "classical-dendriform-nilpotent"},
    {"twist-prepoisson", "classical-prepoisson-dim4"},
    {"semidirect-assoc-iff", "classical-assoc-group-z2"},
    {"semidirect-3lie-iff", "classical-3lie-dim4-ad"},
    {"semidirect-poisson-iff", "classical-poisson-z2"},
    {"graph-kupershmidt", "classical-3lie-dim4-ad"},
    {"graph-kupershmidt", "classical-assoc-m11-regular"},
    {"kupershmidt-3lie", "classical-3lie-dim4-ad"},
    {"kupershmidt-prelie", "classical-3lie-dim4-ad"},
    {"kupershmidt-dendriform", "classical-assoc-m11-regular"},
    {"rb-assoc", "classical-assoc-nilpotent"},
    {"rb-3lie", "classical-3lie-dim4"},
    {"rb-poisson", "classical-poisson-dim4"},
    {"rb-prelie", "classical-3lie-dim4"},
    {"rb-dendriform", "classical-assoc-m11"},
    {"rb-prepoisson", "classical-poisson-dim4"},
    {"dendriform-sum", "classical-dendriform-m11"},
    {"subadjacent-prelie", "classical-prelie-dim4"},
    {"subadjacent-prepoisson", "classical-prepoisson-dim4"},
    {"adjoint-rep", "bihom-3lie-dim4"},
};

TEST(Theorems, EveryTheoremHoldsOnAFixture) {
  TheoremOptions opts;
  opts.max_pairs = 16;
  std::set<std::string> covered;
  for (const Case& c : kCases) {
    const TheoremOutcome out = verify_theorem(c.theorem, load_fixture(c.fixture), opts);
    EXPECT_TRUE(out.holds) << c.theorem << " on " << c.fixture << ": " << (out.log.empty() ? "" : out.log.back());
    EXPECT_GT(out.cases, 0U) << c.theorem;
    EXPECT_FALSE(out.counterexample.has_value());
    ASSERT_FALSE(out.log.empty());
    EXPECT_NE(out.log.back().find("theorem holds"), std::string::npos);
    covered.insert(c.theorem);
  }
  const TheoremOutcome pp = verify_theorem("kupershmidt-prepoisson", poisson_rep_with_operator());
  EXPECT_TRUE(pp.holds);
  covered.insert("kupershmidt-prepoisson");
  const auto names = theorem_names();
  EXPECT_EQ(covered, std::set<std::string>(names.begin(), names.end()));
}

TEST(Theorems, ExplicitTwistPairFromTheDocument) {
  Document doc = load_fixture("classical-assoc-group-z2");
  doc.maps["twist_alpha"] = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}};
  const TheoremOutcome out = verify_theorem("twist-assoc", doc);
  EXPECT_TRUE(out.holds);
  EXPECT_EQ(out.cases, 1U);
  doc.maps["twist_alpha"] = {{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(1)}};
  EXPECT_THROW(verify_theorem("twist-assoc", doc), PreconditionFailed);
}

TEST(Theorems, GraphTheoremEnumeratesWithoutAnOperator) {
  TheoremOptions opts;
  opts.operators.grid = {Scalar(-1), Scalar(0), Scalar(1)};
  const TheoremOutcome out = verify_theorem("graph-kupershmidt", no_operator(load_fixture("classical-3lie-z2")), opts);
  EXPECT_TRUE(out.holds);
  EXPECT_EQ(out.cases, 243U);
}

TEST(Theorems, Refusals) {
  EXPECT_THROW(verify_theorem("rb-assoc", no_operator(load_fixture("classical-assoc-nilpotent"))), PreconditionFailed);
  EXPECT_THROW(verify_theorem("twist-3lie", load_fixture("classical-assoc-m11")), PreconditionFailed);
  EXPECT_THROW(verify_theorem("twist-3lie", load_fixture("paper-3bihomlie-z2")), PreconditionFailed);
  EXPECT_THROW(verify_theorem("adjoint-rep", load_fixture("paper-3bihomlie-z2")), PreconditionFailed);
  EXPECT_THROW(verify_theorem("kupershmidt-3lie", load_fixture("classical-assoc-m11-regular")), PreconditionFailed);
  EXPECT_THROW(verify_theorem("semidirect-3lie-iff", load_fixture("paper-3bihomlie-z2")), SingularMapError);
  EXPECT_THROW(verify_theorem("semidirect-poisson-iff", load_fixture("paper-poisson-z2")), SingularMapError);
  EXPECT_THROW(verify_theorem("no-such-theorem", load_fixture("classical-assoc-m11")), Error);
  Document wrong = load_fixture("classical-3lie-dim4");
  wrong.op->matrix = {{Scalar(1), Scalar(0), Scalar(0), Scalar(0)},
                      {Scalar(0), Scalar(1), Scalar(0), Scalar(0)},
                      {Scalar(0), Scalar(0), Scalar(1), Scalar(0)},
                      {Scalar(0), Scalar(0), Scalar(0), Scalar(1)}};
  try {
    verify_theorem("rb-3lie", wrong);
    FAIL() << "expected PreconditionFailed";
  } catch (const PreconditionFailed& e) {
    EXPECT_FALSE(e.report().passed("operator.rota_baxter"));
  }
}

TEST(Theorems, ModuleOrAdjoint) {
  EXPECT_TRUE(std::holds_alternative<AssocBimodule>(module_or_adjoint(load_fixture("classical-assoc-m11"))));
  EXPECT_TRUE(std::holds_alternative<ThreeLieRep>(module_or_adjoint(load_fixture("classical-3lie-dim4-ad"))));
  EXPECT_TRUE(std::holds_alternative<PoissonRep>(module_or_adjoint(load_fixture("classical-poisson-z2"))));
  EXPECT_THROW(module_or_adjoint(load_fixture("classical-prelie-dim4")), PreconditionFailed);
}

}  // namespace
}  // namespace colorforge
