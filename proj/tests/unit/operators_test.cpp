// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "colorforge/operators.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "colorforge/constructions.hpp"
#include "colorforge/document.hpp"
#include "colorforge/errors.hpp"
#include "colorforge/representations.hpp"
#include "colorforge/theorems.hpp"
#include "generators.hpp"
#include "oracle.hpp"

namespace colorforge {
namespace {

AlgebraPresentation fixture(const std::string& name) { return build_algebra(load_fixture(name)); }

Vector vec(std::initializer_list<long> xs) {
  std::vector<Scalar> c;
  for (long x : xs) c.emplace_back(x);
  return Vector(c);
}

EvenLinearMap diag(const GradedSpace& s, std::initializer_list<long> d, const std::string& name = "R") {
  Matrix m(s.dim(), s.dim());
  std::size_t i = 0;
  for (long x : d) {
    m(i, i) = Scalar(x);
    ++i;
  }
  return EvenLinearMap(s, s, m, name);
}

TEST(RotaBaxter, NilpotentAlgebra) {
  const AlgebraPresentation p = fixture("classical-assoc-nilpotent");
  EXPECT_TRUE(check_rota_baxter(p, diag(p.space, {2, 1})).passed());
  const CheckReport r = check_rota_baxter(p, EvenLinearMap::identity(p.space, "R"));
  const AxiomResult* e = r.find("rota_baxter");
  ASSERT_NE(e, nullptr);
  ASSERT_FALSE(e->passed);
  // R(a) R(a) = b against R(R(a) a + a R(a)) = 2b.
  EXPECT_EQ(e->witness->tuple, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(e->witness->lhs, vec({0, 1}));
  EXPECT_EQ(e->witness->rhs, vec({0, 2}));
}

TEST(RotaBaxter, GalleryOperatorsPass) {
  for (const char* name : {"classical-3lie-dim4", "classical-assoc-m11", "classical-poisson-dim4"}) {
    const Document d = load_fixture(name);
    const CheckReport r = check_rota_baxter(build_algebra(d), *build_operator(d));
    EXPECT_TRUE(r.passed()) << name;
  }
}

TEST(Kupershmidt, ZeroAndIdentityOnTheAdjointRep) {
  const AlgebraPresentation p = fixture("classical-3lie-dim4");
  const ThreeLieRep ad = adjoint_rep(p, 0, 0);
  const EvenLinearMap zero(p.space, p.space, Matrix(4, 4), "T");
  EXPECT_TRUE(check_kupershmidt_3lie(ad, zero).passed());
  const CheckReport r = check_kupershmidt_3lie(ad, EvenLinearMap::identity(p.space, "T"));
  const AxiomResult* e = r.find("kupershmidt");
  ASSERT_NE(e, nullptr);
  ASSERT_FALSE(e->passed);
  // With T = id the right side collapses to three copies of the bracket.
  EXPECT_EQ(e->witness->tuple, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_NE(e->witness->lhs, Vector(4));
  EXPECT_EQ(e->witness->rhs, Scalar(3) * e->witness->lhs);
  EXPECT_TRUE(r.passed("intertwine.alpha"));
}

TEST(Kupershmidt, OddMapIsRejected) {
  const AlgebraPresentation p = fixture("classical-3lie-z2");
  Matrix m(3, 3);
  m(2, 0) = Scalar(1);
  const CheckReport r = check_kupershmidt_3lie(adjoint_rep(p, 0, 0), EvenLinearMap(p.space, p.space, m, "T"));
  EXPECT_FALSE(r.passed("even.T"));
}

TEST(Kupershmidt, SingularModuleMapsThrow) {
  const AlgebraPresentation a = fixture("paper-3bihomlie-z2");
  EXPECT_THROW(check_kupershmidt_3lie(adjoint_rep(a, 0, 0), EvenLinearMap::identity(a.space, "T")),
               SingularMapError);
}

// A Rota-Baxter operator is a Kupershmidt operator for the regular bimodule
// and for ad.
TEST(OperatorsProperty, RotaBaxterIsKupershmidtOnTheRegularModule) {
  EnumerationOptions grid;
  grid.grid = {Scalar(-1), Scalar(0), Scalar(1)};
  int passing = 0;
  for (const char* name : {"classical-assoc-nilpotent", "classical-assoc-group-z2", "classical-assoc-dual-odd"}) {
    const AlgebraPresentation p = fixture(name);
    const AssocBimodule reg = regular_bimodule(p);
    for (const EvenLinearMap& r : all_even_maps(p.space, p.space, grid, "R")) {
      const bool rb = check_rota_baxter_assoc(p, r).passed("rota_baxter");
      ASSERT_EQ(rb, check_kupershmidt_assoc(reg, r).passed("kupershmidt"));
      passing += rb ? 1 : 0;
    }
  }
  const AlgebraPresentation q = fixture("classical-3lie-z2");
  const ThreeLieRep ad = adjoint_rep(q, 0, 0);
  for (const EvenLinearMap& r : all_even_maps(q.space, q.space, grid, "R")) {
    ASSERT_EQ(check_rota_baxter_3lie(q, r).passed("rota_baxter"), check_kupershmidt_3lie(ad, r).passed("kupershmidt"));
  }
  EXPECT_GT(passing, 3);
}

TEST(OperatorsProperty, RotaBaxterMatchesOracle) {
  gen::Rng rng(41);
  for (const char* name : {"classical-assoc-m11", "classical-assoc-nilpotent", "classical-3lie-dim4",
                           "classical-3lie-z2z2", "classical-poisson-z2"}) {
    const AlgebraPresentation p = fixture(name);
    const oracle::Dense d = oracle::densify(p);
    const Document doc = load_fixture(name);
    std::vector<EvenLinearMap> maps;
    if (auto op = build_operator(doc)) maps.push_back(*op);
    for (int i = 0; i < 30; ++i) maps.push_back(gen::even_map(rng, p.space, 0.4, 1, "R"));
    for (const EvenLinearMap& r : maps) {
      const CheckReport rep = check_rota_baxter(p, r);
      const auto dm = oracle::dense_matrix(r);
      if (p.has_op("mu")) {
        const auto want = oracle::rota_baxter_mu(d, dm);
        const AxiomResult* e = rep.find(p.has_op("bracket") ? "rota_baxter.mu" : "rota_baxter");
        ASSERT_EQ(e->passed, !want.has_value()) << name;
        if (want) {
          ASSERT_EQ(e->witness->tuple, *want);
        }
      }
      if (p.has_op("bracket")) {
        const auto want = oracle::rota_baxter_bracket(d, dm);
        const AxiomResult* e = rep.find(p.has_op("mu") ? "rota_baxter.bracket" : "rota_baxter");
        ASSERT_EQ(e->passed, !want.has_value()) << name;
        if (want) {
          ASSERT_EQ(e->witness->tuple, *want);
        }
      }
    }
  }
}

// The graph of T is a subalgebra of the semidirect product exactly when T is
// a Kupershmidt operator.
TEST(OperatorsProperty, GraphClosedIffKupershmidt) {
  EnumerationOptions grid;
  grid.grid = {Scalar(-1), Scalar(0), Scalar(1)};
  const AlgebraPresentation z2 = fixture("classical-3lie-z2");
  std::vector<ThreeLieRep> reps{adjoint_rep(z2, 0, 0)};
  const auto pairs = twisting_pairs(z2, {}, 40);
  for (const auto& [a, b] : pairs) {
    if (a.is_identity() && b.is_identity()) continue;
    reps.push_back(adjoint_rep(twist_3lie(z2, a, b), 0, 0));
    if (reps.size() == 3) break;
  }
  ASSERT_EQ(reps.size(), 3U);
  int kupershmidt = 0;
  for (const ThreeLieRep& m : reps) {
    for (const EvenLinearMap& t : all_even_maps(m.space, m.algebra.space, grid, "T")) {
      const bool k = check_kupershmidt_3lie(m, t).passed();
      ASSERT_EQ(k, check_graph_subalgebra_3lie(m, t).passed());
      kupershmidt += k ? 1 : 0;
    }
  }
  EXPECT_GT(kupershmidt, 3);
  for (const char* name : {"classical-assoc-nilpotent", "classical-assoc-dual-odd", "bihom-assoc-m11"}) {
    const AssocBimodule m = regular_bimodule(fixture(name));
    const std::vector<EvenLinearMap> maps =
        m.space.dim() <= 2 ? all_even_maps(m.space, m.algebra.space, grid, "T") : std::vector<EvenLinearMap>{};
    for (const EvenLinearMap& t : maps) {
      ASSERT_EQ(check_kupershmidt_assoc(m, t).passed(), check_graph_subalgebra_assoc(m, t).passed()) << name;
    }
  }
}

TEST(Enumerate, NilpotentOperatorsIncludeKnownOnes) {
  const AlgebraPresentation p = fixture("classical-assoc-nilpotent");
  const EnumerationResult res = enumerate_rota_baxter(p);
  EXPECT_EQ(res.candidates, 625U);
  auto has = [&](const EvenLinearMap& f) {
    return std::any_of(res.operators.begin(), res.operators.end(),
                       [&](const EvenLinearMap& g) { return g.matrix() == f.matrix(); });
  };
  EXPECT_TRUE(has(diag(p.space, {2, 1})));
  EXPECT_TRUE(has(diag(p.space, {0, 0})));
  EXPECT_FALSE(has(diag(p.space, {1, 1})));
  for (const EvenLinearMap& r : res.operators) {
    ASSERT_FALSE(oracle::rota_baxter_mu(oracle::densify(p), oracle::dense_matrix(r)).has_value());
  }
  std::size_t brute = 0;
  for (const EvenLinearMap& r : all_even_maps(p.space, p.space, {}, "R")) {
    brute += oracle::rota_baxter_mu(oracle::densify(p), oracle::dense_matrix(r)) ? 0 : 1;
  }
  EXPECT_EQ(res.operators.size(), brute);
}

TEST(Enumerate, ZeroAlgebraAcceptsEveryMapAndZeroGridGivesZero) {
  const GradedSpace s(GradingGroup(0, {2}), {Degree{{0}}, Degree{{1}}});
  const AlgebraPresentation zero = AlgebraPresentation::classical(
      AlgebraKind::Associative, s, Bicharacter::z2_sign(), {{"mu", MultiOp("mu", {s, s}, s, {})}});
  const EnumerationResult all = enumerate_rota_baxter(zero);
  EXPECT_EQ(all.operators.size(), count_even_maps(s, s, {}));
  EXPECT_EQ(all.operators.size(), 25U);
  EnumerationOptions only_zero;
  only_zero.grid = {Scalar(0)};
  const EnumerationResult z = enumerate_rota_baxter(fixture("classical-assoc-m11"), only_zero);
  ASSERT_EQ(z.operators.size(), 1U);
  EXPECT_EQ(z.operators[0].matrix(), Matrix(4, 4));
}

TEST(Enumerate, LimitsAreEnforcedBeforeSearching) {
  EnumerationOptions tight;
  tight.budget = 10;
  EXPECT_THROW(enumerate_rota_baxter(fixture("classical-assoc-nilpotent"), tight), BudgetExceededError);
  EnumerationOptions small;
  small.max_dim = 3;
  EXPECT_THROW(enumerate_kupershmidt(adjoint_rep(fixture("classical-3lie-dim4"), 0, 0), small), DimensionLimitError);
}

TEST(Enumerate, EndomorphismsCommuteWithTheOperations) {
  const AlgebraPresentation p = fixture("classical-3lie-z2");
  const auto autos = enumerate_endomorphisms(p.space, {&p.op("bracket")});
  ASSERT_FALSE(autos.empty());
  for (const EvenLinearMap& f : autos) {
    ASSERT_TRUE(f.invertible());
    ASSERT_EQ(p.op("bracket").postcompose(f), p.op("bracket").precompose({&f, &f, &f}));
  }
  for (const auto& [f, g] : commuting_pairs(autos, 50)) {
    ASSERT_EQ(f.compose(g), g.compose(f));
  }
}

}  // namespace
}  // namespace colorforge
