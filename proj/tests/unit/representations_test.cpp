// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "colorforge/representations.hpp"

#include <gtest/gtest.h>

#include "colorforge/constructions.hpp"
#include "colorforge/document.hpp"
#include "colorforge/errors.hpp"
#include "colorforge/structures.hpp"
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

AlgebraPresentation associative_part(AlgebraPresentation p) {
  p.kind = AlgebraKind::Associative;
  p.ops.erase("bracket");
  return p;
}

AlgebraPresentation bracket_part(AlgebraPresentation p) {
  p.kind = AlgebraKind::ThreeLie;
  p.ops.erase("mu");
  p.commutative = false;
  return p;
}

TEST(Bimodule, RegularBimoduleOfTheCommutativePoissonAlgebra) {
  const AssocBimodule m = regular_bimodule(associative_part(fixture("paper-poisson-z2")));
  EXPECT_TRUE(check_assoc_bimodule(m).passed());
  EXPECT_EQ(m.left.constants(), m.algebra.op("mu").constants());
  EXPECT_EQ(m.alpha, m.algebra.alpha);
}

TEST(Bimodule, ZeroActionsPass) {
  AssocBimodule m = regular_bimodule(fixture("classical-assoc-m11"));
  m.left = MultiOp("l", m.left.args(), m.space, {});
  m.right = MultiOp("r", m.right.args(), m.space, {});
  EXPECT_TRUE(check_assoc_bimodule(m).passed());
}

TEST(Bimodule, DoubledLeftConstantBreaksTheFirstCondition) {
  AssocBimodule m = regular_bimodule(associative_part(fixture("paper-poisson-z2")));
  m.left = m.left.with_constant({0, 0}, vec({2, 0}));
  const CheckReport r = check_assoc_bimodule(m);
  const AxiomResult* e = r.find("bimodule.1");
  ASSERT_NE(e, nullptr);
  ASSERT_FALSE(e->passed);
  // l(a e1) l(e1) e1 = 4 e1 against l(mu(e1, e1)) b_V e1 = 2 e1.
  EXPECT_EQ(e->witness->tuple, (std::vector<std::size_t>{0, 0, 0}));
  EXPECT_EQ(e->witness->lhs, vec({4, 0}));
  EXPECT_EQ(e->witness->rhs, vec({2, 0}));
}

TEST(ThreeLieRep, AdjointOfTheFourDimensionalAlgebra) {
  const AlgebraPresentation p = fixture("classical-3lie-dim4");
  const ThreeLieRep ad = adjoint_rep(p, 0, 0);
  EXPECT_TRUE(check_3_lie_rep(ad).passed());
  EXPECT_EQ(adjoint_rep(p, 1, 0).rho, ad.rho);
  ThreeLieRep zero = ad;
  zero.rho = MultiOp("rho", ad.rho.args(), ad.space, {});
  EXPECT_TRUE(check_3_lie_rep(zero).passed());
}

// For ad with identity twists, condition 3 is the fundamental identity.
TEST(ThreeLieRep, ConditionThreeTracksTheFundamentalIdentity) {
  const AlgebraPresentation p = fixture("classical-3lie-dim4");
  gen::Rng rng(17);
  int broken = 0;
  for (int i = 0; i < 25; ++i) {
    std::map<MultiOp::Tuple, Vector> gens;
    for (const auto& [t, v] : p.op("bracket").constants()) {
      if (t[0] < t[1] && t[1] < t[2]) gens.emplace(t, v);
    }
    auto it = std::next(gens.begin(), rng.uniform(0, static_cast<long>(gens.size()) - 1));
    it->second[static_cast<std::size_t>(rng.uniform(0, 3))] += Scalar(rng.coin() ? 1 : -1);
    AlgebraPresentation q = p;
    q.ops["bracket"] = skew_extend_ternary("bracket", p.space, p.eps, gens);
    const bool fundamental = !oracle::fundamental(oracle::densify(q)).has_value();
    const CheckReport r = check_3_lie_rep(adjoint_rep(q, 0, 0));
    EXPECT_EQ(r.passed("rep.3"), fundamental);
    broken += fundamental ? 0 : 1;
  }
  EXPECT_GT(broken, 0);
}

TEST(ThreeLieRep, AdjointPowersOnRegularMultiplicativeFixture) {
  const AlgebraPresentation p = fixture("bihom-3lie-dim4");
  ASSERT_TRUE(p.alpha.invertible() && p.beta.invertible());
  for (int r = -1; r <= 1; ++r) {
    for (int s = -1; s <= 1; ++s) {
      const CheckReport rep = check_3_lie_rep(adjoint_rep(p, r, s));
      EXPECT_TRUE(rep.passed()) << r << "," << s << " " << (rep.first_failure() ? rep.first_failure()->id : "");
    }
  }
}

TEST(ThreeLieRep, NegativePowerOfSingularMap) {
  const AlgebraPresentation p = fixture("paper-3bihomlie-z2");
  EXPECT_THROW(adjoint_rep(p, -1, 0), SingularMapError);
  EXPECT_NO_THROW(adjoint_rep(p, 1, 1));
}

TEST(PoissonRep, AdjointOfClassicalFixturesAndZero) {
  for (const char* name : {"classical-poisson-z2", "classical-poisson-dim4"}) {
    const PoissonRep m = adjoint_poisson_rep(fixture(name));
    EXPECT_TRUE(check_poisson_rep(m).passed()) << name;
    PoissonRep zero = m;
    zero.rho = MultiOp("rho", m.rho.args(), m.space, {});
    zero.left = MultiOp("l", m.left.args(), m.space, {});
    zero.right = MultiOp("r", m.right.args(), m.space, {});
    EXPECT_TRUE(check_poisson_rep(zero).passed()) << name;
  }
}

// The paper-poisson-z2 bracket {e1, e1, e2} = e2 is not plainly skew in its first two
// slots, so its adjoint action is not a representation.
TEST(PoissonRep, AdjointOfTheCommutativePoissonAlgebraIsNotARepresentation) {
  const CheckReport r = check_poisson_rep(adjoint_poisson_rep(fixture("paper-poisson-z2")));
  EXPECT_FALSE(r.passed("rho.skew"));
  const AxiomResult* e = r.find("rep.4");
  ASSERT_NE(e, nullptr);
  ASSERT_FALSE(e->passed);
  EXPECT_EQ(e->witness->tuple, (std::vector<std::size_t>{0, 0, 0, 0, 1}));
  EXPECT_EQ(e->witness->lhs, vec({0, 0}));
  EXPECT_EQ(e->witness->rhs, vec({0, 3}));
}

TEST(PoissonRep, LeftActionMutationBreaksExactlyTheFirstMixedCondition) {
  const PoissonRep m = adjoint_poisson_rep(fixture("classical-poisson-z2"));
  int exact = 0;
  for (const MultiOp& l : gen::all_unit_mutations(m.left)) {
    PoissonRep q = m;
    q.left = l;
    const CheckReport r = check_poisson_rep(q);
    std::vector<std::string> failed;
    for (const auto& e : r.entries()) {
      if (!e.passed) failed.push_back(e.id);
    }
    if (failed == std::vector<std::string>{"poisson.1"}) ++exact;
  }
  EXPECT_GT(exact, 0);
}

// Representation checker against the doubled algebra, on passing modules and
// on every admissible +1 mutation of their actions.
TEST(RepresentationsProperty, AssociativeSemidirectEquivalence) {
  std::vector<AssocBimodule> base;
  for (const char* name : {"classical-assoc-nilpotent", "classical-assoc-m11", "classical-assoc-group-z2",
                           "classical-assoc-dual-odd", "bihom-assoc-m11"}) {
    base.push_back(regular_bimodule(fixture(name)));
  }
  base.push_back(regular_bimodule(associative_part(fixture("paper-poisson-z2"))));
  int failing = 0, cases = 0;
  for (const AssocBimodule& m : base) {
    std::vector<AssocBimodule> all{m};
    for (const MultiOp& l : gen::all_unit_mutations(m.left)) {
      all.push_back(m);
      all.back().left = l;
    }
    for (const MultiOp& r : gen::all_unit_mutations(m.right)) {
      all.push_back(m);
      all.back().right = r;
    }
    for (const AssocBimodule& x : all) {
      const bool rep = check_assoc_bimodule(x).passed();
      const bool doubled = check_bihom_associative(semidirect_assoc(x)).passed();
      ASSERT_EQ(rep, doubled);
      failing += rep ? 0 : 1;
      ++cases;
    }
  }
  EXPECT_GT(failing, cases / 2);
}

TEST(RepresentationsProperty, ThreeLieSemidirectEquivalence) {
  std::vector<ThreeLieRep> base;
  for (const char* name : {"classical-3lie-z2", "classical-3lie-z2z2", "bihom-3lie-dim4"}) {
    base.push_back(adjoint_rep(fixture(name), 0, 0));
  }
  gen::Rng rng(23);
  for (const ThreeLieRep& m : base) {
    EXPECT_TRUE(check_3_bihom_lie(semidirect_3lie(m)).passed());
    for (int i = 0; i < 15; ++i) {
      ThreeLieRep x = m;
      x.rho = gen::mutate_constant(rng, m.rho);
      const bool rep = check_3_lie_rep(x).passed();
      const bool doubled = check_3_bihom_lie(semidirect_3lie(x)).passed();
      EXPECT_FALSE(rep);
      EXPECT_EQ(rep, doubled);
    }
  }
}

TEST(RepresentationsProperty, PoissonSemidirectEquivalence) {
  gen::Rng rng(29);
  for (const char* name : {"classical-poisson-z2", "classical-poisson-dim4"}) {
    const PoissonRep m = adjoint_poisson_rep(fixture(name));
    EXPECT_TRUE(check_nc_3_bihom_poisson(semidirect_poisson(m)).passed());
    for (int i = 0; i < 12; ++i) {
      PoissonRep x = m;
      MultiOp& target = i % 3 == 0 ? x.rho : i % 3 == 1 ? x.left : x.right;
      target = gen::mutate_constant(rng, target);
      EXPECT_EQ(check_poisson_rep(x).passed(), check_nc_3_bihom_poisson(semidirect_poisson(x)).passed());
    }
  }
}

TEST(Representations, SemidirectNeedsInvertibleTwists) {
  const AlgebraPresentation a = fixture("paper-3bihomlie-z2");
  EXPECT_THROW(semidirect_3lie(adjoint_rep(a, 0, 0)), SingularMapError);
  EXPECT_THROW(semidirect_poisson(adjoint_poisson_rep(fixture("paper-poisson-z2"))), SingularMapError);
  EXPECT_NO_THROW(semidirect_assoc(regular_bimodule(associative_part(fixture("paper-poisson-z2")))));
  EXPECT_TRUE(check_3_bihom_lie(bracket_part(fixture("classical-poisson-dim4"))).passed());
}

}  // namespace
}  // namespace colorforge
