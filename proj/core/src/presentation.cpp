// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "colorforge/presentation.hpp"

#include "colorforge/errors.hpp"

namespace colorforge {

std::string_view kind_name(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Associative: return "associative";
    case AlgebraKind::ThreeLie: return "3lie";
    case AlgebraKind::Poisson: return "poisson";
    case AlgebraKind::PreLie: return "prelie";
    case AlgebraKind::Dendriform: return "dendriform";
    case AlgebraKind::PrePoisson: return "prepoisson";
  }
  return "?";
}

std::optional<AlgebraKind> parse_kind(std::string_view name) {
  for (AlgebraKind k : {AlgebraKind::Associative, AlgebraKind::ThreeLie, AlgebraKind::Poisson, AlgebraKind::PreLie,
                        AlgebraKind::Dendriform, AlgebraKind::PrePoisson}) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, std::size_t>> required_ops(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Associative: return {{"mu", 2}};
    case AlgebraKind::ThreeLie: return {{"bracket", 3}};
    case AlgebraKind::Poisson: return {{"bracket", 3}, {"mu", 2}};
    case AlgebraKind::PreLie: return {{"bracket", 3}};
    case AlgebraKind::Dendriform: return {{"prec", 2}, {"succ", 2}};
    case AlgebraKind::PrePoisson: return {{"bracket", 3}, {"prec", 2}, {"succ", 2}};
  }
  return {};
}

AlgebraPresentation AlgebraPresentation::classical(AlgebraKind kind, GradedSpace space, Bicharacter eps,
                                                   std::map<std::string, MultiOp> ops) {
  AlgebraPresentation p;
  p.kind = kind;
  p.alpha = EvenLinearMap::identity(space, "alpha");
  p.beta = EvenLinearMap::identity(space, "beta");
  p.space = std::move(space);
  p.eps = std::move(eps);
  p.ops = std::move(ops);
  p.validate_shape();
  return p;
}

const MultiOp& AlgebraPresentation::op(const std::string& name) const {
  auto it = ops.find(name);
  if (it == ops.end()) {
    throw StructuralError(std::string(kind_name(kind)) + " presentation has no operation '" + name + "'");
  }
  return it->second;
}

void AlgebraPresentation::validate_shape() const {
  if (!(eps.group() == space.group())) throw StructuralError("bicharacter and space use different grading groups");
  for (const auto* m : {&alpha, &beta}) {
    if (!(m->domain() == space) || !(m->codomain() == space)) {
      throw StructuralError("map '" + m->name() + "' is not an endomorphism of the algebra space");
    }
  }
  for (const auto& [name, arity] : required_ops(kind)) {
    const MultiOp& o = op(name);
    if (o.arity() != arity) {
      throw StructuralError("operation '" + name + "' must have arity " + std::to_string(arity));
    }
    for (const auto& a : o.args()) {
      if (!(a == space)) throw StructuralError("operation '" + name + "' is not defined on the algebra space");
    }
    if (!(o.result() == space)) throw StructuralError("operation '" + name + "' does not land in the algebra space");
  }
  for (const auto& [name, o] : ops) {
    bool known = false;
    for (const auto& [req, arity] : required_ops(kind)) known = known || req == name;
    if (!known) throw StructuralError(std::string(kind_name(kind)) + " presentation has unexpected operation '" + name + "'");
  }
}

bool AlgebraPresentation::operator==(const AlgebraPresentation& o) const {
  return kind == o.kind && space == o.space && eps == o.eps && alpha == o.alpha && beta == o.beta && ops == o.ops &&
         commutative == o.commutative;
}

namespace {

void require_endo(const EvenLinearMap& m, const GradedSpace& space, const char* what) {
  if (!(m.domain() == space) || !(m.codomain() == space)) {
    throw StructuralError(std::string(what) + " is not an endomorphism of the module space");
  }
}

void require_action(const MultiOp& op, const std::vector<GradedSpace>& args, const GradedSpace& result,
                    const char* what) {
  if (op.args() != args || !(op.result() == result)) {
    throw StructuralError(std::string(what) + " does not act with the expected argument spaces");
  }
}

}  // namespace

void AssocBimodule::validate_shape() const {
  algebra.validate_shape();
  if (!(space.group() == algebra.space.group())) throw StructuralError("module and algebra use different grading groups");
  require_endo(alpha, space, "alpha_V");
  require_endo(beta, space, "beta_V");
  require_action(left, {algebra.space, space}, space, "left action");
  require_action(right, {algebra.space, space}, space, "right action");
}

void ThreeLieRep::validate_shape() const {
  algebra.validate_shape();
  if (!(space.group() == algebra.space.group())) throw StructuralError("module and algebra use different grading groups");
  require_endo(alpha, space, "alpha_V");
  require_endo(beta, space, "beta_V");
  require_action(rho, {algebra.space, algebra.space, space}, space, "rho");
}

void PoissonRep::validate_shape() const {
  bimodule_part().validate_shape();
  lie_part().validate_shape();
}

AssocBimodule PoissonRep::bimodule_part() const {
  AlgebraPresentation a = algebra;
  a.kind = AlgebraKind::Associative;
  a.ops.erase("bracket");
  return AssocBimodule{std::move(a), space, alpha, beta, left, right};
}

ThreeLieRep PoissonRep::lie_part() const {
  AlgebraPresentation a = algebra;
  a.kind = AlgebraKind::ThreeLie;
  a.ops.erase("mu");
  a.commutative = false;
  return ThreeLieRep{std::move(a), space, alpha, beta, rho};
}

AlgebraPresentation with_op(AlgebraPresentation p, MultiOp op) {
  const std::string name = op.name();
  p.ops[name] = std::move(op);
  return p;
}

}  // namespace colorforge
