// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "colorforge/constructions.hpp"

#include <array>
#include <memory>

#include "colorforge/errors.hpp"
#include "colorforge/operators.hpp"
#include "colorforge/representations.hpp"
#include "colorforge/structures.hpp"
#include "eval.hpp"

namespace colorforge {

using detail::EpsIndex;
using detail::unit;

namespace {

void require(const std::string& construction, const CheckReport& r) {
  if (!r.passed()) throw PreconditionFailed(construction, std::make_shared<CheckReport>(r));
}

CheckReport classical_entries(const AlgebraPresentation& p) {
  const EvenLinearMap id = EvenLinearMap::identity(p.space);
  CheckReport r;
  r.add(detail::map_equation_entry("classical.alpha", "alpha = id", p.alpha, id, id, id));
  r.add(detail::map_equation_entry("classical.beta", "beta = id", p.beta, id, id, id));
  return r;
}

void require_endo(const AlgebraPresentation& p, const EvenLinearMap& f) {
  if (!(f.domain() == p.space) || !(f.codomain() == p.space)) {
    throw StructuralError("twisting map '" + f.name() + "' is not an endomorphism of the algebra space");
  }
}

/// Evenness, commutation and morphism entries for a twisting pair.
CheckReport twisting_pair_entries(const AlgebraPresentation& p, const EvenLinearMap& a, const EvenLinearMap& b,
                                  bool invertible) {
  require_endo(p, a);
  require_endo(p, b);
  if (invertible) {
    if (!a.invertible()) throw SingularMapError(a.name());
    if (!b.invertible()) throw SingularMapError(b.name());
  }
  CheckReport r;
  r.add(detail::evenness_entry("even.alpha", a));
  r.add(detail::evenness_entry("even.beta", b));
  r.add(detail::commute_entry("commute", a, b));
  for (const auto* m : {&a, &b}) {
    const std::string mname = m == &a ? "alpha" : "beta";
    for (const auto& [name, op] : p.ops) {
      r.add(detail::multiplicative_entry("morphism." + mname + "." + name, op, *m));
    }
  }
  return r;
}

AlgebraPresentation twisted(const AlgebraPresentation& p, const EvenLinearMap& a, const EvenLinearMap& b) {
  AlgebraPresentation out = p;
  out.alpha = a.renamed("alpha");
  out.beta = b.renamed("beta");
  for (auto& [name, op] : out.ops) {
    std::vector<const EvenLinearMap*> maps(op.arity(), &a);
    maps.back() = &b;
    op = p.op(name).precompose(maps).renamed(name);
  }
  return out;
}

struct TwistKind {
  const char* name;
  CheckReport (*checker)(const AlgebraPresentation&);
  bool invertible;
};

TwistKind twist_kind(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Associative: return {"twist_associative", check_associative_color, false};
    case AlgebraKind::ThreeLie: return {"twist_3lie", check_3_lie_color, false};
    case AlgebraKind::Poisson: return {"twist_poisson", check_nc_3_bihom_poisson, false};
    case AlgebraKind::PreLie: return {"twist_pre_lie", check_3_bihom_pre_lie, true};
    case AlgebraKind::Dendriform: return {"twist_dendriform", check_bihom_dendriform, false};
    case AlgebraKind::PrePoisson: return {"twist_pre_poisson", check_3_bihom_pre_poisson, true};
  }
  throw StructuralError("unknown algebra kind");
}

AlgebraPresentation run_twist(const AlgebraPresentation& p, const EvenLinearMap& a, const EvenLinearMap& b,
                              AlgebraKind kind) {
  if (p.kind != kind) {
    throw StructuralError(std::string(twist_kind(kind).name) + " needs a " + std::string(kind_name(kind)) +
                          " presentation");
  }
  return Twister(p)(a, b);
}

AlgebraPresentation presentation_on(AlgebraKind kind, const GradedSpace& space, const Bicharacter& eps,
                                    const EvenLinearMap& a, const EvenLinearMap& b, std::vector<MultiOp> ops) {
  AlgebraPresentation out;
  out.kind = kind;
  out.space = space;
  out.eps = eps;
  out.alpha = a.renamed("alpha");
  out.beta = b.renamed("beta");
  for (auto& op : ops) {
    const std::string name = op.name();
    out.ops.emplace(name, std::move(op));
  }
  out.validate_shape();
  return out;
}

}  // namespace

Twister::Twister(AlgebraPresentation p) : p_(std::move(p)) {
  const TwistKind k = twist_kind(p_.kind);
  p_.validate_shape();
  CheckReport pre;
  pre.merge("input", classical_entries(p_));
  require(k.name, pre);
  pre.merge("input", k.checker(p_));
  require(k.name, pre);
}

AlgebraPresentation Twister::operator()(const EvenLinearMap& alpha, const EvenLinearMap& beta) const {
  const TwistKind k = twist_kind(p_.kind);
  CheckReport pre;
  pre.merge("maps", twisting_pair_entries(p_, alpha, beta, k.invertible));
  require(k.name, pre);
  return twisted(p_, alpha, beta);
}

AlgebraPresentation twist_associative(const AlgebraPresentation& p, const EvenLinearMap& alpha,
                                      const EvenLinearMap& beta) {
  return run_twist(p, alpha, beta, AlgebraKind::Associative);
}

AlgebraPresentation twist_3lie(const AlgebraPresentation& p, const EvenLinearMap& alpha, const EvenLinearMap& beta) {
  return run_twist(p, alpha, beta, AlgebraKind::ThreeLie);
}

AlgebraPresentation twist_poisson(const AlgebraPresentation& p, const EvenLinearMap& alpha, const EvenLinearMap& beta) {
  return run_twist(p, alpha, beta, AlgebraKind::Poisson);
}

AlgebraPresentation twist_pre_lie(const AlgebraPresentation& p, const EvenLinearMap& alpha, const EvenLinearMap& beta) {
  return run_twist(p, alpha, beta, AlgebraKind::PreLie);
}

AlgebraPresentation twist_dendriform(const AlgebraPresentation& p, const EvenLinearMap& alpha,
                                     const EvenLinearMap& beta) {
  return run_twist(p, alpha, beta, AlgebraKind::Dendriform);
}

AlgebraPresentation twist_pre_poisson(const AlgebraPresentation& p, const EvenLinearMap& alpha,
                                      const EvenLinearMap& beta) {
  return run_twist(p, alpha, beta, AlgebraKind::PrePoisson);
}

namespace {

/// Block-diagonal map f + f_V on g + V.
EvenLinearMap direct_sum_map(const GradedSpace& sum, const EvenLinearMap& f, const EvenLinearMap& fv,
                             const std::string& name) {
  const std::size_t n = f.domain().dim();
  const std::size_t d = fv.domain().dim();
  Matrix m(n + d, n + d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.matrix()(i, j);
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(n + i, n + j) = fv.matrix()(i, j);
  }
  return EvenLinearMap(sum, sum, std::move(m), name);
}

/// Embeds a V-vector at offset n of a g + V vector.
Vector shifted(const Vector& v, std::size_t n, std::size_t total) {
  Vector out(total);
  for (std::size_t i = 0; i < v.dim(); ++i) out[n + i] = v[i];
  return out;
}

MultiOp semidirect_mu(const AssocBimodule& m, const GradedSpace& sum) {
  const MultiOp& mu = m.algebra.op("mu");
  const std::size_t n = m.algebra.dim();
  const std::size_t d = m.space.dim();
  const std::size_t total = n + d;
  EpsIndex e(m.algebra.eps, sum.degrees());
  std::map<MultiOp::Tuple, Vector> c;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!mu.at(x, y).empty()) c.emplace(MultiOp::Tuple{x, y}, Vector::from_sparse(total, mu.at(x, y)));
    }
    for (std::size_t v = 0; v < d; ++v) {
      if (!m.left.at(x, v).empty()) {
        c.emplace(MultiOp::Tuple{x, n + v}, shifted(Vector::from_sparse(d, m.left.at(x, v)), n, total));
      }
    }
  }
  for (std::size_t u = 0; u < d; ++u) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!m.right.at(y, u).empty()) {
        c.emplace(MultiOp::Tuple{n + u, y}, e(n + u, y) * shifted(Vector::from_sparse(d, m.right.at(y, u)), n, total));
      }
    }
  }
  return MultiOp("mu", {sum, sum}, sum, c);
}

MultiOp semidirect_bracket(const ThreeLieRep& m, const GradedSpace& sum) {
  const MultiOp& br = m.algebra.op("bracket");
  const MultiOp& rho = m.rho;
  const std::size_t n = m.algebra.dim();
  const std::size_t d = m.space.dim();
  const std::size_t total = n + d;
  EpsIndex e(m.algebra.eps, sum.degrees());
  const EvenLinearMap ai_b = m.algebra.alpha.inverse().compose(m.algebra.beta);  // a^-1 b
  const EvenLinearMap aV_bi = m.alpha.compose(m.beta.inverse());                // a_V b_V^-1
  std::map<MultiOp::Tuple, Vector> c;
  auto put = [&](MultiOp::Tuple t, const Vector& v) {
    if (!v.is_zero()) c.emplace(std::move(t), v);
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) put({x, y, z}, Vector::from_sparse(total, br.at(x, y, z)));
      for (std::size_t w = 0; w < d; ++w) put({x, y, n + w}, shifted(Vector::from_sparse(d, rho.at(x, y, w)), n, total));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t v = 0; v < d; ++v) {
      for (std::size_t z = 0; z < n; ++z) {
        // [x, v, z] = -eps(v, z) rho(x, a^-1 b z) a_V b_V^-1 v
        const Vector val = rho.eval(unit(x), ai_b.column(z), aV_bi.column(v));
        put({x, n + v, z}, -e(n + v, z) * shifted(val, n, total));
      }
    }
  }
  for (std::size_t u = 0; u < d; ++u) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        // [u, y, z] = eps(u, y+z) rho(y, a^-1 b z) a_V b_V^-1 u
        const Vector val = rho.eval(unit(y), ai_b.column(z), aV_bi.column(u));
        put({n + u, y, z}, e({n + u}, {y, z}) * shifted(val, n, total));
      }
    }
  }
  return MultiOp("bracket", {sum, sum, sum}, sum, c);
}

}  // namespace

AlgebraPresentation semidirect_assoc(const AssocBimodule& m) {
  m.validate_shape();
  const GradedSpace sum = m.algebra.space.direct_sum(m.space);
  return presentation_on(AlgebraKind::Associative, sum, m.algebra.eps,
                         direct_sum_map(sum, m.algebra.alpha, m.alpha, "alpha"),
                         direct_sum_map(sum, m.algebra.beta, m.beta, "beta"), {semidirect_mu(m, sum)});
}

AlgebraPresentation semidirect_3lie(const ThreeLieRep& m) {
  m.validate_shape();
  const GradedSpace sum = m.algebra.space.direct_sum(m.space);
  return presentation_on(AlgebraKind::ThreeLie, sum, m.algebra.eps,
                         direct_sum_map(sum, m.algebra.alpha, m.alpha, "alpha"),
                         direct_sum_map(sum, m.algebra.beta, m.beta, "beta"), {semidirect_bracket(m, sum)});
}

AlgebraPresentation semidirect_poisson(const PoissonRep& m) {
  m.validate_shape();
  const GradedSpace sum = m.algebra.space.direct_sum(m.space);
  return presentation_on(AlgebraKind::Poisson, sum, m.algebra.eps,
                         direct_sum_map(sum, m.algebra.alpha, m.alpha, "alpha"),
                         direct_sum_map(sum, m.algebra.beta, m.beta, "beta"),
                         {semidirect_mu(m.bimodule_part(), sum), semidirect_bracket(m.lie_part(), sum)});
}

namespace {

MultiOp rb_mu(const AlgebraPresentation& p, const EvenLinearMap& r) {
  const EvenLinearMap id = EvenLinearMap::identity(p.space);
  const MultiOp& mu = p.op("mu");
  const MultiOp a = mu.precompose({&r, &id});
  const MultiOp b = mu.precompose({&id, &r});
  auto c = a.constants();
  for (const auto& [t, v] : b.constants()) c[t] = c.count(t) ? c[t] + v : v;
  return MultiOp("mu", {p.space, p.space}, p.space, c);
}

MultiOp rb_bracket(const AlgebraPresentation& p, const EvenLinearMap& r) {
  const EvenLinearMap id = EvenLinearMap::identity(p.space);
  const MultiOp& br = p.op("bracket");
  std::map<MultiOp::Tuple, Vector> c;
  for (const auto& maps : std::vector<std::vector<const EvenLinearMap*>>{{&r, &r, &id}, {&r, &id, &r}, {&id, &r, &r}}) {
    for (const auto& [t, v] : br.precompose(maps).constants()) c[t] = c.count(t) ? c[t] + v : v;
  }
  return MultiOp("bracket", {p.space, p.space, p.space}, p.space, c);
}

MultiOp kupershmidt_bracket(const ThreeLieRep& m, const EvenLinearMap& t) {
  const std::size_t d = m.space.dim();
  EpsIndex e(m.algebra.eps, m.space.degrees());
  const EvenLinearMap aiV_b = m.alpha.inverse().compose(m.beta);
  const EvenLinearMap aV_bi = m.alpha.compose(m.beta.inverse());
  std::map<MultiOp::Tuple, Vector> c;
  for (std::size_t u = 0; u < d; ++u) {
    for (std::size_t v = 0; v < d; ++v) {
      for (std::size_t w = 0; w < d; ++w) {
        const SparseVec tw = t.apply(aiV_b.column(w));
        Vector val = m.rho.eval(t.column(u), t.column(v), unit(w));
        val.add_scaled(m.rho.eval(t.column(u), tw, aV_bi.column(v)), -e(v, w));
        val.add_scaled(m.rho.eval(t.column(v), tw, aV_bi.column(u)), e({u}, {v, w}));
        if (!val.is_zero()) c.emplace(MultiOp::Tuple{u, v, w}, std::move(val));
      }
    }
  }
  return MultiOp("bracket", {m.space, m.space, m.space}, m.space, c);
}

MultiOp induced_pre_lie(const ThreeLieRep& m, const EvenLinearMap& t) {
  const EvenLinearMap id = EvenLinearMap::identity(m.space);
  return m.rho.precompose({&t, &t, &id}).renamed("bracket");
}

std::pair<MultiOp, MultiOp> induced_dendriform(const AssocBimodule& m, const EvenLinearMap& t) {
  const std::size_t d = m.space.dim();
  EpsIndex e(m.algebra.eps, m.space.degrees());
  std::map<MultiOp::Tuple, Vector> prec;
  std::map<MultiOp::Tuple, Vector> succ;
  for (std::size_t u = 0; u < d; ++u) {
    for (std::size_t v = 0; v < d; ++v) {
      const Vector p = e(u, v) * m.right.eval(t.column(v), unit(u));
      if (!p.is_zero()) prec.emplace(MultiOp::Tuple{u, v}, p);
      const Vector s = m.left.eval(t.column(u), unit(v));
      if (!s.is_zero()) succ.emplace(MultiOp::Tuple{u, v}, s);
    }
  }
  return {MultiOp("prec", {m.space, m.space}, m.space, prec), MultiOp("succ", {m.space, m.space}, m.space, succ)};
}

}  // namespace

AlgebraPresentation rb_induced_assoc(const AlgebraPresentation& p, const EvenLinearMap& r) {
  CheckReport pre;
  pre.merge("input", check_bihom_associative(p));
  pre.merge("operator", check_rota_baxter_assoc(p, r));
  require("rb_induced_assoc", pre);
  return presentation_on(AlgebraKind::Associative, p.space, p.eps, p.alpha, p.beta, {rb_mu(p, r)});
}

AlgebraPresentation kupershmidt_induced_3lie(const ThreeLieRep& m, const EvenLinearMap& t) {
  CheckReport pre;
  pre.merge("input", check_3_lie_rep(m));
  pre.merge("operator", check_kupershmidt_3lie(m, t));
  require("kupershmidt_induced_3lie", pre);
  return presentation_on(AlgebraKind::ThreeLie, m.space, m.algebra.eps, m.alpha, m.beta, {kupershmidt_bracket(m, t)});
}

AlgebraPresentation rb_induced_3lie(const AlgebraPresentation& p, const EvenLinearMap& r) {
  CheckReport pre;
  pre.merge("input", check_3_bihom_lie(p));
  pre.merge("operator", check_rota_baxter_3lie(p, r));
  require("rb_induced_3lie", pre);
  return presentation_on(AlgebraKind::ThreeLie, p.space, p.eps, p.alpha, p.beta, {rb_bracket(p, r)});
}

AlgebraPresentation rb_induced_poisson(const AlgebraPresentation& p, const EvenLinearMap& r) {
  CheckReport pre;
  pre.merge("input", check_nc_3_bihom_poisson(p));
  pre.merge("operator", check_rota_baxter_poisson(p, r));
  require("rb_induced_poisson", pre);
  return presentation_on(AlgebraKind::Poisson, p.space, p.eps, p.alpha, p.beta, {rb_mu(p, r), rb_bracket(p, r)});
}

AlgebraPresentation commutator_3lie_from_pre_lie(const AlgebraPresentation& p) {
  CheckReport pre;
  pre.merge("input", check_3_bihom_pre_lie(p));
  require("commutator_3lie_from_pre_lie", pre);
  return presentation_on(AlgebraKind::ThreeLie, p.space, p.eps, p.alpha, p.beta, {commutator_bracket(p)});
}

AlgebraPresentation sum_assoc_from_dendriform(const AlgebraPresentation& p) {
  CheckReport pre;
  pre.merge("input", check_bihom_dendriform(p));
  require("sum_assoc_from_dendriform", pre);
  return presentation_on(AlgebraKind::Associative, p.space, p.eps, p.alpha, p.beta, {dendriform_sum(p)});
}

AlgebraPresentation kupershmidt_induced_pre_lie(const ThreeLieRep& m, const EvenLinearMap& t) {
  CheckReport pre;
  pre.merge("input", check_3_lie_rep(m));
  pre.merge("operator", check_kupershmidt_3lie(m, t));
  require("kupershmidt_induced_pre_lie", pre);
  return presentation_on(AlgebraKind::PreLie, m.space, m.algebra.eps, m.alpha, m.beta, {induced_pre_lie(m, t)});
}

AlgebraPresentation kupershmidt_induced_dendriform(const AssocBimodule& m, const EvenLinearMap& t) {
  CheckReport pre;
  pre.merge("input", check_assoc_bimodule(m));
  pre.merge("operator", check_kupershmidt_assoc(m, t));
  require("kupershmidt_induced_dendriform", pre);
  auto [prec, succ] = induced_dendriform(m, t);
  return presentation_on(AlgebraKind::Dendriform, m.space, m.algebra.eps, m.alpha, m.beta,
                         {std::move(prec), std::move(succ)});
}

AlgebraPresentation kupershmidt_induced_pre_poisson(const PoissonRep& m, const EvenLinearMap& t) {
  CheckReport pre;
  pre.merge("input", check_poisson_rep(m));
  pre.merge("operator", check_kupershmidt_poisson(m, t));
  require("kupershmidt_induced_pre_poisson", pre);
  auto [prec, succ] = induced_dendriform(m.bimodule_part(), t);
  return presentation_on(AlgebraKind::PrePoisson, m.space, m.algebra.eps, m.alpha, m.beta,
                         {induced_pre_lie(m.lie_part(), t), std::move(prec), std::move(succ)});
}

AlgebraPresentation rb_induced_pre_lie(const AlgebraPresentation& p, const EvenLinearMap& r) {
  CheckReport pre;
  pre.merge("input", check_3_bihom_lie(p));
  pre.merge("operator", check_rota_baxter_3lie(p, r));
  require("rb_induced_pre_lie", pre);
  const EvenLinearMap id = EvenLinearMap::identity(p.space);
  return presentation_on(AlgebraKind::PreLie, p.space, p.eps, p.alpha, p.beta,
                         {p.op("bracket").precompose({&r, &r, &id}).renamed("bracket")});
}

namespace {

std::pair<MultiOp, MultiOp> rb_dendriform_ops(const AlgebraPresentation& p, const EvenLinearMap& r) {
  const EvenLinearMap id = EvenLinearMap::identity(p.space);
  const MultiOp& mu = p.op("mu");
  return {mu.precompose({&id, &r}).renamed("prec"), mu.precompose({&r, &id}).renamed("succ")};
}

}  // namespace

AlgebraPresentation rb_induced_dendriform(const AlgebraPresentation& p, const EvenLinearMap& r) {
  CheckReport pre;
  pre.merge("input", check_bihom_associative(p));
  pre.merge("operator", check_rota_baxter_assoc(p, r));
  require("rb_induced_dendriform", pre);
  auto [prec, succ] = rb_dendriform_ops(p, r);
  return presentation_on(AlgebraKind::Dendriform, p.space, p.eps, p.alpha, p.beta, {std::move(prec), std::move(succ)});
}

AlgebraPresentation rb_induced_pre_poisson(const AlgebraPresentation& p, const EvenLinearMap& r) {
  CheckReport pre;
  pre.merge("input", check_nc_3_bihom_poisson(p));
  pre.merge("operator", check_rota_baxter_poisson(p, r));
  require("rb_induced_pre_poisson", pre);
  const EvenLinearMap id = EvenLinearMap::identity(p.space);
  auto [prec, succ] = rb_dendriform_ops(p, r);
  return presentation_on(AlgebraKind::PrePoisson, p.space, p.eps, p.alpha, p.beta,
                         {p.op("bracket").precompose({&r, &r, &id}).renamed("bracket"), std::move(prec),
                          std::move(succ)});
}

AlgebraPresentation subadjacent_poisson_from_pre_poisson(const AlgebraPresentation& p) {
  CheckReport pre;
  pre.merge("input", check_3_bihom_pre_poisson(p));
  require("subadjacent_poisson_from_pre_poisson", pre);
  return presentation_on(AlgebraKind::Poisson, p.space, p.eps, p.alpha, p.beta,
                         {commutator_bracket(p), dendriform_sum(p)});
}

}  // namespace colorforge
