// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "colorforge/operators.hpp"

#include <array>

#include "colorforge/constructions.hpp"
#include "colorforge/errors.hpp"
#include "eval.hpp"

namespace colorforge {

using detail::EpsIndex;
using detail::unit;

namespace {

using Tup = std::span<const std::size_t>;

void require_operator_shape(const EvenLinearMap& t, const GradedSpace& domain, const GradedSpace& codomain,
                            const char* what) {
  if (!(t.domain() == domain) || !(t.codomain() == codomain)) {
    throw StructuralError(std::string(what) + " has the wrong domain or codomain");
  }
}

void add_operator_structural(CheckReport& r, const EvenLinearMap& t, const std::string& tname, const EvenLinearMap& a,
                             const EvenLinearMap& b, const EvenLinearMap& aV, const EvenLinearMap& bV) {
  r.add(detail::evenness_entry("even." + tname, t));
  r.add(detail::map_equation_entry("intertwine.alpha", tname + " a_V = a " + tname, t, aV, a, t));
  r.add(detail::map_equation_entry("intertwine.beta", tname + " b_V = b " + tname, t, bV, b, t));
}

AxiomResult kupershmidt_assoc_entry(const std::string& id, const AssocBimodule& m, const EvenLinearMap& t) {
  const MultiOp& mu = m.algebra.op("mu");
  const std::size_t d = m.space.dim();
  const std::size_t n = m.algebra.dim();
  EpsIndex e(m.algebra.eps, m.space.degrees());
  return check_identity_pair(id, "mu(T u, T v) = T(l(T u) v + eps(u,v) r(T v) u)", {d, d},
                             [&](Tup tu, Vector& lhs, Vector& rhs) {
                               const std::size_t u = tu[0], v = tu[1];
                               lhs = mu.eval(t.column(u), t.column(v));
                               Vector inner = m.left.eval(t.column(u), unit(v));
                               inner.add_scaled(m.right.eval(t.column(v), unit(u)), e(u, v));
                               rhs = Vector::from_sparse(n, t.apply(inner.sparse()));
                             });
}

AxiomResult kupershmidt_3lie_entry(const std::string& id, const ThreeLieRep& m, const EvenLinearMap& t) {
  const MultiOp& br = m.algebra.op("bracket");
  const std::size_t d = m.space.dim();
  const std::size_t n = m.algebra.dim();
  EpsIndex e(m.algebra.eps, m.space.degrees());
  const EvenLinearMap aiV_b = m.alpha.inverse().compose(m.beta);   // a_V^-1 b_V
  const EvenLinearMap aV_bi = m.alpha.compose(m.beta.inverse());   // a_V b_V^-1
  return check_identity_pair(
      id,
      "[T u, T v, T w] = T(rho(T u, T v) w - eps(v,w) rho(T u, T(a_V^-1 b_V w)) a_V b_V^-1 v + eps(u, v+w) "
      "rho(T v, T(a_V^-1 b_V w)) a_V b_V^-1 u)",
      {d, d, d}, [&](Tup tu, Vector& lhs, Vector& rhs) {
        const std::size_t u = tu[0], v = tu[1], w = tu[2];
        lhs = br.eval(t.column(u), t.column(v), t.column(w));
        const SparseVec tw = t.apply(aiV_b.column(w));
        Vector inner = m.rho.eval(t.column(u), t.column(v), unit(w));
        inner.add_scaled(m.rho.eval(t.column(u), tw, aV_bi.column(v)), -e(v, w));
        inner.add_scaled(m.rho.eval(t.column(v), tw, aV_bi.column(u)), e({u}, {v, w}));
        rhs = Vector::from_sparse(n, t.apply(inner.sparse()));
      });
}

AxiomResult rota_baxter_assoc_entry(const std::string& id, const AlgebraPresentation& p, const EvenLinearMap& r) {
  const MultiOp& mu = p.op("mu");
  const std::size_t n = p.dim();
  return check_identity_pair(id, "mu(R x, R y) = R(mu(R x, y) + mu(x, R y))", {n, n},
                             [&](Tup t, Vector& lhs, Vector& rhs) {
                               lhs = mu.eval(r.column(t[0]), r.column(t[1]));
                               Vector inner = mu.eval(r.column(t[0]), unit(t[1]));
                               inner += mu.eval(unit(t[0]), r.column(t[1]));
                               rhs = r.apply(inner);
                             });
}

AxiomResult rota_baxter_3lie_entry(const std::string& id, const AlgebraPresentation& p, const EvenLinearMap& r) {
  const MultiOp& br = p.op("bracket");
  const std::size_t n = p.dim();
  return check_identity_pair(id, "[R x, R y, R z] = R([R x, R y, z] + [R x, y, R z] + [x, R y, R z])", {n, n, n},
                             [&](Tup t, Vector& lhs, Vector& rhs) {
                               const auto& rx = r.column(t[0]);
                               const auto& ry = r.column(t[1]);
                               const auto& rz = r.column(t[2]);
                               lhs = br.eval(rx, ry, rz);
                               Vector inner = br.eval(rx, ry, unit(t[2]));
                               inner += br.eval(rx, unit(t[1]), rz);
                               inner += br.eval(unit(t[0]), ry, rz);
                               rhs = r.apply(inner);
                             });
}

}  // namespace

CheckReport check_kupershmidt_assoc(const AssocBimodule& m, const EvenLinearMap& t) {
  m.validate_shape();
  require_operator_shape(t, m.space, m.algebra.space, "Kupershmidt operator");
  CheckReport r;
  add_operator_structural(r, t, "T", m.algebra.alpha, m.algebra.beta, m.alpha, m.beta);
  r.add(kupershmidt_assoc_entry("kupershmidt", m, t));
  return r;
}

CheckReport check_rota_baxter_assoc(const AlgebraPresentation& p, const EvenLinearMap& r) {
  p.op("mu");
  require_operator_shape(r, p.space, p.space, "Rota-Baxter operator");
  CheckReport out;
  add_operator_structural(out, r, "R", p.alpha, p.beta, p.alpha, p.beta);
  out.add(rota_baxter_assoc_entry("rota_baxter", p, r));
  return out;
}

CheckReport check_kupershmidt_3lie(const ThreeLieRep& m, const EvenLinearMap& t) {
  m.validate_shape();
  require_operator_shape(t, m.space, m.algebra.space, "Kupershmidt operator");
  CheckReport r;
  add_operator_structural(r, t, "T", m.algebra.alpha, m.algebra.beta, m.alpha, m.beta);
  r.add(kupershmidt_3lie_entry("kupershmidt", m, t));
  return r;
}

CheckReport check_rota_baxter_3lie(const AlgebraPresentation& p, const EvenLinearMap& r) {
  p.op("bracket");
  require_operator_shape(r, p.space, p.space, "Rota-Baxter operator");
  CheckReport out;
  add_operator_structural(out, r, "R", p.alpha, p.beta, p.alpha, p.beta);
  out.add(rota_baxter_3lie_entry("rota_baxter", p, r));
  return out;
}

CheckReport check_kupershmidt_poisson(const PoissonRep& m, const EvenLinearMap& t) {
  m.validate_shape();
  require_operator_shape(t, m.space, m.algebra.space, "Kupershmidt operator");
  CheckReport r;
  add_operator_structural(r, t, "T", m.algebra.alpha, m.algebra.beta, m.alpha, m.beta);
  r.add(kupershmidt_assoc_entry("kupershmidt.mu", m.bimodule_part(), t));
  r.add(kupershmidt_3lie_entry("kupershmidt.bracket", m.lie_part(), t));
  return r;
}

CheckReport check_rota_baxter_poisson(const AlgebraPresentation& p, const EvenLinearMap& r) {
  p.op("mu");
  p.op("bracket");
  require_operator_shape(r, p.space, p.space, "Rota-Baxter operator");
  CheckReport out;
  add_operator_structural(out, r, "R", p.alpha, p.beta, p.alpha, p.beta);
  out.add(rota_baxter_assoc_entry("rota_baxter.mu", p, r));
  out.add(rota_baxter_3lie_entry("rota_baxter.bracket", p, r));
  return out;
}

CheckReport check_rota_baxter(const AlgebraPresentation& p, const EvenLinearMap& r) {
  switch (p.kind) {
    case AlgebraKind::Associative: return check_rota_baxter_assoc(p, r);
    case AlgebraKind::ThreeLie: return check_rota_baxter_3lie(p, r);
    case AlgebraKind::Poisson: return check_rota_baxter_poisson(p, r);
    default: throw StructuralError("Rota-Baxter operators are defined for associative, 3lie and poisson presentations");
  }
}

namespace {

/// (g-part, V-part) of a vector of g + V, and back.
Vector g_part(const Vector& x, std::size_t n) {
  return Vector(std::vector<Scalar>(x.coords().begin(), x.coords().begin() + static_cast<long>(n)));
}
Vector v_part(const Vector& x, std::size_t n) {
  return Vector(std::vector<Scalar>(x.coords().begin() + static_cast<long>(n), x.coords().end()));
}
/// T u + u in g + V for basis vector u.
SparseVec graph_element(const EvenLinearMap& t, std::size_t u) {
  SparseVec out = t.column(u);
  out.emplace_back(t.codomain().dim() + u, Scalar(1));
  return out;
}

void add_graph_invariance(CheckReport& r, const AlgebraPresentation& doubled, const EvenLinearMap& t) {
  const std::size_t n = t.codomain().dim();
  const std::size_t d = t.domain().dim();
  for (const auto* m : {&doubled.alpha, &doubled.beta}) {
    const std::string name = m == &doubled.alpha ? "alpha" : "beta";
    r.add(check_identity_pair("graph." + name + "_invariant",
                              name + "+" + name + "_V maps T u + u into the graph", {d},
                              [&](Tup tu, Vector& lhs, Vector& rhs) {
                                const Vector img = Vector::from_sparse(n + d, m->apply(graph_element(t, tu[0])));
                                lhs = g_part(img, n);
                                rhs = t.apply(v_part(img, n));
                              }));
  }
}

}  // namespace

CheckReport check_graph_subalgebra_3lie(const ThreeLieRep& m, const EvenLinearMap& t) {
  m.validate_shape();
  require_operator_shape(t, m.space, m.algebra.space, "Kupershmidt operator");
  const AlgebraPresentation doubled = semidirect_3lie(m);
  const MultiOp& br = doubled.op("bracket");
  const std::size_t n = m.algebra.dim();
  const std::size_t d = m.space.dim();
  std::vector<SparseVec> graph(d);
  for (std::size_t u = 0; u < d; ++u) graph[u] = graph_element(t, u);
  CheckReport r;
  add_graph_invariance(r, doubled, t);
  r.add(check_identity_pair("graph.closed", "[T u + u, T v + v, T w + w] lies in the graph", {d, d, d},
                            [&](Tup tu, Vector& lhs, Vector& rhs) {
                              const Vector x = br.eval(graph[tu[0]], graph[tu[1]], graph[tu[2]]);
                              lhs = g_part(x, n);
                              rhs = t.apply(v_part(x, n));
                            }));
  return r;
}

CheckReport check_graph_subalgebra_assoc(const AssocBimodule& m, const EvenLinearMap& t) {
  m.validate_shape();
  require_operator_shape(t, m.space, m.algebra.space, "Kupershmidt operator");
  const AlgebraPresentation doubled = semidirect_assoc(m);
  const MultiOp& mu = doubled.op("mu");
  const std::size_t n = m.algebra.dim();
  const std::size_t d = m.space.dim();
  std::vector<SparseVec> graph(d);
  for (std::size_t u = 0; u < d; ++u) graph[u] = graph_element(t, u);
  CheckReport r;
  add_graph_invariance(r, doubled, t);
  r.add(check_identity_pair("graph.closed", "(T u + u)(T v + v) lies in the graph", {d, d},
                            [&](Tup tu, Vector& lhs, Vector& rhs) {
                              const Vector x = mu.eval(graph[tu[0]], graph[tu[1]]);
                              lhs = g_part(x, n);
                              rhs = t.apply(v_part(x, n));
                            }));
  return r;
}

}  // namespace colorforge
