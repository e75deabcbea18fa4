// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "colorforge/representations.hpp"

#include <array>

#include "colorforge/errors.hpp"
#include "colorforge/structures.hpp"
#include "eval.hpp"

namespace colorforge {

using detail::EpsIndex;
using detail::Twists;
using detail::unit;

namespace {

using Tup = std::span<const std::size_t>;

void add_module_structural(CheckReport& r, const std::vector<const MultiOp*>& actions, const EvenLinearMap& aV,
                           const EvenLinearMap& bV) {
  for (const MultiOp* a : actions) r.add(detail::grading_entry("grading." + a->name(), *a));
  r.add(detail::evenness_entry("even.alpha_V", aV));
  r.add(detail::evenness_entry("even.beta_V", bV));
  r.add(detail::commute_entry("commute", aV, bV));
}

void add_bimodule_axioms(CheckReport& r, const AssocBimodule& m) {
  const MultiOp& mu = m.algebra.op("mu");
  const MultiOp& l = m.left;
  const MultiOp& rt = m.right;
  const std::size_t n = m.algebra.dim();
  const std::size_t d = m.space.dim();
  Twists tg(m.algebra.alpha, m.algebra.beta);
  EpsIndex e(m.algebra.eps, m.algebra.space.degrees());
  const auto& A = tg.table(1, 0);
  const auto& B = tg.table(0, 1);

  r.add(detail::intertwine_entry("left.alpha", "a_V(l(x) u) = l(a x) a_V u", l, {&m.algebra.alpha, &m.alpha}, m.alpha));
  r.add(detail::intertwine_entry("left.beta", "b_V(l(x) u) = l(b x) b_V u", l, {&m.algebra.beta, &m.beta}, m.beta));
  r.add(detail::intertwine_entry("right.alpha", "a_V(r(x) u) = r(a x) a_V u", rt, {&m.algebra.alpha, &m.alpha}, m.alpha));
  r.add(detail::intertwine_entry("right.beta", "b_V(r(x) u) = r(b x) b_V u", rt, {&m.algebra.beta, &m.beta}, m.beta));

  r.add(check_identity_pair("bimodule.1", "l(a x) l(y) v = l(mu(x,y)) b_V v", {n, n, d},
                            [&](Tup t, Vector& lhs, Vector& rhs) {
                              lhs = l.eval(A[t[0]], l.at(t[1], t[2]));
                              rhs = l.eval(mu.at(t[0], t[1]), m.beta.column(t[2]));
                            }));
  r.add(check_identity_pair("bimodule.2", "l(a x) r(y) v = eps(x,y) r(b y) l(x) v", {n, n, d},
                            [&](Tup t, Vector& lhs, Vector& rhs) {
                              lhs = l.eval(A[t[0]], rt.at(t[1], t[2]));
                              rhs = e(t[0], t[1]) * rt.eval(B[t[1]], l.at(t[0], t[2]));
                            }));
  r.add(check_identity_pair("bimodule.3", "r(mu(x,y)) a_V v = eps(x,y) r(b y) r(x) v", {n, n, d},
                            [&](Tup t, Vector& lhs, Vector& rhs) {
                              lhs = rt.eval(mu.at(t[0], t[1]), m.alpha.column(t[2]));
                              rhs = e(t[0], t[1]) * rt.eval(B[t[1]], rt.at(t[0], t[2]));
                            }));
}

void add_lie_rep_axioms(CheckReport& r, const ThreeLieRep& m) {
  const MultiOp& br = m.algebra.op("bracket");
  const MultiOp& rho = m.rho;
  const std::size_t n = m.algebra.dim();
  const std::size_t d = m.space.dim();
  Twists tg(m.algebra.alpha, m.algebra.beta);
  EpsIndex e(m.algebra.eps, m.algebra.space.degrees());
  const auto& A = tg.table(1, 0);
  const auto& B = tg.table(0, 1);
  const auto& AB = tg.table(1, 1);
  auto acc = [&](const SparseVec& a, const SparseVec& b, const SparseVec& w, const Scalar& c, Vector& out) {
    if (a.empty() || b.empty() || w.empty()) return;
    const std::array<const SparseVec*, 3> args{&a, &b, &w};
    rho.accumulate(args, c, out);
  };
  // [b u, b v, x] for all (u, v, x).
  std::vector<SparseVec> bbx(n * n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t x = 0; x < n; ++x) bbx[(u * n + v) * n + x] = br.eval(B[u], B[v], unit(x)).sparse();
    }
  }
  auto BBX = [&](std::size_t u, std::size_t v, std::size_t x) -> const SparseVec& { return bbx[(u * n + v) * n + x]; };

  r.add(check_identity_pair("rho.skew", "rho(x, y) w = -eps(x,y) rho(y, x) w", {n, n, d},
                            [&](Tup t, Vector& lhs, Vector& rhs) {
                              lhs = Vector::from_sparse(d, rho.at(t[0], t[1], t[2]));
                              rhs = Vector(d);
                              rhs.add_scaled(rho.at(t[1], t[0], t[2]), -e(t[0], t[1]));
                            }));
  r.add(detail::intertwine_entry("rep.1", "rho(a u, a v) a_V = a_V rho(u, v)", rho,
                                 {&m.algebra.alpha, &m.algebra.alpha, &m.alpha}, m.alpha));
  r.add(detail::intertwine_entry("rep.2", "rho(b u, b v) b_V = b_V rho(u, v)", rho,
                                 {&m.algebra.beta, &m.algebra.beta, &m.beta}, m.beta));
  r.add(check_identity_pair(
      "rep.3",
      "rho(ab u, ab v) rho(x, y) = eps(x+y, u+v) rho(b x, b y) rho(a u, a v) + rho([b u, b v, x], b y) b_V "
      "+ eps(x, u+v) rho(b x, [b u, b v, y]) b_V",
      {n, n, n, n, d}, [&](Tup t, Vector& lhs, Vector& rhs) {
        const std::size_t x = t[0], y = t[1], u = t[2], v = t[3], w = t[4];
        lhs = Vector(d);
        rhs = Vector(d);
        acc(AB[u], AB[v], rho.at(x, y, w), Scalar(1), lhs);
        const SparseVec inner = rho.eval(A[u], A[v], unit(w)).sparse();
        acc(B[x], B[y], inner, e({x, y}, {u, v}), rhs);
        acc(BBX(u, v, x), B[y], m.beta.column(w), Scalar(1), rhs);
        acc(B[x], BBX(u, v, y), m.beta.column(w), e({x}, {u, v}), rhs);
      }));
  r.add(check_identity_pair(
      "rep.4",
      "rho([b u, b v, x], b y) b_V = eps(u, x+v) rho(ab v, b x) rho(a u, y) + eps(x, u+v) rho(b x, ab u) "
      "rho(a v, y) + rho(ab u, ab v) rho(x, y)",
      {n, n, n, n, d}, [&](Tup t, Vector& lhs, Vector& rhs) {
        const std::size_t x = t[0], y = t[1], u = t[2], v = t[3], w = t[4];
        lhs = Vector(d);
        rhs = Vector(d);
        acc(BBX(u, v, x), B[y], m.beta.column(w), Scalar(1), lhs);
        acc(AB[v], B[x], rho.eval(A[u], unit(y), unit(w)).sparse(), e({u}, {x, v}), rhs);
        acc(B[x], AB[u], rho.eval(A[v], unit(y), unit(w)).sparse(), e({x}, {u, v}), rhs);
        acc(AB[u], AB[v], rho.at(x, y, w), Scalar(1), rhs);
      }));
}

void add_poisson_rep_axioms(CheckReport& r, const PoissonRep& m) {
  const MultiOp& br = m.algebra.op("bracket");
  const MultiOp& mu = m.algebra.op("mu");
  const MultiOp& rho = m.rho;
  const MultiOp& l = m.left;
  const MultiOp& rt = m.right;
  const std::size_t n = m.algebra.dim();
  const std::size_t d = m.space.dim();
  Twists tg(m.algebra.alpha, m.algebra.beta);
  Twists tv(m.alpha, m.beta);
  EpsIndex e(m.algebra.eps, m.algebra.space.degrees());
  auto G = [&](int a, int b, std::size_t i) -> const SparseVec& { return tg.img(a, b, i); };
  auto V = [&](int a, int b, std::size_t i) -> const SparseVec& { return tv.img(a, b, i); };
  auto sp = [](const Vector& v) { return v.sparse(); };

  r.add(check_identity_pair(
      "poisson.1", "rho(ab x, ab y) l(z) = l({b x, b y, z}) b_V + eps(x+y, z) l(b z) rho(a x, a y)", {n, n, n, d},
      [&](Tup t, Vector& lhs, Vector& rhs) {
        const std::size_t x = t[0], y = t[1], z = t[2], w = t[3];
        lhs = rho.eval(G(1, 1, x), G(1, 1, y), l.at(z, w));
        rhs = l.eval(sp(br.eval(G(0, 1, x), G(0, 1, y), unit(z))), V(0, 1, w));
        rhs.add_scaled(l.eval(G(0, 1, z), sp(rho.eval(G(1, 0, x), G(1, 0, y), unit(w)))), e({x, y}, {z}));
      }));
  r.add(check_identity_pair(
      "poisson.2", "rho(ab x, ab y) r(z) = eps(x+y, z) r(b z) rho(b x, b y) + r({a x, a y, z}) b_V", {n, n, n, d},
      [&](Tup t, Vector& lhs, Vector& rhs) {
        const std::size_t x = t[0], y = t[1], z = t[2], w = t[3];
        lhs = rho.eval(G(1, 1, x), G(1, 1, y), rt.at(z, w));
        rhs = e({x, y}, {z}) * rt.eval(G(0, 1, z), sp(rho.eval(G(0, 1, x), G(0, 1, y), unit(w))));
        rhs += rt.eval(sp(br.eval(G(1, 0, x), G(1, 0, y), unit(z))), V(0, 1, w));
      }));
  r.add(check_identity_pair(
      "poisson.3",
      "rho(ab x, mu(b y, b z)) a_V^2 b_V = eps(x+y, z) r(ab z) rho(x, b^2 y) a_V b_V + eps(x,y) l(ab y) "
      "rho(a x, b z) a_V^2",
      {n, n, n, d}, [&](Tup t, Vector& lhs, Vector& rhs) {
        const std::size_t x = t[0], y = t[1], z = t[2], w = t[3];
        lhs = rho.eval(G(1, 1, x), sp(mu.eval(G(0, 1, y), G(0, 1, z))), V(2, 1, w));
        rhs = e({x, y}, {z}) * rt.eval(G(1, 1, z), sp(rho.eval(unit(x), G(0, 2, y), V(1, 1, w))));
        rhs.add_scaled(l.eval(G(1, 1, y), sp(rho.eval(G(1, 0, x), G(0, 1, z), V(2, 0, w)))), e(x, y));
      }));
}

}  // namespace

CheckReport check_assoc_bimodule(const AssocBimodule& m) {
  m.validate_shape();
  CheckReport r;
  r.merge("algebra", check_bihom_associative(m.algebra));
  add_module_structural(r, {&m.left, &m.right}, m.alpha, m.beta);
  add_bimodule_axioms(r, m);
  return r;
}

CheckReport check_3_lie_rep(const ThreeLieRep& m) {
  m.validate_shape();
  CheckReport r;
  r.merge("algebra", check_3_bihom_lie(m.algebra));
  add_module_structural(r, {&m.rho}, m.alpha, m.beta);
  add_lie_rep_axioms(r, m);
  return r;
}

CheckReport check_poisson_rep(const PoissonRep& m) {
  m.validate_shape();
  CheckReport r;
  r.merge("algebra", check_nc_3_bihom_poisson(m.algebra));
  add_module_structural(r, {&m.rho, &m.left, &m.right}, m.alpha, m.beta);
  add_bimodule_axioms(r, m.bimodule_part());
  add_lie_rep_axioms(r, m.lie_part());
  add_poisson_rep_axioms(r, m);
  return r;
}

ThreeLieRep adjoint_rep(const AlgebraPresentation& p, int r, int s) {
  p.validate_shape();
  const MultiOp& br = p.op("bracket");
  const EvenLinearMap ar = p.alpha.power(r);
  const EvenLinearMap bs = p.beta.power(s);
  const EvenLinearMap twist = ar.compose(bs);
  const EvenLinearMap id = EvenLinearMap::identity(p.space);
  MultiOp rho = br.precompose({&twist, &twist, &id}).renamed("rho");
  return ThreeLieRep{p, p.space, p.alpha.renamed("alpha_V"), p.beta.renamed("beta_V"), std::move(rho)};
}

AssocBimodule regular_bimodule(const AlgebraPresentation& p) {
  p.validate_shape();
  const MultiOp& mu = p.op("mu");
  const std::size_t n = p.dim();
  EpsIndex e(p.eps, p.space.degrees());
  std::map<MultiOp::Tuple, Vector> rc;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t u = 0; u < n; ++u) {
      if (!mu.at(u, y).empty()) rc.emplace(MultiOp::Tuple{y, u}, e(y, u) * Vector::from_sparse(n, mu.at(u, y)));
    }
  }
  AlgebraPresentation a = p;
  return AssocBimodule{std::move(a),
                       p.space,
                       p.alpha.renamed("alpha_V"),
                       p.beta.renamed("beta_V"),
                       mu.renamed("l"),
                       MultiOp("r", {p.space, p.space}, p.space, rc)};
}

PoissonRep adjoint_poisson_rep(const AlgebraPresentation& p) {
  ThreeLieRep ad = adjoint_rep(p, 0, 0);
  AssocBimodule reg = regular_bimodule(p);
  return PoissonRep{p, p.space, ad.alpha, ad.beta, ad.rho, reg.left, reg.right};
}

}  // namespace colorforge
