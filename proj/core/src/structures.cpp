// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "colorforge/structures.hpp"

#include <array>

#include "colorforge/errors.hpp"
#include "eval.hpp"

namespace colorforge {

using detail::EpsIndex;
using detail::Twists;
using detail::unit;

namespace {

using Tup = std::span<const std::size_t>;

void require_op(const AlgebraPresentation& p, const std::string& name, std::size_t arity) {
  const MultiOp& o = p.op(name);
  if (o.arity() != arity) throw StructuralError("operation '" + name + "' must have arity " + std::to_string(arity));
  for (const auto& a : o.args()) {
    if (!(a == p.space)) throw StructuralError("operation '" + name + "' is not defined on the algebra space");
  }
}

void add_structural(CheckReport& r, const AlgebraPresentation& p, const std::vector<std::string>& op_names) {
  for (const auto& name : op_names) r.add(detail::grading_entry("grading." + name, p.op(name)));
  r.add(detail::evenness_entry("even.alpha", p.alpha));
  r.add(detail::evenness_entry("even.beta", p.beta));
  r.add(detail::commute_entry("commute", p.alpha, p.beta));
  for (const auto* m : {&p.alpha, &p.beta}) {
    const std::string mname = m == &p.alpha ? "alpha" : "beta";
    for (const auto& name : op_names) {
      r.add(detail::multiplicative_entry("multiplicative." + mname + "." + name, p.op(name), *m));
    }
  }
}

std::vector<SparseVec> units(std::size_t n) {
  std::vector<SparseVec> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = unit(i);
  return out;
}

/// table[(a*n + b)*n + c] = op(f a, g b, h c) as sparse vectors.
std::vector<SparseVec> ternary_table(const MultiOp& op, const std::vector<SparseVec>& f, const std::vector<SparseVec>& g,
                                     const std::vector<SparseVec>& h) {
  const std::size_t n = f.size();
  std::vector<SparseVec> out(n * n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) out[(a * n + b) * n + c] = op.eval(f[a], g[b], h[c]).sparse();
    }
  }
  return out;
}

void add_associative(CheckReport& r, const AlgebraPresentation& p) {
  const MultiOp& mu = p.op("mu");
  const std::size_t n = p.dim();
  Twists tw(p.alpha, p.beta);
  const auto& A = tw.table(1, 0);
  const auto& B = tw.table(0, 1);
  r.add(check_identity_pair("associative", "mu(a x, mu(y, z)) = mu(mu(x, y), b z)", {n, n, n},
                            [&](Tup t, Vector& lhs, Vector& rhs) {
                              lhs = mu.eval(A[t[0]], mu.at(t[1], t[2]));
                              rhs = mu.eval(mu.at(t[0], t[1]), B[t[2]]);
                            }));
  if (p.commutative) {
    EpsIndex e(p.eps, p.space.degrees());
    r.add(check_identity_pair("commutative", "mu(b x, a y) = eps(x,y) mu(b y, a x)", {n, n},
                              [&](Tup t, Vector& lhs, Vector& rhs) {
                                lhs = mu.eval(B[t[0]], A[t[1]]);
                                rhs = e(t[0], t[1]) * mu.eval(B[t[1]], A[t[0]]);
                              }));
  }
}

void add_bihom_lie(CheckReport& r, const AlgebraPresentation& p) {
  const MultiOp& br = p.op("bracket");
  const std::size_t n = p.dim();
  Twists tw(p.alpha, p.beta);
  EpsIndex e(p.eps, p.space.degrees());
  const auto& A = tw.table(1, 0);
  const auto& B = tw.table(0, 1);
  const auto& B2 = tw.table(0, 2);
  const auto inner = ternary_table(br, B, B, A);
  auto I = [&](std::size_t a, std::size_t b, std::size_t c) -> const SparseVec& { return inner[(a * n + b) * n + c]; };

  r.add(check_identity_pair("skew.1", "[b x, b y, a z] = -eps(x,y) [b y, b x, a z]", {n, n, n},
                            [&](Tup t, Vector& lhs, Vector& rhs) {
                              lhs = Vector::from_sparse(n, I(t[0], t[1], t[2]));
                              rhs = Vector(n);
                              rhs.add_scaled(I(t[1], t[0], t[2]), -e(t[0], t[1]));
                            }));
  r.add(check_identity_pair("skew.2", "[b x, b y, a z] = -eps(y,z) [b x, b z, a y]", {n, n, n},
                            [&](Tup t, Vector& lhs, Vector& rhs) {
                              lhs = Vector::from_sparse(n, I(t[0], t[1], t[2]));
                              rhs = Vector(n);
                              rhs.add_scaled(I(t[0], t[2], t[1]), -e(t[1], t[2]));
                            }));
  r.add(check_identity_pair(
      "jacobi",
      "[b^2 x, b^2 y, [b z, b u, a v]] = eps(x+y+z, u+v) [b^2 u, b^2 v, [b x, b y, a z]] - eps(x+y, z+v) eps(u,v) "
      "[b^2 z, b^2 v, [b x, b y, a u]] + eps(x+y, z+u) [b^2 z, b^2 u, [b x, b y, a v]]",
      {n, n, n, n, n}, [&](Tup t, Vector& lhs, Vector& rhs) {
        const std::size_t x = t[0], y = t[1], z = t[2], u = t[3], v = t[4];
        lhs = Vector(n);
        rhs = Vector(n);
        auto outer = [&](std::size_t a, std::size_t b, const SparseVec& w, const Scalar& c, Vector& out) {
          if (w.empty() || B2[a].empty() || B2[b].empty()) return;
          const std::array<const SparseVec*, 3> args{&B2[a], &B2[b], &w};
          br.accumulate(args, c, out);
        };
        outer(x, y, I(z, u, v), Scalar(1), lhs);
        if (!I(x, y, z).empty()) outer(u, v, I(x, y, z), e({x, y, z}, {u, v}), rhs);
        if (!I(x, y, u).empty()) outer(z, v, I(x, y, u), -e({x, y}, {z, v}) * e(u, v), rhs);
        if (!I(x, y, v).empty()) outer(z, u, I(x, y, v), e({x, y}, {z, u}), rhs);
      }));
}

void add_leibniz(CheckReport& r, const AlgebraPresentation& p) {
  const MultiOp& br = p.op("bracket");
  const MultiOp& mu = p.op("mu");
  const std::size_t n = p.dim();
  Twists tw(p.alpha, p.beta);
  EpsIndex e(p.eps, p.space.degrees());
  const auto& A = tw.table(1, 0);
  const auto& B = tw.table(0, 1);
  const auto& AB = tw.table(1, 1);
  const auto U = units(n);
  const auto bbz = ternary_table(br, B, B, U);
  const auto aat = ternary_table(br, A, A, U);
  r.add(check_identity_pair(
      "leibniz", "{ab x, ab y, mu(z,t)} = mu({b x, b y, z}, b t) + eps(x+y, z) mu(b z, {a x, a y, t})", {n, n, n, n},
      [&](Tup t, Vector& lhs, Vector& rhs) {
        const std::size_t x = t[0], y = t[1], z = t[2], w = t[3];
        lhs = br.eval(AB[x], AB[y], mu.at(z, w));
        rhs = mu.eval(bbz[(x * n + y) * n + z], B[w]);
        const SparseVec& inner = aat[(x * n + y) * n + w];
        if (!inner.empty()) {
          const std::array<const SparseVec*, 2> args{&B[z], &inner};
          mu.accumulate(args, e({x, y}, {z}), rhs);
        }
      }));
}

void add_pre_lie(CheckReport& r, const AlgebraPresentation& p) {
  const MultiOp& pl = p.op("bracket");
  const std::size_t n = p.dim();
  Twists tw(p.alpha, p.beta);
  EpsIndex e(p.eps, p.space.degrees());
  const MultiOp comm = commutator_bracket(p);
  const auto U = units(n);
  const auto& A = tw.table(1, 0);
  const auto& B = tw.table(0, 1);
  const auto& AB = tw.table(1, 1);

  const auto skew_tab = ternary_table(pl, B, B, A);
  r.add(check_identity_pair("skew", "{b x, b y, a z} = -eps(x,y) {b y, b x, a z}", {n, n, n},
                            [&](Tup t, Vector& lhs, Vector& rhs) {
                              lhs = Vector::from_sparse(n, skew_tab[(t[0] * n + t[1]) * n + t[2]]);
                              rhs = Vector(n);
                              rhs.add_scaled(skew_tab[(t[1] * n + t[0]) * n + t[2]], -e(t[0], t[1]));
                            }));

  const auto cbb = ternary_table(comm, B, B, U);   // [b x4, b x5, x1]^C at (x4, x5, x1)
  const auto paa = ternary_table(pl, A, A, U);     // {a x4, a x5, x3}
  const auto pa1 = ternary_table(pl, A, U, U);     // {a x4, x2, x3}
  auto at3 = [n](const std::vector<SparseVec>& tab, std::size_t a, std::size_t b, std::size_t c) -> const SparseVec& {
    return tab[(a * n + b) * n + c];
  };
  auto acc = [](const MultiOp& op, const SparseVec& a, const SparseVec& b, const SparseVec& c, const Scalar& k,
                Vector& out) {
    if (a.empty() || b.empty() || c.empty()) return;
    const std::array<const SparseVec*, 3> args{&a, &b, &c};
    op.accumulate(args, k, out);
  };

  r.add(check_identity_pair(
      "identity.1",
      "{ab x4, ab x5, {x1, x2, x3}} = {[b x4, b x5, x1]^C, b x2, b x3} + eps(x1, x4+x5) {b x1, [b x4, b x5, x2]^C, "
      "b x3} + eps(x1+x2, x4+x5) {b x1, b x2, {a x4, a x5, x3}}",
      {n, n, n, n, n}, [&](Tup t, Vector& lhs, Vector& rhs) {
        const std::size_t x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3], x5 = t[4];
        lhs = Vector(n);
        rhs = Vector(n);
        acc(pl, AB[x4], AB[x5], pl.at(x1, x2, x3), Scalar(1), lhs);
        acc(pl, at3(cbb, x4, x5, x1), B[x2], B[x3], Scalar(1), rhs);
        acc(pl, B[x1], at3(cbb, x4, x5, x2), B[x3], e({x1}, {x4, x5}), rhs);
        acc(pl, B[x1], B[x2], at3(paa, x4, x5, x3), e({x1, x2}, {x4, x5}), rhs);
      }));
  r.add(check_identity_pair(
      "identity.2",
      "{[b x4, b x5, x1]^C, b x2, b x3} = eps(x4, x1+x5) {ab x5, b x1, {a x4, x2, x3}} + eps(x1, x4+x5) {b x1, ab x4, "
      "{a x5, x2, x3}} + {ab x4, ab x5, {x1, x2, x3}}",
      {n, n, n, n, n}, [&](Tup t, Vector& lhs, Vector& rhs) {
        const std::size_t x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3], x5 = t[4];
        lhs = Vector(n);
        rhs = Vector(n);
        acc(pl, at3(cbb, x4, x5, x1), B[x2], B[x3], Scalar(1), lhs);
        acc(pl, AB[x5], B[x1], at3(pa1, x4, x2, x3), e({x4}, {x1, x5}), rhs);
        acc(pl, B[x1], AB[x4], at3(pa1, x5, x2, x3), e({x1}, {x4, x5}), rhs);
        acc(pl, AB[x4], AB[x5], pl.at(x1, x2, x3), Scalar(1), rhs);
      }));
}

void add_dendriform(CheckReport& r, const AlgebraPresentation& p) {
  const MultiOp& prec = p.op("prec");
  const MultiOp& succ = p.op("succ");
  const MultiOp dot = dendriform_sum(p);
  const std::size_t n = p.dim();
  Twists tw(p.alpha, p.beta);
  const auto& A = tw.table(1, 0);
  const auto& B = tw.table(0, 1);
  r.add(check_identity_pair("dendriform.1", "(x < y) < b z = a x < (y . z)", {n, n, n},
                            [&](Tup t, Vector& lhs, Vector& rhs) {
                              lhs = prec.eval(prec.at(t[0], t[1]), B[t[2]]);
                              rhs = prec.eval(A[t[0]], dot.at(t[1], t[2]));
                            }));
  r.add(check_identity_pair("dendriform.2", "(x > y) < b z = a x > (y < z)", {n, n, n},
                            [&](Tup t, Vector& lhs, Vector& rhs) {
                              lhs = prec.eval(succ.at(t[0], t[1]), B[t[2]]);
                              rhs = succ.eval(A[t[0]], prec.at(t[1], t[2]));
                            }));
  r.add(check_identity_pair("dendriform.3", "a x > (y > z) = (x . y) > b z", {n, n, n},
                            [&](Tup t, Vector& lhs, Vector& rhs) {
                              lhs = succ.eval(A[t[0]], succ.at(t[1], t[2]));
                              rhs = succ.eval(dot.at(t[0], t[1]), B[t[2]]);
                            }));
}

void add_pre_poisson_compat(CheckReport& r, const AlgebraPresentation& p) {
  const MultiOp& pl = p.op("bracket");
  const MultiOp& prec = p.op("prec");
  const MultiOp& succ = p.op("succ");
  const std::size_t n = p.dim();
  Twists tw(p.alpha, p.beta);
  EpsIndex e(p.eps, p.space.degrees());
  auto T = [&](int a, int b, std::size_t i) -> const SparseVec& { return tw.img(a, b, i); };
  const auto U = units(n);
  auto sp = [](const Vector& v) { return v.sparse(); };

  r.add(check_identity_pair(
      "compatibility.1",
      "{ab^2 x, ab^2 y, z < a t} - {b^2 x, b^2 y, z} < ab t = eps(z, x+y) b z < ({ab x, ab y, a t} - eps(y,t) "
      "{ab x, b t, a^2 y} + eps(x, y+t) {ab y, b t, a^2 x})",
      {n, n, n, n}, [&](Tup tu, Vector& lhs, Vector& rhs) {
        const std::size_t x = tu[0], y = tu[1], z = tu[2], t = tu[3];
        lhs = pl.eval(T(1, 2, x), T(1, 2, y), sp(prec.eval(U[z], T(1, 0, t))));
        lhs -= prec.eval(sp(pl.eval(T(0, 2, x), T(0, 2, y), U[z])), T(1, 1, t));
        Vector c = pl.eval(T(1, 1, x), T(1, 1, y), T(1, 0, t));
        c.add_scaled(pl.eval(T(1, 1, x), T(0, 1, t), T(2, 0, y)), -e(y, t));
        c.add_scaled(pl.eval(T(1, 1, y), T(0, 1, t), T(2, 0, x)), e({x}, {y, t}));
        rhs = e({z}, {x, y}) * prec.eval(T(0, 1, z), c.sparse());
      }));
  r.add(check_identity_pair(
      "compatibility.2",
      "{ab x, a^2b y, a z > t} - eps(x+y, z) ab z > {a x, a^2 y, t} = ({b x, ab y, a z} - eps(y,z) {b x, b z, a^2 y} "
      "+ eps(x, y+z) {ab y, b z, a x}) > b t",
      {n, n, n, n}, [&](Tup tu, Vector& lhs, Vector& rhs) {
        const std::size_t x = tu[0], y = tu[1], z = tu[2], t = tu[3];
        lhs = pl.eval(T(1, 1, x), T(2, 1, y), sp(succ.eval(T(1, 0, z), U[t])));
        lhs.add_scaled(succ.eval(T(1, 1, z), sp(pl.eval(T(1, 0, x), T(2, 0, y), U[t]))), -e({x, y}, {z}));
        Vector c = pl.eval(T(0, 1, x), T(1, 1, y), T(1, 0, z));
        c.add_scaled(pl.eval(T(0, 1, x), T(0, 1, z), T(2, 0, y)), -e(y, z));
        c.add_scaled(pl.eval(T(1, 1, y), T(0, 1, z), T(1, 0, x)), e({x}, {y, z}));
        rhs = succ.eval(c.sparse(), T(0, 1, t));
      }));
  r.add(check_identity_pair(
      "compatibility.3",
      "{ab x, b(y < z), a^2b t} + {ab x, b(y > z), a^2b t} = eps(x,y) ab y > {a x, b z, a^2 t} + eps(z,t) "
      "{b x, b y, ab t} < ab z",
      {n, n, n, n}, [&](Tup tu, Vector& lhs, Vector& rhs) {
        const std::size_t x = tu[0], y = tu[1], z = tu[2], t = tu[3];
        const EvenLinearMap& beta = p.beta;
        lhs = pl.eval(T(1, 1, x), beta.apply(prec.at(y, z)), T(2, 1, t));
        lhs += pl.eval(T(1, 1, x), beta.apply(succ.at(y, z)), T(2, 1, t));
        rhs = e(x, y) * succ.eval(T(1, 1, y), sp(pl.eval(T(1, 0, x), T(0, 1, z), T(2, 0, t))));
        rhs.add_scaled(prec.eval(sp(pl.eval(T(0, 1, x), T(0, 1, y), T(1, 1, t))), T(1, 1, z)), e(z, t));
      }));
}

}  // namespace

CheckReport check_associative_color(const AlgebraPresentation& p) {
  require_op(p, "mu", 2);
  const MultiOp& mu = p.op("mu");
  const std::size_t n = p.dim();
  CheckReport r;
  r.add(detail::grading_entry("grading.mu", mu));
  r.add(check_identity_pair("associative", "mu(x, mu(y, z)) = mu(mu(x, y), z)", {n, n, n},
                            [&](Tup t, Vector& lhs, Vector& rhs) {
                              lhs = mu.eval(unit(t[0]), mu.at(t[1], t[2]));
                              rhs = mu.eval(mu.at(t[0], t[1]), unit(t[2]));
                            }));
  return r;
}

CheckReport check_bihom_associative(const AlgebraPresentation& p) {
  require_op(p, "mu", 2);
  CheckReport r;
  add_structural(r, p, {"mu"});
  add_associative(r, p);
  return r;
}

CheckReport check_3_lie_color(const AlgebraPresentation& p) {
  require_op(p, "bracket", 3);
  const MultiOp& br = p.op("bracket");
  const std::size_t n = p.dim();
  EpsIndex e(p.eps, p.space.degrees());
  const auto U = units(n);
  CheckReport r;
  r.add(detail::grading_entry("grading.bracket", br));
  r.add(check_identity_pair("skew.1", "[x, y, z] = -eps(x,y) [y, x, z]", {n, n, n}, [&](Tup t, Vector& lhs, Vector& rhs) {
    lhs = Vector::from_sparse(n, br.at(t[0], t[1], t[2]));
    rhs = Vector(n);
    rhs.add_scaled(br.at(t[1], t[0], t[2]), -e(t[0], t[1]));
  }));
  r.add(check_identity_pair("skew.2", "[x, y, z] = -eps(y,z) [x, z, y]", {n, n, n}, [&](Tup t, Vector& lhs, Vector& rhs) {
    lhs = Vector::from_sparse(n, br.at(t[0], t[1], t[2]));
    rhs = Vector(n);
    rhs.add_scaled(br.at(t[0], t[2], t[1]), -e(t[1], t[2]));
  }));
  r.add(check_identity_pair(
      "fundamental",
      "[x, y, [z, t, u]] = [[x, y, z], t, u] + eps(x+y, z) [z, [x, y, t], u] + eps(x+y, z+t) [z, t, [x, y, u]]",
      {n, n, n, n, n}, [&](Tup tu, Vector& lhs, Vector& rhs) {
        const std::size_t x = tu[0], y = tu[1], z = tu[2], t = tu[3], u = tu[4];
        lhs = br.eval(U[x], U[y], br.at(z, t, u));
        rhs = br.eval(br.at(x, y, z), U[t], U[u]);
        rhs.add_scaled(br.eval(U[z], br.at(x, y, t), U[u]), e({x, y}, {z}));
        rhs.add_scaled(br.eval(U[z], U[t], br.at(x, y, u)), e({x, y}, {z, t}));
      }));
  return r;
}

CheckReport check_3_bihom_lie(const AlgebraPresentation& p) {
  require_op(p, "bracket", 3);
  CheckReport r;
  add_structural(r, p, {"bracket"});
  add_bihom_lie(r, p);
  return r;
}

CheckReport check_nc_3_bihom_poisson(const AlgebraPresentation& p) {
  require_op(p, "bracket", 3);
  require_op(p, "mu", 2);
  CheckReport r;
  add_structural(r, p, {"mu", "bracket"});
  add_associative(r, p);
  add_bihom_lie(r, p);
  add_leibniz(r, p);
  return r;
}

MultiOp commutator_bracket(const AlgebraPresentation& p) {
  require_op(p, "bracket", 3);
  const MultiOp& pl = p.op("bracket");
  const std::size_t n = p.dim();
  Twists tw(p.alpha, p.beta);
  EpsIndex e(p.eps, p.space.degrees());
  const auto& BAi = tw.table(-1, 1);  // b a^-1
  const auto& ABi = tw.table(1, -1);  // a b^-1
  std::map<MultiOp::Tuple, Vector> constants;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        Vector v = Vector::from_sparse(n, pl.at(x, y, z));
        v.add_scaled(pl.eval(unit(x), BAi[z], ABi[y]), -e(y, z));
        v.add_scaled(pl.eval(unit(y), BAi[z], ABi[x]), e({x}, {y, z}));
        if (!v.is_zero()) constants.emplace(MultiOp::Tuple{x, y, z}, std::move(v));
      }
    }
  }
  return MultiOp("bracket", {p.space, p.space, p.space}, p.space, constants);
}

CheckReport check_3_bihom_pre_lie(const AlgebraPresentation& p) {
  require_op(p, "bracket", 3);
  CheckReport r;
  add_structural(r, p, {"bracket"});
  add_pre_lie(r, p);
  return r;
}

MultiOp dendriform_sum(const AlgebraPresentation& p) {
  require_op(p, "prec", 2);
  require_op(p, "succ", 2);
  auto constants = p.op("prec").constants();
  for (const auto& [t, v] : p.op("succ").constants()) {
    auto it = constants.find(t);
    if (it == constants.end()) {
      constants.emplace(t, v);
    } else {
      it->second += v;
    }
  }
  return MultiOp("mu", {p.space, p.space}, p.space, constants);
}

CheckReport check_bihom_dendriform(const AlgebraPresentation& p) {
  require_op(p, "prec", 2);
  require_op(p, "succ", 2);
  CheckReport r;
  add_structural(r, p, {"prec", "succ"});
  add_dendriform(r, p);
  return r;
}

CheckReport check_3_bihom_pre_poisson(const AlgebraPresentation& p) {
  require_op(p, "bracket", 3);
  require_op(p, "prec", 2);
  require_op(p, "succ", 2);
  CheckReport r;
  add_structural(r, p, {"bracket", "prec", "succ"});
  add_pre_lie(r, p);
  add_dendriform(r, p);
  add_pre_poisson_compat(r, p);
  return r;
}

CheckReport check_structure(const AlgebraPresentation& p) {
  switch (p.kind) {
    case AlgebraKind::Associative: return check_bihom_associative(p);
    case AlgebraKind::ThreeLie: return check_3_bihom_lie(p);
    case AlgebraKind::Poisson: return check_nc_3_bihom_poisson(p);
    case AlgebraKind::PreLie: return check_3_bihom_pre_lie(p);
    case AlgebraKind::Dendriform: return check_bihom_dendriform(p);
    case AlgebraKind::PrePoisson: return check_3_bihom_pre_poisson(p);
  }
  throw StructuralError("unknown algebra kind");
}

}  // namespace colorforge
