// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "colorforge/theorems.hpp"

#include <array>
#include <memory>

#include "colorforge/constructions.hpp"
#include "colorforge/errors.hpp"
#include "colorforge/representations.hpp"
#include "colorforge/structures.hpp"

namespace colorforge {

namespace {

[[noreturn]] void refuse(const std::string& theorem, const std::string& id, const std::string& note) {
  CheckReport r;
  AxiomResult a;
  a.id = id;
  a.statement = note;
  a.passed = false;
  a.note = note;
  r.add(std::move(a));
  throw PreconditionFailed(theorem, std::make_shared<const CheckReport>(std::move(r)));
}

void require(const std::string& theorem, const std::string& prefix, const CheckReport& r) {
  if (r.passed()) return;
  CheckReport out;
  out.merge(prefix, r);
  throw PreconditionFailed(theorem, std::make_shared<const CheckReport>(std::move(out)));
}

void require_kind(const std::string& theorem, const AlgebraPresentation& p, std::initializer_list<AlgebraKind> kinds) {
  for (AlgebraKind k : kinds) {
    if (p.kind == k) return;
  }
  refuse(theorem, "input.kind", "theorem does not apply to kind '" + std::string(kind_name(p.kind)) + "'");
}

EvenLinearMap require_operator(const std::string& theorem, const Document& doc) {
  auto op = build_operator(doc);
  if (!op) refuse(theorem, "input.operator", "document has no operator block");
  return *op;
}

template <class M>
M require_module(const std::string& theorem, const Document& doc) {
  Module m = module_or_adjoint(doc);
  if (auto* x = std::get_if<M>(&m)) return std::move(*x);
  refuse(theorem, "input.module", "module block has the wrong kind for this theorem");
}

class Recorder {
 public:
  explicit Recorder(std::string theorem) { out_.theorem = std::move(theorem); }

  void check(const std::string& label, const CheckReport& r) {
    ++out_.cases;
    if (r.passed()) return;
    out_.holds = false;
    out_.log.push_back(label + ": fails " + r.first_failure()->id);
    if (!out_.counterexample) out_.counterexample = r;
  }

  void expect(const std::string& label, bool ok, const std::string& detail) {
    ++out_.cases;
    if (ok) return;
    out_.holds = false;
    out_.log.push_back(label + ": " + detail);
  }

  TheoremOutcome finish() {
    out_.log.push_back(std::to_string(out_.cases) + " cases, " + (out_.holds ? "theorem holds" : "theorem fails"));
    return std::move(out_);
  }

 private:
  TheoremOutcome out_;
};

std::string pair_label(std::size_t i) { return "pair " + std::to_string(i); }

TheoremOutcome twist(const std::string& name, AlgebraKind kind, const Document& doc, const TheoremOptions& opts) {
  const AlgebraPresentation p = build_algebra(doc);
  require_kind(name, p, {kind});
  std::vector<std::pair<EvenLinearMap, EvenLinearMap>> pairs;
  auto a = build_map(doc, "twist_alpha");
  auto b = build_map(doc, "twist_beta");
  if (a || b) {
    pairs.emplace_back(a ? *a : EvenLinearMap::identity(p.space, "alpha"), b ? *b : EvenLinearMap::identity(p.space, "beta"));
  } else {
    pairs = twisting_pairs(p, opts.morphisms, opts.max_pairs);
  }
  const Twister twister(p);
  Recorder rec(name);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    rec.check(pair_label(i), check_structure(twister(pairs[i].first, pairs[i].second)));
  }
  return rec.finish();
}

std::string verdict(bool b) { return b ? "pass" : "fail"; }

TheoremOutcome semidirect_iff(const std::string& name, const Document& doc) {
  Recorder rec(name);
  const Module m = module_or_adjoint(doc);
  bool rep = false;
  bool doubled = false;
  if (name == "semidirect-assoc-iff") {
    const auto& x = std::get<AssocBimodule>(m);
    rep = check_assoc_bimodule(x).passed();
    doubled = check_structure(semidirect_assoc(x)).passed();
  } else if (name == "semidirect-3lie-iff") {
    const auto* x = std::get_if<ThreeLieRep>(&m);
    if (!x) refuse(name, "input.module", "needs a 3lie representation");
    rep = check_3_lie_rep(*x).passed();
    doubled = check_structure(semidirect_3lie(*x)).passed();
  } else {
    const auto* x = std::get_if<PoissonRep>(&m);
    if (!x) refuse(name, "input.module", "needs a Poisson representation");
    rep = check_poisson_rep(*x).passed();
    doubled = check_structure(semidirect_poisson(*x)).passed();
  }
  rec.expect("module", rep == doubled, "module checker " + verdict(rep) + ", doubled algebra " + verdict(doubled));
  return rec.finish();
}

TheoremOutcome graph_kupershmidt(const std::string& name, const Document& doc, const TheoremOptions& opts) {
  const Module m = module_or_adjoint(doc);
  Recorder rec(name);
  auto run = [&](const GradedSpace& v, const GradedSpace& g, auto&& kup, auto&& graph) {
    std::vector<EvenLinearMap> candidates;
    if (auto t = build_operator(doc)) {
      candidates.push_back(*t);
    } else {
      candidates = all_even_maps(v, g, opts.operators, "T");
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const bool k = kup(candidates[i]);
      const bool gr = graph(candidates[i]);
      rec.expect("candidate " + std::to_string(i), k == gr,
                 "Kupershmidt " + verdict(k) + ", graph subalgebra " + verdict(gr));
    }
  };
  if (const auto* x = std::get_if<ThreeLieRep>(&m)) {
    run(
        x->space, x->algebra.space, [&](const EvenLinearMap& t) { return check_kupershmidt_3lie(*x, t).passed(); },
        [&](const EvenLinearMap& t) { return check_graph_subalgebra_3lie(*x, t).passed(); });
  } else if (const auto* y = std::get_if<AssocBimodule>(&m)) {
    run(
        y->space, y->algebra.space, [&](const EvenLinearMap& t) { return check_kupershmidt_assoc(*y, t).passed(); },
        [&](const EvenLinearMap& t) { return check_graph_subalgebra_assoc(*y, t).passed(); });
  } else {
    refuse(name, "input.module", "needs a 3lie representation or an associative bimodule");
  }
  return rec.finish();
}

bool transports(const MultiOp& induced, const MultiOp& target, const EvenLinearMap& t) {
  std::vector<const EvenLinearMap*> maps(target.arity(), &t);
  return induced.postcompose(t) == target.precompose(maps);
}

const std::string kTransport = "T does not carry the induced operation to the original one";

TheoremOutcome kupershmidt(const std::string& name, const Document& doc) {
  const EvenLinearMap t = require_operator(name, doc);
  Recorder rec(name);
  if (name == "kupershmidt-3lie") {
    const auto m = require_module<ThreeLieRep>(name, doc);
    const AlgebraPresentation out = kupershmidt_induced_3lie(m, t);
    rec.check("induced bracket", check_structure(out));
    rec.expect("transport", transports(out.op("bracket"), m.algebra.op("bracket"), t), kTransport);
  } else if (name == "kupershmidt-prelie") {
    const auto m = require_module<ThreeLieRep>(name, doc);
    const AlgebraPresentation out = kupershmidt_induced_pre_lie(m, t);
    rec.check("induced pre-Lie", check_structure(out));
    const AlgebraPresentation comm = commutator_3lie_from_pre_lie(out);
    rec.check("commutator", check_structure(comm));
    rec.expect("commutator identity", comm.op("bracket") == kupershmidt_induced_3lie(m, t).op("bracket"),
               "commutator differs from the Kupershmidt bracket");
  } else if (name == "kupershmidt-dendriform") {
    const auto m = require_module<AssocBimodule>(name, doc);
    const AlgebraPresentation out = kupershmidt_induced_dendriform(m, t);
    rec.check("induced dendriform", check_structure(out));
    rec.expect("transport", transports(dendriform_sum(out), m.algebra.op("mu"), t), kTransport);
  } else {
    const auto m = require_module<PoissonRep>(name, doc);
    const AlgebraPresentation out = kupershmidt_induced_pre_poisson(m, t);
    rec.check("induced pre-Poisson", check_structure(out));
    const AlgebraPresentation sub = subadjacent_poisson_from_pre_poisson(out);
    rec.check("sub-adjacent", check_structure(sub));
    rec.expect("transport mu", transports(sub.op("mu"), m.algebra.op("mu"), t), kTransport);
    rec.expect("transport bracket", transports(sub.op("bracket"), m.algebra.op("bracket"), t), kTransport);
  }
  return rec.finish();
}

TheoremOutcome rota_baxter(const std::string& name, const Document& doc) {
  const AlgebraPresentation p = build_algebra(doc);
  const EvenLinearMap r = require_operator(name, doc);
  Recorder rec(name);
  if (name == "rb-assoc") {
    require_kind(name, p, {AlgebraKind::Associative});
    const AlgebraPresentation out = rb_induced_assoc(p, r);
    rec.check("induced product", check_structure(out));
    rec.expect("transport", transports(out.op("mu"), p.op("mu"), r), kTransport);
  } else if (name == "rb-3lie") {
    require_kind(name, p, {AlgebraKind::ThreeLie});
    const AlgebraPresentation out = rb_induced_3lie(p, r);
    rec.check("induced bracket", check_structure(out));
    rec.expect("transport", transports(out.op("bracket"), p.op("bracket"), r), kTransport);
  } else if (name == "rb-poisson") {
    require_kind(name, p, {AlgebraKind::Poisson});
    const AlgebraPresentation out = rb_induced_poisson(p, r);
    rec.check("induced Poisson", check_structure(out));
    rec.expect("transport mu", transports(out.op("mu"), p.op("mu"), r), kTransport);
    rec.expect("transport bracket", transports(out.op("bracket"), p.op("bracket"), r), kTransport);
  } else if (name == "rb-prelie") {
    require_kind(name, p, {AlgebraKind::ThreeLie});
    const AlgebraPresentation out = rb_induced_pre_lie(p, r);
    rec.check("induced pre-Lie", check_structure(out));
    rec.check("commutator", check_structure(commutator_3lie_from_pre_lie(out)));
  } else if (name == "rb-dendriform") {
    require_kind(name, p, {AlgebraKind::Associative});
    const AlgebraPresentation out = rb_induced_dendriform(p, r);
    rec.check("induced dendriform", check_structure(out));
    rec.expect("sum", dendriform_sum(out) == rb_induced_assoc(p, r).op("mu"),
               "x < y + x > y differs from the induced product");
  } else {
    require_kind(name, p, {AlgebraKind::Poisson});
    const AlgebraPresentation out = rb_induced_pre_poisson(p, r);
    rec.check("induced pre-Poisson", check_structure(out));
    rec.check("sub-adjacent", check_structure(subadjacent_poisson_from_pre_poisson(out)));
  }
  return rec.finish();
}

AlgebraPresentation split_input(const std::string& name, const Document& doc, AlgebraKind split, AlgebraKind base,
                                AlgebraPresentation (*induce)(const AlgebraPresentation&, const EvenLinearMap&)) {
  AlgebraPresentation p = build_algebra(doc);
  require_kind(name, p, {split, base});
  if (p.kind == base) p = induce(p, require_operator(name, doc));
  return p;
}

TheoremOutcome adjoint(const std::string& name, const Document& doc) {
  const AlgebraPresentation p = build_algebra(doc);
  require_kind(name, p, {AlgebraKind::ThreeLie});
  require(name, "input", check_structure(p));
  Recorder rec(name);
  for (int r = -1; r <= 1; ++r) {
    for (int s = -1; s <= 1; ++s) {
      rec.check("ad(" + std::to_string(r) + "," + std::to_string(s) + ")", check_3_lie_rep(adjoint_rep(p, r, s)));
    }
  }
  return rec.finish();
}

}  // namespace

std::vector<std::string> theorem_names() {
  return {"twist-assoc",          "twist-3lie",         "twist-poisson",          "twist-prelie",
          "twist-dendriform",     "twist-prepoisson",   "semidirect-assoc-iff",   "semidirect-3lie-iff",
          "semidirect-poisson-iff", "graph-kupershmidt", "kupershmidt-3lie",       "kupershmidt-prelie",
          "kupershmidt-dendriform", "kupershmidt-prepoisson", "rb-assoc",         "rb-3lie",
          "rb-poisson",           "rb-prelie",          "rb-dendriform",          "rb-prepoisson",
          "dendriform-sum",       "subadjacent-prelie", "subadjacent-prepoisson", "adjoint-rep"};
}

Module module_or_adjoint(const Document& doc) {
  if (auto m = build_module(doc)) return std::move(*m);
  const AlgebraPresentation p = build_algebra(doc);
  switch (p.kind) {
    case AlgebraKind::Associative:
      return regular_bimodule(p);
    case AlgebraKind::ThreeLie:
      return adjoint_rep(p, 0, 0);
    case AlgebraKind::Poisson:
      return adjoint_poisson_rep(p);
    default:
      refuse("module", "input.module", "no module block and no adjoint module for kind '" +
                                           std::string(kind_name(p.kind)) + "'");
  }
}

std::vector<std::pair<EvenLinearMap, EvenLinearMap>> twisting_pairs(const AlgebraPresentation& p,
                                                                     const MorphismSearchOptions& opts,
                                                                     std::size_t max_pairs) {
  std::vector<const MultiOp*> ops;
  for (const auto& [k, op] : p.ops) ops.push_back(&op);
  return commuting_pairs(enumerate_endomorphisms(p.space, ops, opts), max_pairs);
}

TheoremOutcome verify_theorem(const std::string& name, const Document& doc, const TheoremOptions& opts) {
  if (name == "twist-assoc") return twist(name, AlgebraKind::Associative, doc, opts);
  if (name == "twist-3lie") return twist(name, AlgebraKind::ThreeLie, doc, opts);
  if (name == "twist-poisson") return twist(name, AlgebraKind::Poisson, doc, opts);
  if (name == "twist-prelie") return twist(name, AlgebraKind::PreLie, doc, opts);
  if (name == "twist-dendriform") return twist(name, AlgebraKind::Dendriform, doc, opts);
  if (name == "twist-prepoisson") return twist(name, AlgebraKind::PrePoisson, doc, opts);
  if (name.starts_with("semidirect-")) {
    if (name != "semidirect-assoc-iff" && name != "semidirect-3lie-iff" && name != "semidirect-poisson-iff") {
      throw Error("unknown theorem '" + name + "'");
    }
    return semidirect_iff(name, doc);
  }
  if (name == "graph-kupershmidt") return graph_kupershmidt(name, doc, opts);
  if (name == "kupershmidt-3lie" || name == "kupershmidt-prelie" || name == "kupershmidt-dendriform" ||
      name == "kupershmidt-prepoisson") {
    return kupershmidt(name, doc);
  }
  if (name == "rb-assoc" || name == "rb-3lie" || name == "rb-poisson" || name == "rb-prelie" ||
      name == "rb-dendriform" || name == "rb-prepoisson") {
    return rota_baxter(name, doc);
  }
  if (name == "dendriform-sum") {
    const auto p = split_input(name, doc, AlgebraKind::Dendriform, AlgebraKind::Associative, rb_induced_dendriform);
    Recorder rec(name);
    rec.check("sum", check_structure(sum_assoc_from_dendriform(p)));
    return rec.finish();
  }
  if (name == "subadjacent-prelie") {
    const auto p = split_input(name, doc, AlgebraKind::PreLie, AlgebraKind::ThreeLie, rb_induced_pre_lie);
    Recorder rec(name);
    rec.check("commutator", check_structure(commutator_3lie_from_pre_lie(p)));
    return rec.finish();
  }
  if (name == "subadjacent-prepoisson") {
    const auto p = split_input(name, doc, AlgebraKind::PrePoisson, AlgebraKind::Poisson, rb_induced_pre_poisson);
    Recorder rec(name);
    rec.check("sub-adjacent", check_structure(subadjacent_poisson_from_pre_poisson(p)));
    return rec.finish();
  }
  if (name == "adjoint-rep") return adjoint(name, doc);
  throw Error("unknown theorem '" + name + "'");
}

}  // namespace colorforge
