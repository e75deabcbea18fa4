// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include <functional>

#include "colorforge/constructions.hpp"
#include "colorforge/document.hpp"
#include "colorforge/errors.hpp"
#include "colorforge/representations.hpp"

namespace colorforge {

namespace {

constexpr const char* kSingularThreeLie = R"({
  "format_version": 1,
  "name": "paper-3bihomlie-z2",
  "description": "Z2-graded 3-BiHom-Lie algebra with singular twisting maps; skew and Jacobi hold, multiplicativity fails.",
  "kind": "3lie",
  "group": {"rank": 0, "torsion": [2]},
  "bicharacter": {"gen_values": [["-1"]]},
  "basis": [
    {"name": "e1", "degree": [0]},
    {"name": "e2", "degree": [0]},
    {"name": "e3", "degree": [1]}
  ],
  "maps": {
    "alpha": [["0", "1", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    "beta": [["0", "-1", "0"], ["0", "-1", "0"], ["0", "0", "1"]]
  },
  "ops": {
    "bracket": {"arity": 3, "skew_extend": true, "entries": [
      {"args": [0, 1, 2], "value": [{"index": 2, "coeff": "2"}]}
    ]}
  },
  "expected": {
    "check": "fail",
    "axioms": {"skew": "pass", "jacobi": "pass", "multiplicative": "fail"}
  }
}
)";

constexpr const char* kCommutativePoisson = R"({
  "format_version": 1,
  "name": "paper-poisson-z2",
  "description": "Two-dimensional BiHom-commutative 3-BiHom-Poisson superalgebra.",
  "kind": "poisson",
  "group": {"rank": 0, "torsion": [2]},
  "bicharacter": {"gen_values": [["-1"]]},
  "basis": [
    {"name": "e1", "degree": [0]},
    {"name": "e2", "degree": [1]}
  ],
  "maps": {
    "alpha": [["1", "0"], ["0", "0"]],
    "beta": [["1", "0"], ["0", "-1"]]
  },
  "ops": {
    "bracket": {"arity": 3, "entries": [
      {"args": [0, 0, 1], "value": [{"index": 1, "coeff": "1"}]}
    ]},
    "mu": {"arity": 2, "entries": [
      {"args": [0, 0], "value": [{"index": 0, "coeff": "1"}]}
    ]}
  },
  "commutative": true,
  "expected": {"check": "pass", "axioms": {"commutative": "pass", "leibniz": "pass"}}
}
)";

constexpr const char* kThreeLieDim4 = R"({
  "format_version": 1,
  "name": "classical-3lie-dim4",
  "description": "Four-dimensional simple 3-Lie algebra (vector cross product bracket).",
  "kind": "3lie",
  "group": {"rank": 0, "torsion": []},
  "bicharacter": {"gen_values": []},
  "basis": [
    {"name": "e1", "degree": []},
    {"name": "e2", "degree": []},
    {"name": "e3", "degree": []},
    {"name": "e4", "degree": []}
  ],
  "ops": {
    "bracket": {"arity": 3, "skew_extend": true, "entries": [
      {"args": [0, 1, 2], "value": [{"index": 3, "coeff": "1"}]},
      {"args": [0, 1, 3], "value": [{"index": 2, "coeff": "-1"}]},
      {"args": [0, 2, 3], "value": [{"index": 1, "coeff": "1"}]},
      {"args": [1, 2, 3], "value": [{"index": 0, "coeff": "-1"}]}
    ]}
  },
  "operator": {"name": "R", "matrix": [
    ["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "0"]
  ]},
  "expected": {"check": "pass", "operator": "pass"}
}
)";

constexpr const char* kThreeLieZ2 = R"({
  "format_version": 1,
  "name": "classical-3lie-z2",
  "description": "Three-dimensional Z2-graded 3-Lie color algebra with one odd generator.",
  "kind": "3lie",
  "group": {"rank": 0, "torsion": [2]},
  "bicharacter": {"gen_values": [["-1"]]},
  "basis": [
    {"name": "e1", "degree": [0]},
    {"name": "e2", "degree": [0]},
    {"name": "e3", "degree": [1]}
  ],
  "ops": {
    "bracket": {"arity": 3, "skew_extend": true, "entries": [
      {"args": [0, 1, 2], "value": [{"index": 2, "coeff": "2"}]}
    ]}
  },
  "expected": {"check": "pass"}
}
)";

constexpr const char* kThreeLieZ2Z2 = R"({
  "format_version": 1,
  "name": "classical-3lie-z2z2",
  "description": "Four-dimensional nilpotent 3-Lie color algebra graded by Z2 x Z2.",
  "kind": "3lie",
  "group": {"rank": 0, "torsion": [2, 2]},
  "bicharacter": {"gen_values": [["1", "-1"], ["-1", "1"]]},
  "basis": [
    {"name": "e1", "degree": [1, 0]},
    {"name": "e2", "degree": [0, 1]},
    {"name": "e3", "degree": [1, 1]},
    {"name": "e4", "degree": [0, 0]}
  ],
  "ops": {
    "bracket": {"arity": 3, "skew_extend": true, "entries": [
      {"args": [0, 1, 2], "value": [{"index": 3, "coeff": "1"}]}
    ]}
  },
  "expected": {"check": "pass"}
}
)";

constexpr const char* kAssocNilpotent = R"({
  "format_version": 1,
  "name": "classical-assoc-nilpotent",
  "description": "Two-dimensional nilpotent algebra a*a = b with a Rota-Baxter operator.",
  "kind": "associative",
  "group": {"rank": 0, "torsion": []},
  "bicharacter": {"gen_values": []},
  "basis": [
    {"name": "a", "degree": []},
    {"name": "b", "degree": []}
  ],
  "ops": {
    "mu": {"arity": 2, "entries": [
      {"args": [0, 0], "value": [{"index": 1, "coeff": "1"}]}
    ]}
  },
  "commutative": true,
  "operator": {"name": "R", "matrix": [["2", "0"], ["0", "1"]]},
  "expected": {"check": "pass", "operator": "pass"}
}
)";

constexpr const char* kAssocM11 = R"({
  "format_version": 1,
  "name": "classical-assoc-m11",
  "description": "2x2 matrices as a Z2-graded algebra with off-diagonal units odd.",
  "kind": "associative",
  "group": {"rank": 0, "torsion": [2]},
  "bicharacter": {"gen_values": [["-1"]]},
  "basis": [
    {"name": "E11", "degree": [0]},
    {"name": "E12", "degree": [1]},
    {"name": "E21", "degree": [1]},
    {"name": "E22", "degree": [0]}
  ],
  "ops": {
    "mu": {"arity": 2, "entries": [
      {"args": [0, 0], "value": [{"index": 0, "coeff": "1"}]},
      {"args": [0, 1], "value": [{"index": 1, "coeff": "1"}]},
      {"args": [1, 2], "value": [{"index": 0, "coeff": "1"}]},
      {"args": [1, 3], "value": [{"index": 1, "coeff": "1"}]},
      {"args": [2, 0], "value": [{"index": 2, "coeff": "1"}]},
      {"args": [2, 1], "value": [{"index": 3, "coeff": "1"}]},
      {"args": [3, 2], "value": [{"index": 2, "coeff": "1"}]},
      {"args": [3, 3], "value": [{"index": 3, "coeff": "1"}]}
    ]}
  },
  "operator": {"name": "R", "matrix": [
    ["0", "0", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "0"]
  ]},
  "expected": {"check": "pass", "operator": "pass"}
}
)";

constexpr const char* kAssocGroupZ2 = R"({
  "format_version": 1,
  "name": "classical-assoc-group-z2",
  "description": "Group algebra of the cyclic group of order two.",
  "kind": "associative",
  "group": {"rank": 0, "torsion": []},
  "bicharacter": {"gen_values": []},
  "basis": [
    {"name": "1", "degree": []},
    {"name": "g", "degree": []}
  ],
  "ops": {
    "mu": {"arity": 2, "entries": [
      {"args": [0, 0], "value": [{"index": 0, "coeff": "1"}]},
      {"args": [0, 1], "value": [{"index": 1, "coeff": "1"}]},
      {"args": [1, 0], "value": [{"index": 1, "coeff": "1"}]},
      {"args": [1, 1], "value": [{"index": 0, "coeff": "1"}]}
    ]}
  },
  "commutative": true,
  "expected": {"check": "pass"}
}
)";

constexpr const char* kAssocDualOdd = R"({
  "format_version": 1,
  "name": "classical-assoc-dual-odd",
  "description": "Dual numbers with an odd nilpotent generator.",
  "kind": "associative",
  "group": {"rank": 0, "torsion": [2]},
  "bicharacter": {"gen_values": [["-1"]]},
  "basis": [
    {"name": "1", "degree": [0]},
    {"name": "t", "degree": [1]}
  ],
  "ops": {
    "mu": {"arity": 2, "entries": [
      {"args": [0, 0], "value": [{"index": 0, "coeff": "1"}]},
      {"args": [0, 1], "value": [{"index": 1, "coeff": "1"}]},
      {"args": [1, 0], "value": [{"index": 1, "coeff": "1"}]}
    ]}
  },
  "commutative": true,
  "expected": {"check": "pass"}
}
)";

constexpr const char* kPoissonZ2 = R"({
  "format_version": 1,
  "name": "classical-poisson-z2",
  "description": "Four-dimensional nilpotent Z2-graded 3-Poisson color algebra.",
  "kind": "poisson",
  "group": {"rank": 0, "torsion": [2]},
  "bicharacter": {"gen_values": [["-1"]]},
  "basis": [
    {"name": "e1", "degree": [0]},
    {"name": "e2", "degree": [1]},
    {"name": "e3", "degree": [1]},
    {"name": "e4", "degree": [0]}
  ],
  "ops": {
    "bracket": {"arity": 3, "skew_extend": true, "entries": [
      {"args": [0, 1, 2], "value": [{"index": 3, "coeff": "1"}]}
    ]},
    "mu": {"arity": 2, "entries": [
      {"args": [0, 0], "value": [{"index": 3, "coeff": "1"}]}
    ]}
  },
  "expected": {"check": "pass"}
}
)";

constexpr const char* kPoissonDim4 = R"({
  "format_version": 1,
  "name": "classical-poisson-dim4",
  "description": "Four-dimensional nilpotent noncommutative 3-Poisson algebra with a Rota-Baxter operator.",
  "kind": "poisson",
  "group": {"rank": 0, "torsion": []},
  "bicharacter": {"gen_values": []},
  "basis": [
    {"name": "e1", "degree": []},
    {"name": "e2", "degree": []},
    {"name": "e3", "degree": []},
    {"name": "e4", "degree": []}
  ],
  "ops": {
    "bracket": {"arity": 3, "skew_extend": true, "entries": [
      {"args": [0, 1, 2], "value": [{"index": 3, "coeff": "1"}]}
    ]},
    "mu": {"arity": 2, "entries": [
      {"args": [1, 2], "value": [{"index": 3, "coeff": "1"}]}
    ]}
  },
  "operator": {"name": "R", "matrix": [
    ["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "0"]
  ]},
  "expected": {"check": "pass", "operator": "pass"}
}
)";

struct Literal {
  const char* name;
  const char* text;
};

constexpr Literal kLiterals[] = {
    {"paper-3bihomlie-z2", kSingularThreeLie},
    {"paper-poisson-z2", kCommutativePoisson},
    {"classical-3lie-dim4", kThreeLieDim4},
    {"classical-3lie-z2", kThreeLieZ2},
    {"classical-3lie-z2z2", kThreeLieZ2Z2},
    {"classical-assoc-nilpotent", kAssocNilpotent},
    {"classical-assoc-m11", kAssocM11},
    {"classical-assoc-group-z2", kAssocGroupZ2},
    {"classical-assoc-dual-odd", kAssocDualOdd},
    {"classical-poisson-z2", kPoissonZ2},
    {"classical-poisson-dim4", kPoissonDim4},
};

const char* literal_text(const std::string& name) {
  for (const auto& l : kLiterals) {
    if (name == l.name) return l.text;
  }
  return nullptr;
}

Document literal(const std::string& name) { return parse_document(literal_text(name)); }

EvenLinearMap diagonal(const GradedSpace& s, const std::vector<long>& d, const std::string& name) {
  Matrix m(s.dim(), s.dim());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return EvenLinearMap(s, s, m, name);
}

Document finish(const AlgebraPresentation& p, const std::string& name, const std::string& description) {
  Document d = document_from(p, name, description);
  d.expected.check = true;
  return d;
}

Document bihom_3lie_dim4() {
  const Document base = literal("classical-3lie-dim4");
  const AlgebraPresentation p = build_algebra(base);
  const EvenLinearMap a = diagonal(p.space, {-1, -1, 1, 1}, "alpha");
  const EvenLinearMap b(p.space, p.space,
                        Matrix::from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), "beta");
  Document d = finish(twist_3lie(p, a, b), "bihom-3lie-dim4",
                      "Regular multiplicative 3-BiHom-Lie algebra twisted from the cross product bracket.");
  d.expected.axioms["multiplicative"] = true;
  return d;
}

Document bihom_assoc_m11() {
  const AlgebraPresentation p = build_algebra(literal("classical-assoc-m11"));
  const EvenLinearMap a = diagonal(p.space, {1, -1, -1, 1}, "alpha");
  return finish(twist_associative(p, a, EvenLinearMap::identity(p.space, "beta")), "bihom-assoc-m11",
                "BiHom-associative superalgebra twisted from 2x2 matrices by a parity conjugation.");
}

Document ad_3lie_dim4() {
  const Document base = literal("classical-3lie-dim4");
  const AlgebraPresentation p = build_algebra(base);
  Document d = document_from(p, "classical-3lie-dim4-ad",
                             "Adjoint representation of the cross product 3-Lie algebra with a Kupershmidt operator.");
  attach_module(d, adjoint_rep(p, 0, 0));
  attach_operator(d, *build_operator(base));
  d.expected.check = true;
  d.expected.module = true;
  d.expected.op = true;
  return d;
}

Document regular_m11() {
  const Document base = literal("classical-assoc-m11");
  const AlgebraPresentation p = build_algebra(base);
  Document d = document_from(p, "classical-assoc-m11-regular",
                             "Regular bimodule of 2x2 matrices with a Kupershmidt operator.");
  attach_module(d, regular_bimodule(p));
  attach_operator(d, *build_operator(base));
  d.expected.check = true;
  d.expected.module = true;
  d.expected.op = true;
  return d;
}

Document pre_lie_dim4() {
  const Document base = literal("classical-3lie-dim4");
  return finish(rb_induced_pre_lie(build_algebra(base), *build_operator(base)), "classical-prelie-dim4",
                "3-pre-Lie algebra induced by a Rota-Baxter operator on the cross product bracket.");
}

Document dendriform_m11() {
  const Document base = literal("classical-assoc-m11");
  return finish(rb_induced_dendriform(build_algebra(base), *build_operator(base)), "classical-dendriform-m11",
                "Dendriform superalgebra induced by a Rota-Baxter operator on 2x2 matrices.");
}

Document dendriform_nilpotent() {
  const Document base = literal("classical-assoc-nilpotent");
  return finish(rb_induced_dendriform(build_algebra(base), *build_operator(base)), "classical-dendriform-nilpotent",
                "Dendriform algebra induced by R = diag(2,1) on the nilpotent algebra a*a = b.");
}

Document pre_poisson_dim4() {
  const Document base = literal("classical-poisson-dim4");
  return finish(rb_induced_pre_poisson(build_algebra(base), *build_operator(base)), "classical-prepoisson-dim4",
                "3-pre-Poisson algebra induced by a Rota-Baxter operator on a nilpotent 3-Poisson algebra.");
}

struct Derived {
  const char* name;
  Document (*make)();
};

constexpr Derived kDerived[] = {
    {"bihom-3lie-dim4", bihom_3lie_dim4},
    {"bihom-assoc-m11", bihom_assoc_m11},
    {"classical-3lie-dim4-ad", ad_3lie_dim4},
    {"classical-assoc-m11-regular", regular_m11},
    {"classical-prelie-dim4", pre_lie_dim4},
    {"classical-dendriform-m11", dendriform_m11},
    {"classical-dendriform-nilpotent", dendriform_nilpotent},
    {"classical-prepoisson-dim4", pre_poisson_dim4},
};

Document make_unverified(const std::string& name) {
  if (const char* text = literal_text(name)) return parse_document(text);
  for (const auto& d : kDerived) {
    if (name == d.name) return d.make();
  }
  throw Error("unknown fixture '" + name + "'");
}

}  // namespace

std::vector<std::string> list_fixtures() {
  std::vector<std::string> out;
  for (const auto& l : kLiterals) out.emplace_back(l.name);
  for (const auto& d : kDerived) out.emplace_back(d.name);
  return out;
}

Document load_fixture(const std::string& name) {
  Document d = make_unverified(name);
  const auto mismatches = expectation_mismatches(d);
  if (!mismatches.empty()) {
    std::string msg = "fixture '" + name + "' does not meet its expectations:";
    for (const auto& m : mismatches) msg += "\n  " + m;
    throw Error(msg);
  }
  return d;
}

std::string fixture_text(const std::string& name) {
  if (const char* text = literal_text(name)) return text;
  return serialize_document(make_unverified(name));
}

}  // namespace colorforge
