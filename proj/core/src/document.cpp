// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "colorforge/document.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include "colorforge/errors.hpp"
#include "colorforge/operators.hpp"
#include "colorforge/representations.hpp"
#include "colorforge/structures.hpp"

namespace colorforge {

using json = nlohmann::json;

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ParseError(path, msg); }

const json& object(const json& j, const std::string& path, std::initializer_list<const char*> allowed,
                   std::initializer_list<const char*> required) {
  if (!j.is_object()) fail(path, "expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items()) {
    if (!ok.count(k)) fail(child(path, k), "unknown field");
  }
  for (const char* r : required) {
    if (!j.contains(r)) fail(child(path, r), "missing required field");
  }
  return j;
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string string_of(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

long integer_of(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::size_t index_of(const json& j, const std::string& path) {
  const long v = integer_of(j, path);
  if (v < 0) fail(path, "expected a nonnegative index");
  return static_cast<std::size_t>(v);
}

bool bool_of(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

Scalar scalar_of(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) fail(path, "expected a rational as a string \"p/q\" or an integer");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

bool verdict_of(const json& j, const std::string& path) {
  const std::string s = string_of(j, path);
  if (s == "pass") return true;
  if (s == "fail") return false;
  fail(path, "expected \"pass\" or \"fail\"");
}

MatrixRows matrix_of(const json& j, const std::string& path) {
  MatrixRows rows;
  array(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rp = child(path, i);
    array(j[i], rp);
    std::vector<Scalar> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(scalar_of(j[i][k], child(rp, k)));
    if (i > 0 && row.size() != rows[0].size()) fail(rp, "rows have different lengths");
    rows.push_back(std::move(row));
  }
  return rows;
}

BasisSpec basis_of(const json& j, const std::string& path, std::size_t generators) {
  BasisSpec b;
  array(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string ep = child(path, i);
    object(j[i], ep, {"name", "degree"}, {"name", "degree"});
    b.names.push_back(string_of(j[i]["name"], child(ep, "name")));
    const std::string dp = child(ep, "degree");
    array(j[i]["degree"], dp);
    if (j[i]["degree"].size() != generators) {
      fail(dp, "degree has " + std::to_string(j[i]["degree"].size()) + " coordinates, group has " +
                   std::to_string(generators) + " generators");
    }
    Degree d;
    for (std::size_t k = 0; k < j[i]["degree"].size(); ++k) d.coords.push_back(integer_of(j[i]["degree"][k], child(dp, k)));
    b.degrees.push_back(std::move(d));
  }
  return b;
}

OpSpec op_of(const json& j, const std::string& path, const std::vector<std::size_t>& arg_dims, std::size_t result_dim,
             std::size_t expected_arity) {
  object(j, path, {"arity", "skew_extend", "entries"}, {"arity", "entries"});
  OpSpec op;
  op.arity = index_of(j["arity"], child(path, "arity"));
  if (op.arity != expected_arity) {
    fail(child(path, "arity"), "arity must be " + std::to_string(expected_arity));
  }
  if (j.contains("skew_extend")) op.skew_extend = bool_of(j["skew_extend"], child(path, "skew_extend"));
  if (op.skew_extend && op.arity != 3) fail(child(path, "skew_extend"), "skew extension needs arity 3");
  const std::string ep = child(path, "entries");
  array(j["entries"], ep);
  for (std::size_t i = 0; i < j["entries"].size(); ++i) {
    const std::string p = child(ep, i);
    const json& e = j["entries"][i];
    object(e, p, {"args", "value"}, {"args", "value"});
    array(e["args"], child(p, "args"));
    if (e["args"].size() != op.arity) {
      fail(child(p, "args"), "expected " + std::to_string(op.arity) + " arguments, got " + std::to_string(e["args"].size()));
    }
    std::vector<std::size_t> args;
    for (std::size_t k = 0; k < e["args"].size(); ++k) {
      const std::size_t a = index_of(e["args"][k], child(child(p, "args"), k));
      if (a >= arg_dims[k]) fail(child(child(p, "args"), k), "basis index out of range");
      args.push_back(a);
    }
    if (op.entries.count(args)) fail(child(p, "args"), "duplicate entry");
    std::map<std::size_t, Scalar> value;
    const std::string vp = child(p, "value");
    array(e["value"], vp);
    for (std::size_t k = 0; k < e["value"].size(); ++k) {
      const std::string tp = child(vp, k);
      const json& term = object(e["value"][k], tp, {"index", "coeff"}, {"index", "coeff"});
      const std::size_t idx = index_of(term["index"], child(tp, "index"));
      if (idx >= result_dim) fail(child(tp, "index"), "basis index out of range");
      if (value.count(idx)) fail(child(tp, "index"), "duplicate index");
      const Scalar c = scalar_of(term["coeff"], child(tp, "coeff"));
      if (c != 0) value.emplace(idx, c);
    }
    op.entries.emplace(std::move(args), std::move(value));
  }
  return op;
}

std::size_t op_arity(const std::string& name) { return name == "bracket" || name == "rho" ? 3 : 2; }

std::map<std::string, MatrixRows> maps_of(const json& j, const std::string& path, std::initializer_list<const char*> names,
                                          std::size_t dim) {
  if (names.size() > 0) {
    object(j, path, names, {});
  } else if (!j.is_object()) {
    fail(path, "expected an object");
  }
  std::map<std::string, MatrixRows> out;
  for (const auto& [k, v] : j.items()) {
    MatrixRows m = matrix_of(v, child(path, k));
    if (m.size() != dim || (dim > 0 && m[0].size() != dim)) {
      fail(child(path, k), "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    }
    out.emplace(k, std::move(m));
  }
  return out;
}

json scalar_json(const Scalar& s) { return format_scalar(s); }

json matrix_json(const MatrixRows& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(scalar_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

json basis_json(const BasisSpec& b) {
  json out = json::array();
  for (std::size_t i = 0; i < b.names.size(); ++i) out.push_back({{"name", b.names[i]}, {"degree", b.degrees[i].coords}});
  return out;
}

json op_json(const OpSpec& op) {
  json entries = json::array();
  for (const auto& [args, value] : op.entries) {
    json v = json::array();
    for (const auto& [i, c] : value) v.push_back({{"index", i}, {"coeff", scalar_json(c)}});
    entries.push_back({{"args", args}, {"value", std::move(v)}});
  }
  json out = {{"arity", op.arity}, {"entries", std::move(entries)}};
  if (op.skew_extend) out["skew_extend"] = true;
  return out;
}

std::string verdict_text(bool b) { return b ? "pass" : "fail"; }

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Document parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("", "syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                             std::string(e.what()));
  }
  object(j, "", {"format_version", "name", "description", "kind", "group", "bicharacter", "basis", "maps", "ops",
                 "commutative", "module", "operator", "expected"},
         {"format_version", "kind", "group", "bicharacter", "basis", "ops"});
  Document d;
  d.format_version = static_cast<int>(integer_of(j["format_version"], "/format_version"));
  if (d.format_version != kFormatVersion) {
    fail("/format_version", "unsupported format version " + std::to_string(d.format_version));
  }
  if (j.contains("name")) d.name = string_of(j["name"], "/name");
  if (j.contains("description")) d.description = string_of(j["description"], "/description");
  const std::string kind = string_of(j["kind"], "/kind");
  const auto k = parse_kind(kind);
  if (!k) fail("/kind", "unknown kind '" + kind + "'");
  d.kind = *k;

  object(j["group"], "/group", {"rank", "torsion"}, {"rank", "torsion"});
  d.rank = static_cast<int>(integer_of(j["group"]["rank"], "/group/rank"));
  if (d.rank < 0) fail("/group/rank", "rank must be nonnegative");
  array(j["group"]["torsion"], "/group/torsion");
  for (std::size_t i = 0; i < j["group"]["torsion"].size(); ++i) {
    const long n = integer_of(j["group"]["torsion"][i], child("/group/torsion", i));
    if (n < 2) fail(child("/group/torsion", i), "torsion orders must be at least 2");
    d.torsion.push_back(n);
  }
  const std::size_t gens = static_cast<std::size_t>(d.rank) + d.torsion.size();

  object(j["bicharacter"], "/bicharacter", {"gen_values"}, {"gen_values"});
  d.bicharacter = matrix_of(j["bicharacter"]["gen_values"], "/bicharacter/gen_values");
  if (d.bicharacter.size() != gens || (gens > 0 && d.bicharacter[0].size() != gens)) {
    fail("/bicharacter/gen_values", "expected a " + std::to_string(gens) + "x" + std::to_string(gens) +
                             " table of generator values");
  }
  d.basis = basis_of(j["basis"], "/basis", gens);
  const std::size_t n = d.basis.names.size();
  if (j.contains("maps")) d.maps = maps_of(j["maps"], "/maps", {}, n);
  if (j.contains("commutative")) d.commutative = bool_of(j["commutative"], "/commutative");

  const auto required = required_ops(d.kind);
  {
    std::vector<const char*> names;
    for (const auto& [name, arity] : required) names.push_back(name.c_str());
    if (!j["ops"].is_object()) fail("/ops", "expected an object");
    for (const auto& [key, v] : j["ops"].items()) {
      if (std::none_of(required.begin(), required.end(), [&](const auto& r) { return r.first == key; })) {
        fail(child("/ops", key), "operation not used by kind '" + kind + "'");
      }
    }
    for (const auto& [name, arity] : required) {
      if (!j["ops"].contains(name)) fail(child("/ops", name), "missing required operation");
      d.ops.emplace(name, op_of(j["ops"][name], child("/ops", name), std::vector<std::size_t>(arity, n), n, arity));
    }
  }

  if (j.contains("module")) {
    const json& m = j["module"];
    object(m, "/module", {"kind", "basis", "maps", "ops"}, {"kind", "basis", "ops"});
    ModuleSpec ms;
    ms.kind = string_of(m["kind"], "/module/kind");
    std::vector<std::string> names;
    if (ms.kind == "bimodule") {
      names = {"l", "r"};
    } else if (ms.kind == "3lie-rep") {
      names = {"rho"};
    } else if (ms.kind == "poisson-rep") {
      names = {"rho", "l", "r"};
    } else {
      fail("/module/kind", "unknown module kind '" + ms.kind + "'");
    }
    ms.basis = basis_of(m["basis"], "/module/basis", gens);
    const std::size_t dv = ms.basis.names.size();
    if (m.contains("maps")) ms.maps = maps_of(m["maps"], "/module/maps", {"alpha_V", "beta_V"}, dv);
    if (!m["ops"].is_object()) fail("/module/ops", "expected an object");
    for (const auto& [key, v] : m["ops"].items()) {
      if (std::find(names.begin(), names.end(), key) == names.end()) fail(child("/module/ops", key), "unknown action");
    }
    for (const auto& name : names) {
      if (!m["ops"].contains(name)) fail(child("/module/ops", name), "missing required action");
      const std::size_t ar = op_arity(name);
      std::vector<std::size_t> dims(ar, n);
      dims.back() = dv;
      ms.ops.emplace(name, op_of(m["ops"][name], child("/module/ops", name), dims, dv, ar));
      if (ms.ops[name].skew_extend) fail(child(child("/module/ops", name), "skew_extend"), "not allowed for actions");
    }
    d.module = std::move(ms);
  }

  if (j.contains("operator")) {
    const json& o = j["operator"];
    object(o, "/operator", {"name", "matrix"}, {"name", "matrix"});
    OperatorSpec os;
    os.name = string_of(o["name"], "/operator/name");
    os.matrix = matrix_of(o["matrix"], "/operator/matrix");
    const std::size_t cols = d.module ? d.module->basis.names.size() : n;
    if (os.matrix.size() != n || (n > 0 && os.matrix[0].size() != cols)) {
      fail("/operator/matrix", "expected a " + std::to_string(n) + "x" + std::to_string(cols) + " matrix");
    }
    d.op = std::move(os);
  }

  if (j.contains("expected")) {
    const json& e = j["expected"];
    object(e, "/expected", {"check", "axioms", "module", "operator"}, {});
    if (e.contains("check")) d.expected.check = verdict_of(e["check"], "/expected/check");
    if (e.contains("module")) d.expected.module = verdict_of(e["module"], "/expected/module");
    if (e.contains("operator")) d.expected.op = verdict_of(e["operator"], "/expected/operator");
    if (e.contains("axioms")) {
      if (!e["axioms"].is_object()) fail("/expected/axioms", "expected an object");
      for (const auto& [k, v] : e["axioms"].items()) d.expected.axioms.emplace(k, verdict_of(v, child("/expected/axioms", k)));
    }
    if (d.expected.module && !d.module) fail("/expected/module", "document has no module");
    if (d.expected.op && !d.op) fail("/expected/operator", "document has no operator");
  }
  return d;
}

std::string serialize_document(const Document& d) {
  json j;
  j["format_version"] = d.format_version;
  if (!d.name.empty()) j["name"] = d.name;
  if (!d.description.empty()) j["description"] = d.description;
  j["kind"] = std::string(kind_name(d.kind));
  j["group"] = {{"rank", d.rank}, {"torsion", d.torsion}};
  j["bicharacter"] = {{"gen_values", matrix_json(d.bicharacter)}};
  j["basis"] = basis_json(d.basis);
  if (!d.maps.empty()) {
    json m = json::object();
    for (const auto& [k, v] : d.maps) m[k] = matrix_json(v);
    j["maps"] = std::move(m);
  }
  json ops = json::object();
  for (const auto& [k, v] : d.ops) ops[k] = op_json(v);
  j["ops"] = std::move(ops);
  if (d.commutative) j["commutative"] = true;
  if (d.module) {
    json m = {{"kind", d.module->kind}, {"basis", basis_json(d.module->basis)}};
    if (!d.module->maps.empty()) {
      json mm = json::object();
      for (const auto& [k, v] : d.module->maps) mm[k] = matrix_json(v);
      m["maps"] = std::move(mm);
    }
    json mo = json::object();
    for (const auto& [k, v] : d.module->ops) mo[k] = op_json(v);
    m["ops"] = std::move(mo);
    j["module"] = std::move(m);
  }
  if (d.op) j["operator"] = {{"name", d.op->name}, {"matrix", matrix_json(d.op->matrix)}};
  if (!d.expected.empty()) {
    json e = json::object();
    if (d.expected.check) e["check"] = verdict_text(*d.expected.check);
    if (d.expected.module) e["module"] = verdict_text(*d.expected.module);
    if (d.expected.op) e["operator"] = verdict_text(*d.expected.op);
    if (!d.expected.axioms.empty()) {
      json a = json::object();
      for (const auto& [k, v] : d.expected.axioms) a[k] = verdict_text(v);
      e["axioms"] = std::move(a);
    }
    j["expected"] = std::move(e);
  }
  return j.dump(2) + "\n";
}

GradingGroup build_group(const Document& d) { return GradingGroup(d.rank, d.torsion); }

Bicharacter build_bicharacter(const Document& d) { return Bicharacter(build_group(d), d.bicharacter); }

namespace {

GradedSpace space_of(const GradingGroup& g, const BasisSpec& b) { return GradedSpace(g, b.degrees, b.names); }

EvenLinearMap map_of(const std::map<std::string, MatrixRows>& maps, const std::string& key, const GradedSpace& s,
                     const std::string& name) {
  auto it = maps.find(key);
  if (it == maps.end()) return EvenLinearMap::identity(s, name);
  return EvenLinearMap(s, s, Matrix::from_rows(it->second), name);
}

std::map<MultiOp::Tuple, Vector> constants_of(const OpSpec& op, std::size_t result_dim) {
  std::map<MultiOp::Tuple, Vector> out;
  for (const auto& [args, value] : op.entries) {
    Vector v(result_dim);
    for (const auto& [i, c] : value) v[i] = c;
    out.emplace(args, std::move(v));
  }
  return out;
}

MultiOp multiop_of(const std::string& name, const OpSpec& op, const std::vector<GradedSpace>& args,
                   const GradedSpace& result, const Bicharacter& eps) {
  if (op.skew_extend) return skew_extend_ternary(name, result, eps, constants_of(op, result.dim()));
  return MultiOp(name, args, result, constants_of(op, result.dim()));
}

OpSpec spec_of(const MultiOp& op) {
  OpSpec s;
  s.arity = op.arity();
  for (const auto& [t, v] : op.constants()) {
    std::map<std::size_t, Scalar> value;
    for (const auto& [i, c] : v.sparse()) value.emplace(i, c);
    s.entries.emplace(t, std::move(value));
  }
  return s;
}

BasisSpec basis_spec_of(const GradedSpace& s) { return BasisSpec{s.names(), s.degrees()}; }

}  // namespace

GradedSpace build_space(const Document& d) { return space_of(build_group(d), d.basis); }

AlgebraPresentation build_algebra(const Document& d) {
  AlgebraPresentation p;
  p.kind = d.kind;
  p.space = build_space(d);
  p.eps = build_bicharacter(d);
  p.alpha = map_of(d.maps, "alpha", p.space, "alpha");
  p.beta = map_of(d.maps, "beta", p.space, "beta");
  p.commutative = d.commutative;
  for (const auto& [name, spec] : d.ops) {
    std::vector<GradedSpace> args(spec.arity, p.space);
    p.ops.emplace(name, multiop_of(name, spec, args, p.space, p.eps));
  }
  p.validate_shape();
  return p;
}

std::optional<Module> build_module(const Document& d) {
  if (!d.module) return std::nullopt;
  const AlgebraPresentation g = build_algebra(d);
  const ModuleSpec& ms = *d.module;
  const GradedSpace v = space_of(g.space.group(), ms.basis);
  const EvenLinearMap a = map_of(ms.maps, "alpha_V", v, "alpha_V");
  const EvenLinearMap b = map_of(ms.maps, "beta_V", v, "beta_V");
  auto action = [&](const std::string& name) {
    const OpSpec& spec = ms.ops.at(name);
    std::vector<GradedSpace> args(spec.arity, g.space);
    args.back() = v;
    return MultiOp(name, args, v, constants_of(spec, v.dim()));
  };
  if (ms.kind == "bimodule") {
    AssocBimodule m{g, v, a, b, action("l"), action("r")};
    m.validate_shape();
    return m;
  }
  if (ms.kind == "3lie-rep") {
    ThreeLieRep m{g, v, a, b, action("rho")};
    m.validate_shape();
    return m;
  }
  PoissonRep m{g, v, a, b, action("rho"), action("l"), action("r")};
  m.validate_shape();
  return m;
}

std::optional<EvenLinearMap> build_map(const Document& d, const std::string& key) {
  if (!d.maps.count(key)) return std::nullopt;
  return map_of(d.maps, key, build_space(d), key);
}

std::optional<EvenLinearMap> build_operator(const Document& d) {
  if (!d.op) return std::nullopt;
  const GradedSpace g = build_space(d);
  const GradedSpace dom = d.module ? space_of(g.group(), d.module->basis) : g;
  return EvenLinearMap(dom, g, Matrix::from_rows(d.op->matrix), d.op->name);
}

Document document_from(const AlgebraPresentation& p, std::string name, std::string description) {
  Document d;
  d.name = std::move(name);
  d.description = std::move(description);
  d.kind = p.kind;
  d.rank = p.space.group().rank();
  d.torsion = p.space.group().torsion();
  d.bicharacter = p.eps.generator_values();
  d.basis = basis_spec_of(p.space);
  if (!p.alpha.is_identity()) d.maps["alpha"] = p.alpha.matrix().to_rows();
  if (!p.beta.is_identity()) d.maps["beta"] = p.beta.matrix().to_rows();
  for (const auto& [k, op] : p.ops) d.ops.emplace(k, spec_of(op));
  d.commutative = p.commutative;
  return d;
}

void attach_module(Document& d, const Module& m) {
  ModuleSpec ms;
  auto fill = [&](const GradedSpace& v, const EvenLinearMap& a, const EvenLinearMap& b) {
    ms.basis = basis_spec_of(v);
    if (!a.is_identity()) ms.maps["alpha_V"] = a.matrix().to_rows();
    if (!b.is_identity()) ms.maps["beta_V"] = b.matrix().to_rows();
  };
  if (const auto* bm = std::get_if<AssocBimodule>(&m)) {
    ms.kind = "bimodule";
    fill(bm->space, bm->alpha, bm->beta);
    ms.ops["l"] = spec_of(bm->left);
    ms.ops["r"] = spec_of(bm->right);
  } else if (const auto* lr = std::get_if<ThreeLieRep>(&m)) {
    ms.kind = "3lie-rep";
    fill(lr->space, lr->alpha, lr->beta);
    ms.ops["rho"] = spec_of(lr->rho);
  } else {
    const auto& pr = std::get<PoissonRep>(m);
    ms.kind = "poisson-rep";
    fill(pr.space, pr.alpha, pr.beta);
    ms.ops["rho"] = spec_of(pr.rho);
    ms.ops["l"] = spec_of(pr.left);
    ms.ops["r"] = spec_of(pr.right);
  }
  d.module = std::move(ms);
}

void attach_operator(Document& d, const EvenLinearMap& op) { d.op = OperatorSpec{op.name(), op.matrix().to_rows()}; }

CheckReport check_module(const Module& m) {
  return std::visit(
      [](const auto& x) -> CheckReport {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, AssocBimodule>) {
          return check_assoc_bimodule(x);
        } else if constexpr (std::is_same_v<T, ThreeLieRep>) {
          return check_3_lie_rep(x);
        } else {
          return check_poisson_rep(x);
        }
      },
      m);
}

CheckReport check_operator(const Document& d) {
  const auto op = build_operator(d);
  if (!op) throw StructuralError("document has no operator");
  const auto m = build_module(d);
  if (!m) return check_rota_baxter(build_algebra(d), *op);
  return std::visit(
      [&](const auto& x) -> CheckReport {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, AssocBimodule>) {
          return check_kupershmidt_assoc(x, *op);
        } else if constexpr (std::is_same_v<T, ThreeLieRep>) {
          return check_kupershmidt_3lie(x, *op);
        } else {
          return check_kupershmidt_poisson(x, *op);
        }
      },
      *m);
}

std::vector<std::string> expectation_mismatches(const Document& d) {
  std::vector<std::string> out;
  const AlgebraPresentation p = build_algebra(d);
  const CheckReport r = check_structure(p);
  if (d.expected.check && r.passed() != *d.expected.check) {
    out.push_back("check: expected " + verdict_text(*d.expected.check) + ", got " + verdict_text(r.passed()));
  }
  for (const auto& [id, want] : d.expected.axioms) {
    const CheckReport sel = r.select({id});
    if (sel.entries().empty()) {
      out.push_back("axiom " + id + ": no such report entry");
    } else if (sel.passed() != want) {
      out.push_back("axiom " + id + ": expected " + verdict_text(want) + ", got " + verdict_text(sel.passed()));
    }
  }
  if (d.expected.module) {
    const bool got = check_module(*build_module(d)).passed();
    if (got != *d.expected.module) {
      out.push_back("module: expected " + verdict_text(*d.expected.module) + ", got " + verdict_text(got));
    }
  }
  if (d.expected.op) {
    const bool got = check_operator(d).passed();
    if (got != *d.expected.op) {
      out.push_back("operator: expected " + verdict_text(*d.expected.op) + ", got " + verdict_text(got));
    }
  }
  return out;
}

}  // namespace colorforge
