// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "colorforge/cli.hpp"
#include "colorforge/constructions.hpp"
#include "colorforge/document.hpp"
#include "colorforge/errors.hpp"
#include "colorforge/representations.hpp"
#include "colorforge/structures.hpp"
#include "colorforge/theorems.hpp"

namespace colorforge::cli {

namespace {

bool in_gallery(const std::string& name) {
  const auto names = list_fixtures();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string read_input(const std::string& path) {
  if (!std::filesystem::exists(path) && in_gallery(path)) return fixture_text(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document load(const std::string& path) { return parse_document(read_input(path)); }

// Where a basis tuple of an operation is written in the document.
std::string entry_path(const Document& doc, const std::string& op, const std::vector<std::size_t>& tuple) {
  const OpSpec& spec = doc.ops.at(op);
  std::size_t k = 0;
  auto sorted = tuple;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [args, value] : spec.entries) {
    auto a = args;
    std::sort(a.begin(), a.end());
    if (args == tuple || (spec.skew_extend && a == sorted)) return "/ops/" + op + "/entries/" + std::to_string(k);
    ++k;
  }
  return "/ops/" + op;
}

AxiomResult grading_result(const std::string& id, const MultiOp& op, const std::function<std::string(const MultiOp::Tuple&)>& where) {
  AxiomResult a;
  a.id = id;
  a.statement = "|" + op.name() + "(x,...)| = |x| + ...";
  a.domain_size = op.nonzero_count();
  if (auto t = op.grading_violation()) {
    a.passed = false;
    Witness w;
    w.tuple = *t;
    w.lhs = Vector(op.result().dim());
    w.rhs = w.lhs;
    for (const auto& [i, c] : op.at(*t)) w.lhs[i] = c;
    a.witness = std::move(w);
    a.note = "constant is not homogeneous of the sum degree at " + where(*t);
  }
  return a;
}

AxiomResult evenness_result(const std::string& id, const EvenLinearMap& f, const std::string& path) {
  AxiomResult a;
  a.id = id;
  a.statement = "|" + f.name() + "(x)| = |x|";
  a.domain_size = f.domain().dim();
  if (auto v = f.evenness_violation()) {
    a.passed = false;
    a.note = "entry changes degree at " + path + "/" + std::to_string(v->first) + "/" + std::to_string(v->second);
  }
  return a;
}

CheckReport validation_report(const Document& doc) {
  CheckReport r;
  const AlgebraPresentation p = build_algebra(doc);
  r.append(validate_bicharacter(p.eps));
  for (const auto& [name, rows] : doc.maps) {
    r.add(evenness_result("even." + name, *build_map(doc, name), "/maps/" + name));
  }
  for (const auto& [name, op] : p.ops) {
    r.add(grading_result("grading." + name, op, [&](const MultiOp::Tuple& t) { return entry_path(doc, name, t); }));
  }
  if (auto m = build_module(doc)) {
    std::visit(
        [&](const auto& x) {
          r.add(evenness_result("module.even.alpha_V", x.alpha, "/module/maps/alpha_V"));
          r.add(evenness_result("module.even.beta_V", x.beta, "/module/maps/beta_V"));
        },
        *m);
    for (const auto& [name, spec] : doc.module->ops) {
      MultiOp op;
      if (const auto* b = std::get_if<AssocBimodule>(&*m)) op = name == "l" ? b->left : b->right;
      if (const auto* l = std::get_if<ThreeLieRep>(&*m)) op = l->rho;
      if (const auto* q = std::get_if<PoissonRep>(&*m)) op = name == "rho" ? q->rho : name == "l" ? q->left : q->right;
      r.add(grading_result("module.grading." + name, op,
                           [&](const MultiOp::Tuple&) { return "/module/ops/" + name; }));
    }
  }
  if (auto t = build_operator(doc)) r.add(evenness_result("operator.even", *t, "/operator/matrix"));
  return r;
}

CheckReport full_report(const Document& doc) {
  CheckReport r = check_structure(build_algebra(doc));
  if (auto m = build_module(doc)) r.merge("module", check_module(*m));
  if (doc.op) r.merge("operator", check_operator(doc));
  return r;
}

using Recipe = std::function<Document(const Document&)>;

Document output(const AlgebraPresentation& p, const Document& in, const std::string& recipe) {
  return document_from(p, in.name.empty() ? recipe : in.name + "." + recipe, "");
}

EvenLinearMap need_operator(const Document& d, const std::string& recipe) {
  auto t = build_operator(d);
  if (!t) throw Error("recipe '" + recipe + "' needs an operator block");
  return *t;
}

EvenLinearMap need_map(const Document& d, const std::string& key) {
  auto f = build_map(d, key);
  return f ? *f : EvenLinearMap::identity(build_space(d), key);
}

template <class M>
M need_module(const Document& d, const std::string& recipe) {
  Module m = module_or_adjoint(d);
  if (auto* x = std::get_if<M>(&m)) return std::move(*x);
  throw Error("recipe '" + recipe + "' needs a different module kind");
}

std::map<std::string, Recipe> recipes(int r, int s) {
  std::map<std::string, Recipe> out;
  using Twist = AlgebraPresentation (*)(const AlgebraPresentation&, const EvenLinearMap&, const EvenLinearMap&);
  const std::pair<const char*, Twist> twists[] = {
      {"twist_associative", twist_associative}, {"twist_3lie", twist_3lie},
      {"twist_poisson", twist_poisson},         {"twist_pre_lie", twist_pre_lie},
      {"twist_dendriform", twist_dendriform},   {"twist_pre_poisson", twist_pre_poisson},
  };
  for (const auto& [name, fn] : twists) {
    out[name] = [name, fn](const Document& d) {
      return output(fn(build_algebra(d), need_map(d, "twist_alpha"), need_map(d, "twist_beta")), d, name);
    };
  }
  using Rb = AlgebraPresentation (*)(const AlgebraPresentation&, const EvenLinearMap&);
  const std::pair<const char*, Rb> rbs[] = {
      {"rb_induced_assoc", rb_induced_assoc},           {"rb_induced_3lie", rb_induced_3lie},
      {"rb_induced_poisson", rb_induced_poisson},       {"rb_induced_pre_lie", rb_induced_pre_lie},
      {"rb_induced_dendriform", rb_induced_dendriform}, {"rb_induced_pre_poisson", rb_induced_pre_poisson},
  };
  for (const auto& [name, fn] : rbs) {
    out[name] = [name, fn](const Document& d) { return output(fn(build_algebra(d), need_operator(d, name)), d, name); };
  }
  using Unary = AlgebraPresentation (*)(const AlgebraPresentation&);
  const std::pair<const char*, Unary> unary[] = {
      {"commutator_3lie_from_pre_lie", commutator_3lie_from_pre_lie},
      {"sum_assoc_from_dendriform", sum_assoc_from_dendriform},
      {"subadjacent_poisson_from_pre_poisson", subadjacent_poisson_from_pre_poisson},
  };
  for (const auto& [name, fn] : unary) {
    out[name] = [name, fn](const Document& d) { return output(fn(build_algebra(d)), d, name); };
  }
  out["semidirect_assoc"] = [](const Document& d) {
    return output(semidirect_assoc(need_module<AssocBimodule>(d, "semidirect_assoc")), d, "semidirect_assoc");
  };
  out["semidirect_3lie"] = [](const Document& d) {
    return output(semidirect_3lie(need_module<ThreeLieRep>(d, "semidirect_3lie")), d, "semidirect_3lie");
  };
  out["semidirect_poisson"] = [](const Document& d) {
    return output(semidirect_poisson(need_module<PoissonRep>(d, "semidirect_poisson")), d, "semidirect_poisson");
  };
  out["kupershmidt_induced_3lie"] = [](const Document& d) {
    const std::string n = "kupershmidt_induced_3lie";
    return output(kupershmidt_induced_3lie(need_module<ThreeLieRep>(d, n), need_operator(d, n)), d, n);
  };
  out["kupershmidt_induced_pre_lie"] = [](const Document& d) {
    const std::string n = "kupershmidt_induced_pre_lie";
    return output(kupershmidt_induced_pre_lie(need_module<ThreeLieRep>(d, n), need_operator(d, n)), d, n);
  };
  out["kupershmidt_induced_dendriform"] = [](const Document& d) {
    const std::string n = "kupershmidt_induced_dendriform";
    return output(kupershmidt_induced_dendriform(need_module<AssocBimodule>(d, n), need_operator(d, n)), d, n);
  };
  out["kupershmidt_induced_pre_poisson"] = [](const Document& d) {
    const std::string n = "kupershmidt_induced_pre_poisson";
    return output(kupershmidt_induced_pre_poisson(need_module<PoissonRep>(d, n), need_operator(d, n)), d, n);
  };
  out["adjoint_rep"] = [r, s](const Document& d) {
    Document o = d;
    o.op.reset();
    o.expected = {};
    attach_module(o, adjoint_rep(build_algebra(d), r, s));
    return o;
  };
  out["regular_bimodule"] = [](const Document& d) {
    Document o = d;
    o.op.reset();
    o.expected = {};
    attach_module(o, regular_bimodule(build_algebra(d)));
    return o;
  };
  out["adjoint_poisson_rep"] = [](const Document& d) {
    Document o = d;
    o.op.reset();
    o.expected = {};
    attach_module(o, adjoint_poisson_rep(build_algebra(d)));
    return o;
  };
  return out;
}

// Maps library exceptions to exit codes; the body returns its own code.
int guarded(std::ostream& out, std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const SingularMapError& e) {
    err << "singular map: " << e.map_name() << ": " << e.what() << '\n';
    return kSingularMap;
  } catch (const PreconditionFailed& e) {
    err << "precondition failed: " << e.what() << '\n';
    render_text(e.report(), {}, out);
    return kPreconditionFail;
  } catch (const DimensionLimitError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPreconditionFail;
  } catch (const BudgetExceededError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPreconditionFail;
  } catch (const Error& e) {
    err << "invalid document: " << e.what() << '\n';
    return kAxiomFail;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification and construction of graded BiHom algebras", "colorforge"};
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "Check document structure, grading and bicharacter");
  validate->add_option("path", path, "Document file or gallery fixture name")->required();

  std::vector<std::string> axioms;
  std::string format = "text";
  auto* check = app.add_subcommand("check", "Run every axiom checker that applies to the document");
  check->add_option("path", path, "Document file or gallery fixture name")->required();
  check->add_option("--axioms", axioms, "Comma-separated axiom ids or id prefixes")->delimiter(',');
  check->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));

  std::string recipe;
  std::string out_path;
  int r = 0;
  int s = 0;
  auto* construct = app.add_subcommand("construct", "Build a new document from the input");
  construct->add_option("path", path, "Document file or gallery fixture name")->required();
  construct->add_option("--recipe", recipe, "Construction name")->required();
  construct->add_option("--out", out_path, "Output file (default: standard output)");
  construct->add_option("--r", r, "Power of alpha for adjoint_rep");
  construct->add_option("--s", s, "Power of beta for adjoint_rep");

  std::string theorem;
  std::string fixture;
  auto* verify = app.add_subcommand("verify-theorem", "Run a theorem's construct-then-check pipeline");
  verify->add_option("--name", theorem, "Theorem id")->required();
  verify->add_option("--fixture", fixture, "Gallery fixture name or document file")->required();

  bool show_all = false;
  std::string show;
  auto* fixtures = app.add_subcommand("fixtures", "List gallery fixtures or print one");
  fixtures->add_option("--show", show, "Print the document of this fixture");
  fixtures->add_flag("--theorems", show_all, "List theorem ids instead");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kParseError;
  }

  if (*validate) {
    return guarded(out, err, [&]() -> int {
      const Document doc = load(path);
      const CheckReport rep = validation_report(doc);
      render_text(rep, doc.basis.names, out);
      return rep.passed() ? kPass : kAxiomFail;
    });
  }
  if (*check) {
    return guarded(out, err, [&]() -> int {
      const Document doc = load(path);
      CheckReport rep = full_report(doc);
      if (!axioms.empty()) {
        rep = rep.select(axioms);
        if (rep.entries().empty()) {
          err << "no axiom matches the selection\n";
          return kParseError;
        }
      }
      if (format == "machine") {
        render_machine(rep, out);
      } else {
        render_text(rep, doc.basis.names, out);
      }
      return rep.passed() ? kPass : kAxiomFail;
    });
  }
  if (*construct) {
    return guarded(out, err, [&]() -> int {
      const auto table = recipes(r, s);
      auto it = table.find(recipe);
      if (it == table.end()) {
        err << "unknown recipe '" << recipe << "'; known recipes:";
        for (const auto& [k, v] : table) err << ' ' << k;
        err << '\n';
        return kParseError;
      }
      const std::string text = serialize_document(it->second(load(path)));
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw Error("cannot write '" + out_path + "'");
        f << text;
        out << "wrote " << out_path << '\n';
      }
      return kPass;
    });
  }
  if (*verify) {
    return guarded(out, err, [&]() -> int {
      const auto names = theorem_names();
      if (std::find(names.begin(), names.end(), theorem) == names.end()) {
        err << "unknown theorem '" << theorem << "'\n";
        return kParseError;
      }
      const Document doc = load(fixture);
      const TheoremOutcome o = verify_theorem(theorem, doc);
      for (const auto& line : o.log) out << line << '\n';
      if (o.counterexample) render_text(*o.counterexample, {}, out);
      return o.holds ? kPass : kAxiomFail;
    });
  }
  if (!show.empty()) {
    if (!in_gallery(show)) {
      err << "unknown fixture '" << show << "'\n";
      return kParseError;
    }
    out << fixture_text(show);
    return kPass;
  }
  for (const auto& n : show_all ? theorem_names() : list_fixtures()) out << n << '\n';
  return kPass;
}

}  // namespace colorforge::cli
