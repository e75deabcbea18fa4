// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "colorforge/presentation.hpp"
#include "colorforge/report.hpp"

namespace colorforge {

inline constexpr int kFormatVersion = 1;

/// Structure constants as written in a document. With skew_extend the entries
/// are generators of a ternary operation.
struct OpSpec {
  std::size_t arity = 2;
  bool skew_extend = false;
  std::map<std::vector<std::size_t>, std::map<std::size_t, Scalar>> entries;

  bool operator==(const OpSpec&) const = default;
};

struct BasisSpec {
  std::vector<std::string> names;
  std::vector<Degree> degrees;

  bool operator==(const BasisSpec&) const = default;
};

using MatrixRows = std::vector<std::vector<Scalar>>;

/// kind is "bimodule" (ops l, r), "3lie-rep" (rho) or "poisson-rep" (rho, l, r);
/// maps alpha_V, beta_V default to the identity.
struct ModuleSpec {
  std::string kind;
  BasisSpec basis;
  std::map<std::string, MatrixRows> maps;
  std::map<std::string, OpSpec> ops;

  bool operator==(const ModuleSpec&) const = default;
};

/// A Kupershmidt operator V -> g when the document has a module, otherwise a
/// Rota-Baxter operator g -> g.
struct OperatorSpec {
  std::string name;
  MatrixRows matrix;

  bool operator==(const OperatorSpec&) const = default;
};

/// Verdicts the document claims; "check" is the full profile of the algebra,
/// "axioms" individual report entries, "module" the representation checker,
/// "operator" the Kupershmidt or Rota-Baxter checker.
struct Expectations {
  std::optional<bool> check;
  std::map<std::string, bool> axioms;
  std::optional<bool> module;
  std::optional<bool> op;

  bool operator==(const Expectations&) const = default;
  bool empty() const { return !check && axioms.empty() && !module && !op; }
};

struct Document {
  int format_version = kFormatVersion;
  std::string name;
  std::string description;
  AlgebraKind kind = AlgebraKind::Associative;
  int rank = 0;
  std::vector<long> torsion;
  MatrixRows bicharacter;
  BasisSpec basis;
  /// alpha and beta (identity when missing) plus named auxiliary maps.
  std::map<std::string, MatrixRows> maps;
  std::map<std::string, OpSpec> ops;
  bool commutative = false;
  std::optional<ModuleSpec> module;
  std::optional<OperatorSpec> op;
  Expectations expected;

  bool operator==(const Document&) const = default;
};

/// Strict parser: unknown fields, wrong shapes and malformed rationals raise
/// ParseError with a JSON-pointer path; syntax errors report line and column.
Document parse_document(std::string_view text);
/// Canonical text (sorted keys, reduced rationals as strings, two-space indent).
std::string serialize_document(const Document& doc);

GradingGroup build_group(const Document& doc);
Bicharacter build_bicharacter(const Document& doc);
GradedSpace build_space(const Document& doc);
/// Throws StructuralError or ConflictingGeneratorsError for inconsistent data.
AlgebraPresentation build_algebra(const Document& doc);

using Module = std::variant<AssocBimodule, ThreeLieRep, PoissonRep>;
std::optional<Module> build_module(const Document& doc);
std::optional<EvenLinearMap> build_operator(const Document& doc);
/// Named entry of the maps block other than the structure maps, e.g. twist_alpha.
std::optional<EvenLinearMap> build_map(const Document& doc, const std::string& key);

/// Document describing a presentation with full tensors (no skew extension).
Document document_from(const AlgebraPresentation& p, std::string name, std::string description = {});
/// Adds a module block.
void attach_module(Document& doc, const Module& m);
void attach_operator(Document& doc, const EvenLinearMap& op);

/// Report for the module block (bimodule, 3-Lie rep or Poisson rep checker).
CheckReport check_module(const Module& m);
/// Report for the operator block, against the module if present.
CheckReport check_operator(const Document& doc);

/// Human-readable descriptions of every expectation that does not hold.
std::vector<std::string> expectation_mismatches(const Document& doc);

/// Built-in fixture gallery. Loading verifies the embedded expectations and
/// throws Error on a mismatch.
std::vector<std::string> list_fixtures();
Document load_fixture(const std::string& name);
/// Gallery document text without verification.
std::string fixture_text(const std::string& name);

}  // namespace colorforge
