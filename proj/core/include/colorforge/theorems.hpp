// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colorforge/document.hpp"
#include "colorforge/operators.hpp"
#include "colorforge/report.hpp"

namespace colorforge {

struct TheoremOptions {
  /// Grid and limits for operator candidates when the document has no operator.
  EnumerationOptions operators{};
  /// Grid for twisting automorphisms when the document has no twist_alpha/twist_beta maps.
  MorphismSearchOptions morphisms{};
  /// Most commuting pairs tried per twist theorem.
  std::size_t max_pairs = 10'000;
};

struct TheoremOutcome {
  std::string theorem;
  bool holds = true;
  std::size_t cases = 0;
  /// One line per case that broke the theorem, then a summary line.
  std::vector<std::string> log;
  /// Report of the first case that broke the theorem.
  std::optional<CheckReport> counterexample;
};

std::vector<std::string> theorem_names();

/// Runs the construct-then-check form of a theorem on a document. Throws
/// PreconditionFailed when the document does not meet the hypotheses,
/// SingularMapError when a needed inverse does not exist, and Error for an
/// unknown theorem name.
TheoremOutcome verify_theorem(const std::string& name, const Document& doc, const TheoremOptions& opts = {});

/// Module block of the document, or the adjoint representation (3lie, poisson)
/// or regular bimodule (associative) when there is none.
Module module_or_adjoint(const Document& doc);

/// Commuting pairs of automorphisms of every operation of p with entries in the grid.
std::vector<std::pair<EvenLinearMap, EvenLinearMap>> twisting_pairs(const AlgebraPresentation& p,
                                                                     const MorphismSearchOptions& opts,
                                                                     std::size_t max_pairs);

}  // namespace colorforge
