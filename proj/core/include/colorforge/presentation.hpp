// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colorforge/grading.hpp"
#include "colorforge/linalg.hpp"

namespace colorforge {

/// Which operations a presentation carries:
///   associative  mu
///   3lie         bracket
///   poisson      bracket, mu
///   prelie       bracket (the ternary pre-Lie product)
///   dendriform   prec, succ
///   prepoisson   bracket, prec, succ
enum class AlgebraKind { Associative, ThreeLie, Poisson, PreLie, Dendriform, PrePoisson };

std::string_view kind_name(AlgebraKind kind);
std::optional<AlgebraKind> parse_kind(std::string_view name);
/// Operation names and arities required by a kind.
std::vector<std::pair<std::string, std::size_t>> required_ops(AlgebraKind kind);

/// Graded space with twisting maps alpha, beta and named structure operations.
struct AlgebraPresentation {
  AlgebraKind kind = AlgebraKind::Associative;
  GradedSpace space;
  Bicharacter eps;
  EvenLinearMap alpha;
  EvenLinearMap beta;
  std::map<std::string, MultiOp> ops;
  /// Declared BiHom-commutative; the associative checker then also tests it.
  bool commutative = false;

  /// Presentation with alpha = beta = id.
  static AlgebraPresentation classical(AlgebraKind kind, GradedSpace space, Bicharacter eps,
                                       std::map<std::string, MultiOp> ops);

  const MultiOp& op(const std::string& name) const;
  bool has_op(const std::string& name) const { return ops.count(name) != 0; }
  std::size_t dim() const { return space.dim(); }
  bool is_classical() const { return alpha.is_identity() && beta.is_identity(); }

  /// Throws StructuralError unless ops, maps and spaces fit together.
  void validate_shape() const;

  bool operator==(const AlgebraPresentation& o) const;
};

/// Bimodule (V, l, r, alpha_V, beta_V) over a BiHom-associative algebra.
/// l and r both take (g, V) -> V: l(x)v and r(x)v.
struct AssocBimodule {
  AlgebraPresentation algebra;
  GradedSpace space;
  EvenLinearMap alpha;
  EvenLinearMap beta;
  MultiOp left;
  MultiOp right;

  void validate_shape() const;
};

/// Representation (V, rho, alpha_V, beta_V) of a 3-BiHom-Lie algebra;
/// rho takes (g, g, V) -> V.
struct ThreeLieRep {
  AlgebraPresentation algebra;
  GradedSpace space;
  EvenLinearMap alpha;
  EvenLinearMap beta;
  MultiOp rho;

  void validate_shape() const;
};

/// Representation (V, rho, l, r, alpha_V, beta_V) of a noncommutative
/// 3-BiHom-Poisson algebra.
struct PoissonRep {
  AlgebraPresentation algebra;
  GradedSpace space;
  EvenLinearMap alpha;
  EvenLinearMap beta;
  MultiOp rho;
  MultiOp left;
  MultiOp right;

  void validate_shape() const;
  AssocBimodule bimodule_part() const;
  ThreeLieRep lie_part() const;
};

/// Presentation of the same kind with a single op replaced.
AlgebraPresentation with_op(AlgebraPresentation p, MultiOp op);

}  // namespace colorforge
