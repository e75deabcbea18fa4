// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "colorforge/presentation.hpp"
#include "colorforge/report.hpp"

namespace colorforge {

// Kupershmidt operators T: V -> g relative to a module, Rota-Baxter operators
// R: g -> g of weight zero. Entries: even.T, intertwine.alpha (T a_V = a T),
// intertwine.beta (T b_V = b T) and the operator identity itself.

/// kupershmidt: mu(T u, T v) = T(l(T u) v + eps(u,v) r(T v) u)
CheckReport check_kupershmidt_assoc(const AssocBimodule& m, const EvenLinearMap& t);

/// rota_baxter: mu(R x, R y) = R(mu(R x, y) + mu(x, R y))
CheckReport check_rota_baxter_assoc(const AlgebraPresentation& p, const EvenLinearMap& r);

/// kupershmidt: [T u, T v, T w] = T(rho(T u, T v) w - eps(v,w) rho(T u, T(a_V^-1 b_V w)) a_V b_V^-1 v
///              + eps(u, v+w) rho(T v, T(a_V^-1 b_V w)) a_V b_V^-1 u).
/// Throws SingularMapError when a_V or b_V is singular.
CheckReport check_kupershmidt_3lie(const ThreeLieRep& m, const EvenLinearMap& t);

/// rota_baxter: [R x, R y, R z] = R([R x, R y, z] + [R x, y, R z] + [x, R y, R z])
CheckReport check_rota_baxter_3lie(const AlgebraPresentation& p, const EvenLinearMap& r);

/// kupershmidt.mu and kupershmidt.bracket together.
CheckReport check_kupershmidt_poisson(const PoissonRep& m, const EvenLinearMap& t);
CheckReport check_rota_baxter_poisson(const AlgebraPresentation& p, const EvenLinearMap& r);

/// Rota-Baxter checker matching the presentation kind (associative, 3lie, poisson).
CheckReport check_rota_baxter(const AlgebraPresentation& p, const EvenLinearMap& r);

/// Graph {T u + u} inside the semidirect product: graph.alpha_invariant,
/// graph.beta_invariant, graph.closed (g-part of the product of three graph
/// elements equals T of its V-part).
CheckReport check_graph_subalgebra_3lie(const ThreeLieRep& m, const EvenLinearMap& t);
/// Same for the associative semidirect product, closure under mu.
CheckReport check_graph_subalgebra_assoc(const AssocBimodule& m, const EvenLinearMap& t);

struct EnumerationOptions {
  std::vector<Scalar> grid{Scalar(-2), Scalar(-1), Scalar(0), Scalar(1), Scalar(2)};
  std::uint64_t budget = 10'000'000;
  /// Largest module or algebra dimension accepted.
  std::size_t max_dim = 4;
};

struct EnumerationResult {
  std::vector<EvenLinearMap> operators;
  std::uint64_t candidates = 0;
};

/// All even maps domain -> codomain with entries in the grid, in
/// lexicographic order of their column-major entry lists.
std::uint64_t count_even_maps(const GradedSpace& domain, const GradedSpace& codomain, const EnumerationOptions& opts);
std::vector<EvenLinearMap> all_even_maps(const GradedSpace& domain, const GradedSpace& codomain,
                                         const EnumerationOptions& opts, const std::string& name);

/// Passing candidates for each setting. Throws BudgetExceededError or
/// DimensionLimitError before searching.
EnumerationResult enumerate_kupershmidt(const AssocBimodule& m, const EnumerationOptions& opts = {});
EnumerationResult enumerate_kupershmidt(const ThreeLieRep& m, const EnumerationOptions& opts = {});
EnumerationResult enumerate_kupershmidt(const PoissonRep& m, const EnumerationOptions& opts = {});
EnumerationResult enumerate_rota_baxter(const AlgebraPresentation& p, const EnumerationOptions& opts = {});

struct MorphismSearchOptions {
  std::vector<Scalar> grid{Scalar(-1), Scalar(0), Scalar(1)};
  bool require_invertible = true;
  /// Stop after this many results.
  std::size_t max_results = 100'000;
};

/// Even endomorphisms f of the space with entries in the grid satisfying
/// f(op(x, ...)) = op(f x, ...) for every listed op. Backtracking over columns
/// with propagation through single-support constants.
std::vector<EvenLinearMap> enumerate_endomorphisms(const GradedSpace& space, const std::vector<const MultiOp*>& ops,
                                                   const MorphismSearchOptions& opts = {});

/// Ordered pairs (f, g) from the list with f g = g f, at most `cap`.
std::vector<std::pair<EvenLinearMap, EvenLinearMap>> commuting_pairs(const std::vector<EvenLinearMap>& maps,
                                                                     std::size_t cap);

}  // namespace colorforge
