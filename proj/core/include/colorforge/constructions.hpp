// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "colorforge/presentation.hpp"
#include "colorforge/report.hpp"

namespace colorforge {

// Every construction validates its input first and throws PreconditionFailed
// (carrying the failing report) when the input does not satisfy the checker
// the construction relies on.

/// mu'(x, y) = mu(a x, b y) on a classical associative algebra; a, b even,
/// commuting algebra morphisms.
AlgebraPresentation twist_associative(const AlgebraPresentation& p, const EvenLinearMap& alpha,
                                      const EvenLinearMap& beta);
/// [x, y, z]' = [a x, a y, b z] on a classical 3-Lie color algebra.
AlgebraPresentation twist_3lie(const AlgebraPresentation& p, const EvenLinearMap& alpha, const EvenLinearMap& beta);
/// Both twists on a classical noncommutative 3-Poisson color algebra.
AlgebraPresentation twist_poisson(const AlgebraPresentation& p, const EvenLinearMap& alpha, const EvenLinearMap& beta);
/// {x, y, z}' = {a x, a y, b z}; a, b must be invertible.
AlgebraPresentation twist_pre_lie(const AlgebraPresentation& p, const EvenLinearMap& alpha, const EvenLinearMap& beta);
/// x <' y = a x < b y, x >' y = a x > b y.
AlgebraPresentation twist_dendriform(const AlgebraPresentation& p, const EvenLinearMap& alpha,
                                     const EvenLinearMap& beta);
/// All three operations twisted; a, b must be invertible.
AlgebraPresentation twist_pre_poisson(const AlgebraPresentation& p, const EvenLinearMap& alpha,
                                      const EvenLinearMap& beta);

/// Twists one classical presentation by many pairs; the input checker runs once.
class Twister {
 public:
  /// Throws PreconditionFailed unless p is classical and passes its checker.
  explicit Twister(AlgebraPresentation p);
  /// The twist of the matching kind; the pair is checked on every call.
  AlgebraPresentation operator()(const EvenLinearMap& alpha, const EvenLinearMap& beta) const;
  const AlgebraPresentation& input() const { return p_; }

 private:
  AlgebraPresentation p_;
};

/// g + V with (x + u)(y + v) = mu(x, y) + l(x) v + eps(u, y) r(y) u.
AlgebraPresentation semidirect_assoc(const AssocBimodule& m);
/// g + V with [x+u, y+v, z+w] = [x,y,z] + rho(x,y) w - eps(y,z) rho(x, a^-1 b z) a_V b_V^-1 v
///                            + eps(x, y+z) rho(y, a^-1 b z) a_V b_V^-1 u.
/// Needs a and b_V invertible.
AlgebraPresentation semidirect_3lie(const ThreeLieRep& m);
/// Both products on g + V.
AlgebraPresentation semidirect_poisson(const PoissonRep& m);

/// mu_R(x, y) = mu(R x, y) + mu(x, R y).
AlgebraPresentation rb_induced_assoc(const AlgebraPresentation& p, const EvenLinearMap& r);
/// [u, v, w]_T on V from a Kupershmidt operator; twisting maps a_V, b_V.
AlgebraPresentation kupershmidt_induced_3lie(const ThreeLieRep& m, const EvenLinearMap& t);
/// [x, y, z]_R = [R x, R y, z] + [R x, y, R z] + [x, R y, R z].
AlgebraPresentation rb_induced_3lie(const AlgebraPresentation& p, const EvenLinearMap& r);
/// Both induced products of a Rota-Baxter operator on a Poisson algebra.
AlgebraPresentation rb_induced_poisson(const AlgebraPresentation& p, const EvenLinearMap& r);

/// 3lie presentation with the commutator bracket of a pre-Lie presentation.
AlgebraPresentation commutator_3lie_from_pre_lie(const AlgebraPresentation& p);
/// associative presentation with x . y = x < y + x > y.
AlgebraPresentation sum_assoc_from_dendriform(const AlgebraPresentation& p);

/// {u, v, w} = rho(T u, T v) w.
AlgebraPresentation kupershmidt_induced_pre_lie(const ThreeLieRep& m, const EvenLinearMap& t);
/// u < v = eps(u, v) r(T v) u, u > v = l(T u) v.
AlgebraPresentation kupershmidt_induced_dendriform(const AssocBimodule& m, const EvenLinearMap& t);
/// Pre-Lie part from rho, dendriform part from l, r.
AlgebraPresentation kupershmidt_induced_pre_poisson(const PoissonRep& m, const EvenLinearMap& t);
/// Rota-Baxter versions through the adjoint representation / regular bimodule:
/// {x, y, z} = [R x, R y, z], x < y = mu(x, R y), x > y = mu(R x, y).
AlgebraPresentation rb_induced_pre_lie(const AlgebraPresentation& p, const EvenLinearMap& r);
AlgebraPresentation rb_induced_dendriform(const AlgebraPresentation& p, const EvenLinearMap& r);
AlgebraPresentation rb_induced_pre_poisson(const AlgebraPresentation& p, const EvenLinearMap& r);

/// Poisson presentation ([ , , ]^C, < + >).
AlgebraPresentation subadjacent_poisson_from_pre_poisson(const AlgebraPresentation& p);

}  // namespace colorforge
