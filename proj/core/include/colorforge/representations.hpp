// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "colorforge/presentation.hpp"
#include "colorforge/report.hpp"

namespace colorforge {

/// algebra.* (the BiHom-associative checker), grading.{l,r},
/// even.{alpha_V,beta_V}, commute, left.{alpha,beta}, right.{alpha,beta},
/// bimodule.1: l(a x) l(y) v = l(mu(x,y)) b_V v
/// bimodule.2: l(a x) r(y) v = eps(x,y) r(b y) l(x) v
/// bimodule.3: r(mu(x,y)) a_V v = eps(x,y) r(b y) r(x) v
CheckReport check_assoc_bimodule(const AssocBimodule& m);

/// algebra.* (the 3-BiHom-Lie checker), grading.rho, even.*, commute,
/// rho.skew, rep.1 - rep.4. Quintuple entries range over (x, y, u, v, w)
/// with w in V.
CheckReport check_3_lie_rep(const ThreeLieRep& r);

/// algebra.* (the Poisson checker), bimodule and 3-Lie rep entries without
/// repeating the algebra, and poisson.1 - poisson.3 linking rho with l, r.
CheckReport check_poisson_rep(const PoissonRep& r);

/// rho(x, y) z = [a^r b^s x, a^r b^s y, z] on V = g, with a_V = a, b_V = b.
/// Negative exponents need invertible maps (SingularMapError otherwise).
ThreeLieRep adjoint_rep(const AlgebraPresentation& p, int r, int s);

/// l(x) v = mu(x, v), r(y) u = eps(y, u) mu(u, y) on V = g.
AssocBimodule regular_bimodule(const AlgebraPresentation& p);

/// Adjoint rep ad_{0,0} together with the regular bimodule.
PoissonRep adjoint_poisson_rep(const AlgebraPresentation& p);

}  // namespace colorforge
