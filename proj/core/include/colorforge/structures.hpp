// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "colorforge/presentation.hpp"
#include "colorforge/report.hpp"

namespace colorforge {

// Every checker returns one entry per axiom, in a fixed order, each quantified
// over all basis tuples. Twisting maps enter the identities exactly as written
// next to each entry id below. eps-factors use basis degrees.

/// Classical associativity, alpha and beta ignored.
/// grading.mu, associative
CheckReport check_associative_color(const AlgebraPresentation& p);

/// grading.mu, even.alpha, even.beta, commute, multiplicative.{alpha,beta}.mu,
/// associative: mu(a x, mu(y, z)) = mu(mu(x, y), b z),
/// commutative (only when p.commutative): mu(b x, a y) = eps(x,y) mu(b y, a x).
CheckReport check_bihom_associative(const AlgebraPresentation& p);

/// Classical 3-Lie color algebra, alpha and beta ignored.
/// grading.bracket, skew.1, skew.2, fundamental.
CheckReport check_3_lie_color(const AlgebraPresentation& p);

/// grading.bracket, even.*, commute, multiplicative.{alpha,beta}.bracket,
/// skew.1: [b x, b y, a z] = -eps(x,y) [b y, b x, a z]
/// skew.2: [b x, b y, a z] = -eps(y,z) [b x, b z, a y]
/// jacobi: [b^2 x, b^2 y, [b z, b u, a v]] = eps(x+y+z, u+v) [b^2 u, b^2 v, [b x, b y, a z]]
///         - eps(x+y, z+v) eps(u,v) [b^2 z, b^2 v, [b x, b y, a u]]
///         + eps(x+y, z+u) [b^2 z, b^2 u, [b x, b y, a v]]
CheckReport check_3_bihom_lie(const AlgebraPresentation& p);

/// Associative entries, 3-BiHom-Lie entries, and
/// leibniz: {ab x, ab y, mu(z,t)} = mu({b x, b y, z}, b t) + eps(x+y, z) mu(b z, {a x, a y, t}).
CheckReport check_nc_3_bihom_poisson(const AlgebraPresentation& p);

/// grading.bracket, even.*, commute, multiplicative.*, skew, identity.1,
/// identity.2 (the two 3-BiHom-pre-Lie identities, using the commutator
/// bracket). Throws SingularMapError if alpha or beta is singular.
CheckReport check_3_bihom_pre_lie(const AlgebraPresentation& p);

/// The commutator [x,y,z]^C of a ternary pre-Lie product
/// {x,y,z} - eps(y,z){x, b a^-1 z, a b^-1 y} + eps(x,y+z){y, b a^-1 z, a b^-1 x}.
MultiOp commutator_bracket(const AlgebraPresentation& p);

/// grading.{prec,succ}, even.*, commute, multiplicative.*, dendriform.1-3.
CheckReport check_bihom_dendriform(const AlgebraPresentation& p);

/// x . y = x < y + x > y.
MultiOp dendriform_sum(const AlgebraPresentation& p);

/// Pre-Lie entries, dendriform entries, and compatibility.1-3.
CheckReport check_3_bihom_pre_poisson(const AlgebraPresentation& p);

/// Full profile for the presentation's kind.
CheckReport check_structure(const AlgebraPresentation& p);

}  // namespace colorforge
