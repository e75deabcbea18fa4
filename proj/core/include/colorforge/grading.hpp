// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "colorforge/scalar.hpp"

namespace colorforge {

class CheckReport;

/// Element of the grading group, one integer per generator.
struct Degree {
  std::vector<long> coords;

  auto operator<=>(const Degree&) const = default;
  bool operator==(const Degree&) const = default;
};

std::string format_degree(const Degree& d);

/// Z^rank x Z/n_1 x ... x Z/n_k. Free generators come first.
class GradingGroup {
 public:
  GradingGroup() = default;
  GradingGroup(int rank, std::vector<long> torsion);

  int rank() const { return rank_; }
  const std::vector<long>& torsion() const { return torsion_; }
  std::size_t generator_count() const { return static_cast<std::size_t>(rank_) + torsion_.size(); }
  /// Order of generator i, 0 when free.
  long order(std::size_t i) const;

  Degree zero() const;
  /// Reduces torsion coordinates into [0, n_i).
  Degree reduce(Degree d) const;
  Degree add(const Degree& a, const Degree& b) const;
  Degree negate(const Degree& a) const;
  /// Throws StructuralError when the coordinate count does not match.
  void require_member(const Degree& d) const;

  bool operator==(const GradingGroup&) const = default;

 private:
  int rank_ = 0;
  std::vector<long> torsion_;
};

/// Bicharacter given by its values on pairs of generators:
/// eps(a, b) = prod_{i,j} gen(i,j)^(a_i * b_j).
class Bicharacter {
 public:
  Bicharacter() = default;
  Bicharacter(GradingGroup group, std::vector<std::vector<Scalar>> generator_values);

  /// Trivial bicharacter (all ones).
  static Bicharacter trivial(const GradingGroup& group);
  /// Z/2 sign bicharacter (-1)^(ij); the group must be exactly Z/2.
  static Bicharacter z2_sign();

  const GradingGroup& group() const { return group_; }
  const std::vector<std::vector<Scalar>>& generator_values() const { return values_; }
  Scalar eval(const Degree& a, const Degree& b) const;

  bool operator==(const Bicharacter&) const = default;

 private:
  GradingGroup group_;
  std::vector<std::vector<Scalar>> values_;
};

/// Entries: bicharacter.nonzero, bicharacter.antisymmetry, bicharacter.torsion,
/// bicharacter.diagonal. Witness tuples are generator index pairs.
CheckReport validate_bicharacter(const Bicharacter& eps);

}  // namespace colorforge
