// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "colorforge/linalg.hpp"

namespace colorforge {

/// First failing basis tuple of an identity, with both sides evaluated.
struct Witness {
  std::vector<std::size_t> tuple;
  Vector lhs;
  Vector rhs;

  bool operator==(const Witness&) const = default;
};

struct AxiomResult {
  std::string id;
  std::string statement;
  std::uint64_t domain_size = 0;
  bool passed = true;
  std::optional<Witness> witness;
  /// Extra diagnostic for failures that are not plain identity mismatches.
  std::string note;

  bool operator==(const AxiomResult&) const = default;
};

class CheckReport {
 public:
  void add(AxiomResult result);
  /// Appends every entry of `other` with ids prefixed by `prefix` + ".".
  void merge(const std::string& prefix, const CheckReport& other);
  void append(const CheckReport& other);

  const std::vector<AxiomResult>& entries() const { return entries_; }
  bool passed() const;
  const AxiomResult* find(const std::string& id) const;
  /// Entry passed; throws std::out_of_range when absent.
  bool passed(const std::string& id) const;
  /// Entries whose id equals a selector or extends it with "." (e.g. "skew"
  /// selects "skew.1").
  CheckReport select(const std::vector<std::string>& selectors) const;
  const AxiomResult* first_failure() const;

  bool operator==(const CheckReport&) const = default;

 private:
  std::vector<AxiomResult> entries_;
};

/// Largest dimension a quantifier may range over. Defaults to 12; the
/// environment variable COLORFORGE_MAX_DIM overrides it.
std::size_t max_quantifier_dimension();

using TupleFn = std::function<Vector(std::span<const std::size_t>)>;

/// Compares lhs and rhs on every tuple of the product of [0, dims[i]) in
/// lexicographic order and records the first mismatch.
AxiomResult check_identity(std::string id, std::string statement, const std::vector<std::size_t>& dims,
                           const TupleFn& lhs, const TupleFn& rhs);

/// Same, but `diff` returns lhs and rhs together (shared subterms).
using PairFn = std::function<void(std::span<const std::size_t>, Vector& lhs, Vector& rhs)>;
AxiomResult check_identity_pair(std::string id, std::string statement, const std::vector<std::size_t>& dims,
                                const PairFn& sides);

}  // namespace colorforge
