// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "colorforge/linalg.hpp"
#include "colorforge/report.hpp"

namespace colorforge::detail {

/// Basis images under alpha^a o beta^b, computed on demand.
class Twists {
 public:
  Twists(const EvenLinearMap& alpha, const EvenLinearMap& beta) : alpha_(alpha), beta_(beta) {}

  const SparseVec& img(int a, int b, std::size_t i) { return table(a, b)[i]; }
  const std::vector<SparseVec>& table(int a, int b);
  const EvenLinearMap& map(int a, int b);
  std::size_t dim() const { return alpha_.domain().dim(); }

 private:
  const EvenLinearMap& alpha_;
  const EvenLinearMap& beta_;
  std::map<std::pair<int, int>, EvenLinearMap> maps_;
  std::map<std::pair<int, int>, std::vector<SparseVec>> tables_;
};

/// eps on sums of basis degrees, with elements of several spaces laid out in
/// one index range. Uses bimultiplicativity, so it assumes a valid bicharacter.
class EpsIndex {
 public:
  EpsIndex(const Bicharacter& eps, const std::vector<Degree>& degrees);
  const Scalar& operator()(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  Scalar operator()(std::initializer_list<std::size_t> a, std::initializer_list<std::size_t> b) const;

 private:
  std::size_t n_;
  std::vector<Scalar> table_;
};

std::vector<Degree> concat_degrees(const GradedSpace& a, const GradedSpace& b);

inline SparseVec unit(std::size_t i) { return SparseVec{{i, Scalar(1)}}; }

/// Returns the first failing tuple of "f(args) relation" style checks, used
/// for structural entries like evenness.
AxiomResult evenness_entry(const std::string& id, const EvenLinearMap& f);
AxiomResult grading_entry(const std::string& id, const MultiOp& op);
AxiomResult commute_entry(const std::string& id, const EvenLinearMap& f, const EvenLinearMap& g);
/// f(op(x,...)) = op(f x, ...).
AxiomResult multiplicative_entry(const std::string& id, const MultiOp& op, const EvenLinearMap& f);
/// f o op == op o (f_args...) for maps between possibly different spaces.
AxiomResult intertwine_entry(const std::string& id, const std::string& statement, const MultiOp& op,
                             const std::vector<const EvenLinearMap*>& arg_maps, const EvenLinearMap& result_map);
/// f o g == h o k as maps (compared on basis vectors).
AxiomResult map_equation_entry(const std::string& id, const std::string& statement, const EvenLinearMap& f,
                               const EvenLinearMap& g, const EvenLinearMap& h, const EvenLinearMap& k);

}  // namespace colorforge::detail
