// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "eval.hpp"

namespace colorforge::detail {

const EvenLinearMap& Twists::map(int a, int b) {
  const auto key = std::make_pair(a, b);
  auto it = maps_.find(key);
  if (it != maps_.end()) return it->second;
  EvenLinearMap m = alpha_.power(a).compose(beta_.power(b));
  return maps_.emplace(key, std::move(m)).first->second;
}

const std::vector<SparseVec>& Twists::table(int a, int b) {
  const auto key = std::make_pair(a, b);
  auto it = tables_.find(key);
  if (it != tables_.end()) return it->second;
  const EvenLinearMap& m = map(a, b);
  std::vector<SparseVec> cols(m.domain().dim());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = m.column(i);
  return tables_.emplace(key, std::move(cols)).first->second;
}

EpsIndex::EpsIndex(const Bicharacter& eps, const std::vector<Degree>& degrees)
    : n_(degrees.size()), table_(n_ * n_) {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) table_[i * n_ + j] = eps.eval(degrees[i], degrees[j]);
  }
}

Scalar EpsIndex::operator()(std::initializer_list<std::size_t> a, std::initializer_list<std::size_t> b) const {
  Scalar out = 1;
  for (std::size_t i : a) {
    for (std::size_t j : b) {
      const Scalar& e = table_[i * n_ + j];
      if (e != 1) out *= e;
    }
  }
  return out;
}

std::vector<Degree> concat_degrees(const GradedSpace& a, const GradedSpace& b) {
  std::vector<Degree> out = a.degrees();
  out.insert(out.end(), b.degrees().begin(), b.degrees().end());
  return out;
}

AxiomResult evenness_entry(const std::string& id, const EvenLinearMap& f) {
  AxiomResult r;
  r.id = id;
  r.statement = f.name() + " preserves degrees";
  r.domain_size = f.domain().dim();
  if (auto bad = f.evenness_violation()) {
    r.passed = false;
    const auto [row, col] = *bad;
    r.witness = Witness{{col}, Vector::from_sparse(f.codomain().dim(), f.column(col)),
                        [&] {
                          Vector v = Vector::from_sparse(f.codomain().dim(), f.column(col));
                          for (std::size_t i = 0; i < v.dim(); ++i) {
                            if (!(f.codomain().degree(i) == f.domain().degree(col))) v[i] = 0;
                          }
                          return v;
                        }()};
  }
  return r;
}

AxiomResult grading_entry(const std::string& id, const MultiOp& op) {
  std::vector<std::size_t> dims;
  for (const auto& a : op.args()) dims.push_back(a.dim());
  const GradedSpace& out = op.result();
  return check_identity(
      id, op.name() + " is homogeneous of degree zero", dims,
      [&](std::span<const std::size_t> t) { return Vector::from_sparse(out.dim(), op.at(t)); },
      [&](std::span<const std::size_t> t) {
        Degree d = out.group().zero();
        for (std::size_t i = 0; i < t.size(); ++i) d = out.group().add(d, op.arg(i).degree(t[i]));
        Vector v = Vector::from_sparse(out.dim(), op.at(t));
        for (std::size_t k = 0; k < v.dim(); ++k) {
          if (!(out.degree(k) == d)) v[k] = 0;
        }
        return v;
      });
}

AxiomResult commute_entry(const std::string& id, const EvenLinearMap& f, const EvenLinearMap& g) {
  return map_equation_entry(id, f.name() + " " + g.name() + " = " + g.name() + " " + f.name(), f, g, g, f);
}

AxiomResult map_equation_entry(const std::string& id, const std::string& statement, const EvenLinearMap& f,
                               const EvenLinearMap& g, const EvenLinearMap& h, const EvenLinearMap& k) {
  const std::size_t n = g.domain().dim();
  const std::size_t m = f.codomain().dim();
  return check_identity(
      id, statement, {n},
      [&](std::span<const std::size_t> t) { return Vector::from_sparse(m, f.apply(g.column(t[0]))); },
      [&](std::span<const std::size_t> t) { return Vector::from_sparse(m, h.apply(k.column(t[0]))); });
}

AxiomResult multiplicative_entry(const std::string& id, const MultiOp& op, const EvenLinearMap& f) {
  std::vector<const EvenLinearMap*> maps(op.arity(), &f);
  return intertwine_entry(id, f.name() + " " + op.name() + "(...) = " + op.name() + "(" + f.name() + " ...)", op, maps,
                          f);
}

AxiomResult intertwine_entry(const std::string& id, const std::string& statement, const MultiOp& op,
                             const std::vector<const EvenLinearMap*>& arg_maps, const EvenLinearMap& result_map) {
  std::vector<std::size_t> dims;
  for (const auto& a : op.args()) dims.push_back(a.dim());
  const std::size_t m = result_map.codomain().dim();
  std::vector<const SparseVec*> ptrs(op.arity());
  return check_identity(
      id, statement, dims,
      [&](std::span<const std::size_t> t) { return Vector::from_sparse(m, result_map.apply(op.at(t))); },
      [&](std::span<const std::size_t> t) {
        for (std::size_t i = 0; i < t.size(); ++i) ptrs[i] = &arg_maps[i]->column(t[i]);
        Vector v(m);
        op.accumulate(ptrs, Scalar(1), v);
        return v;
      });
}

}  // namespace colorforge::detail
