// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <array>
#include <set>

#include "colorforge/errors.hpp"
#include "colorforge/operators.hpp"
#include "colorforge/representations.hpp"

namespace colorforge {

namespace {

/// Entry positions (row, col) allowed to be nonzero in an even map, column-major.
std::vector<std::pair<std::size_t, std::size_t>> even_positions(const GradedSpace& domain, const GradedSpace& codomain) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t c = 0; c < domain.dim(); ++c) {
    for (std::size_t r = 0; r < codomain.dim(); ++r) {
      if (codomain.degree(r) == domain.degree(c)) out.emplace_back(r, c);
    }
  }
  return out;
}

void require_small(const GradedSpace& s, const EnumerationOptions& opts) {
  if (s.dim() > opts.max_dim) {
    throw DimensionLimitError("operator enumeration needs spaces of dimension at most " + std::to_string(opts.max_dim));
  }
}

template <class Check>
EnumerationResult enumerate_with(const GradedSpace& domain, const GradedSpace& codomain, const EnumerationOptions& opts,
                                 const std::string& name, Check&& check) {
  require_small(domain, opts);
  require_small(codomain, opts);
  const std::uint64_t total = count_even_maps(domain, codomain, opts);
  if (total > opts.budget) {
    throw BudgetExceededError("operator enumeration needs " + std::to_string(total) + " candidates, budget is " +
                              std::to_string(opts.budget));
  }
  EnumerationResult res;
  for (auto& m : all_even_maps(domain, codomain, opts, name)) {
    ++res.candidates;
    if (check(m)) res.operators.push_back(std::move(m));
  }
  return res;
}

}  // namespace

std::uint64_t count_even_maps(const GradedSpace& domain, const GradedSpace& codomain, const EnumerationOptions& opts) {
  const std::size_t k = even_positions(domain, codomain).size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > opts.budget) return total * opts.grid.size();
    total *= opts.grid.size();
  }
  return total;
}

std::vector<EvenLinearMap> all_even_maps(const GradedSpace& domain, const GradedSpace& codomain,
                                         const EnumerationOptions& opts, const std::string& name) {
  const auto pos = even_positions(domain, codomain);
  const std::uint64_t total = count_even_maps(domain, codomain, opts);
  if (total > opts.budget) throw BudgetExceededError("even map enumeration exceeds the budget");
  std::vector<EvenLinearMap> out;
  out.reserve(total);
  std::vector<std::size_t> digits(pos.size(), 0);
  while (true) {
    Matrix m(codomain.dim(), domain.dim());
    for (std::size_t i = 0; i < pos.size(); ++i) m(pos[i].first, pos[i].second) = opts.grid[digits[i]];
    out.emplace_back(domain, codomain, std::move(m), name);
    std::size_t i = pos.size();
    while (true) {
      if (i == 0) return out;
      --i;
      if (++digits[i] < opts.grid.size()) break;
      digits[i] = 0;
    }
  }
}

EnumerationResult enumerate_kupershmidt(const AssocBimodule& m, const EnumerationOptions& opts) {
  m.validate_shape();
  return enumerate_with(m.space, m.algebra.space, opts, "T",
                        [&](const EvenLinearMap& t) { return check_kupershmidt_assoc(m, t).passed(); });
}

EnumerationResult enumerate_kupershmidt(const ThreeLieRep& m, const EnumerationOptions& opts) {
  m.validate_shape();
  return enumerate_with(m.space, m.algebra.space, opts, "T",
                        [&](const EvenLinearMap& t) { return check_kupershmidt_3lie(m, t).passed(); });
}

EnumerationResult enumerate_kupershmidt(const PoissonRep& m, const EnumerationOptions& opts) {
  m.validate_shape();
  return enumerate_with(m.space, m.algebra.space, opts, "T",
                        [&](const EvenLinearMap& t) { return check_kupershmidt_poisson(m, t).passed(); });
}

EnumerationResult enumerate_rota_baxter(const AlgebraPresentation& p, const EnumerationOptions& opts) {
  p.validate_shape();
  return enumerate_with(p.space, p.space, opts, "R",
                        [&](const EvenLinearMap& r) { return check_rota_baxter(p, r).passed(); });
}

namespace {

class MorphismSolver {
 public:
  MorphismSolver(const GradedSpace& space, const std::vector<const MultiOp*>& ops, const MorphismSearchOptions& opts)
      : space_(space), ops_(ops), opts_(opts), n_(space.dim()), grid_(opts.grid.begin(), opts.grid.end()) {
    for (const MultiOp* op : ops_) {
      for (const auto& a : op->args()) {
        if (!(a == space_)) throw StructuralError("morphism search needs operations on the given space");
      }
      if (!(op->result() == space_)) throw StructuralError("morphism search needs operations on the given space");
    }
    build_candidates();
    build_constraints();
    assigned_.assign(n_, false);
    cols_.assign(n_, SparseVec{});
  }

  std::vector<EvenLinearMap> run() {
    search();
    return std::move(results_);
  }

 private:
  struct Constraint {
    const MultiOp* op;
    std::vector<std::size_t> args;
    SparseVec value;  // op(args) in the source
  };

  void build_candidates() {
    candidates_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < n_; ++i) {
        if (space_.degree(i) == space_.degree(j)) rows.push_back(i);
      }
      std::vector<std::size_t> digits(rows.size(), 0);
      while (true) {
        SparseVec v;
        for (std::size_t k = 0; k < rows.size(); ++k) {
          if (opts_.grid[digits[k]] != 0) v.emplace_back(rows[k], opts_.grid[digits[k]]);
        }
        if (!(opts_.require_invertible && v.empty())) candidates_[j].push_back(std::move(v));
        std::size_t k = rows.size();
        bool done = true;
        while (k > 0) {
          --k;
          if (++digits[k] < opts_.grid.size()) {
            done = false;
            break;
          }
          digits[k] = 0;
        }
        if (done) break;
      }
    }
  }

  void build_constraints() {
    watch_.resize(n_);
    for (const MultiOp* op : ops_) {
      std::vector<std::size_t> t(op->arity(), 0);
      while (true) {
        Constraint c{op, t, op->at(t)};
        const std::size_t id = constraints_.size();
        std::set<std::size_t> involved(t.begin(), t.end());
        for (const auto& [i, x] : c.value) involved.insert(i);
        for (std::size_t j : involved) watch_[j].push_back(id);
        constraints_.push_back(std::move(c));
        std::size_t k = t.size();
        bool done = true;
        while (k > 0) {
          --k;
          if (++t[k] < n_) {
            done = false;
            break;
          }
          t[k] = 0;
        }
        if (done) break;
      }
    }
  }

  bool in_grid(const Scalar& x) const { return grid_.count(x) != 0; }

  Vector image_of_args(const Constraint& c) const {
    std::array<const SparseVec*, 3> ptrs{};
    for (std::size_t i = 0; i < c.args.size(); ++i) ptrs[i] = &cols_[c.args[i]];
    Vector out(n_);
    c.op->accumulate(std::span<const SparseVec* const>(ptrs.data(), c.args.size()), Scalar(1), out);
    return out;
  }

  /// Assigns column j and propagates; returns false on contradiction. Every
  /// column assigned here is appended to trail.
  bool assign(std::size_t j, SparseVec v, std::vector<std::size_t>& trail) {
    std::vector<std::size_t> queue;
    assigned_[j] = true;
    cols_[j] = std::move(v);
    trail.push_back(j);
    queue.push_back(j);
    while (!queue.empty()) {
      const std::size_t k = queue.back();
      queue.pop_back();
      for (std::size_t id : watch_[k]) {
        const Constraint& c = constraints_[id];
        bool args_ready = true;
        for (std::size_t a : c.args) args_ready = args_ready && assigned_[a];
        if (!args_ready) continue;
        std::size_t missing = n_;
        std::size_t missing_count = 0;
        for (const auto& [i, x] : c.value) {
          if (!assigned_[i]) {
            missing = i;
            ++missing_count;
          }
        }
        if (missing_count > 1) continue;
        const Vector lhs = image_of_args(c);
        if (missing_count == 0) {
          Vector rhs(n_);
          for (const auto& [i, x] : c.value) rhs.add_scaled(cols_[i], x);
          if (!(lhs == rhs)) return false;
          continue;
        }
        // op(f args) = sum_i c_i f(e_i); solve for the single unknown column.
        Vector rest = lhs;
        Scalar coeff;
        for (const auto& [i, x] : c.value) {
          if (i == missing) {
            coeff = x;
          } else {
            rest.add_scaled(cols_[i], -x);
          }
        }
        rest *= 1 / coeff;
        for (std::size_t i = 0; i < n_; ++i) {
          const bool same = space_.degree(i) == space_.degree(missing);
          if (!same && rest[i] != 0) return false;
          if (same && !in_grid(rest[i])) return false;
        }
        if (opts_.require_invertible && rest.is_zero()) return false;
        assigned_[missing] = true;
        cols_[missing] = rest.sparse();
        trail.push_back(missing);
        queue.push_back(missing);
      }
    }
    return true;
  }

  void unassign(const std::vector<std::size_t>& trail) {
    for (std::size_t j : trail) {
      assigned_[j] = false;
      cols_[j].clear();
    }
  }

  void search() {
    if (results_.size() >= opts_.max_results) return;
    std::size_t j = 0;
    while (j < n_ && assigned_[j]) ++j;
    if (j == n_) {
      Matrix m(n_, n_);
      for (std::size_t c = 0; c < n_; ++c) {
        for (const auto& [r, x] : cols_[c]) m(r, c) = x;
      }
      if (opts_.require_invertible && m.rank() < n_) return;
      results_.emplace_back(space_, space_, std::move(m), "f");
      return;
    }
    for (const SparseVec& cand : candidates_[j]) {
      std::vector<std::size_t> trail;
      if (assign(j, cand, trail)) search();
      unassign(trail);
      if (results_.size() >= opts_.max_results) return;
    }
  }

  const GradedSpace& space_;
  std::vector<const MultiOp*> ops_;
  MorphismSearchOptions opts_;
  std::size_t n_;
  std::set<Scalar> grid_;
  std::vector<std::vector<SparseVec>> candidates_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::size_t>> watch_;
  std::vector<bool> assigned_;
  std::vector<SparseVec> cols_;
  std::vector<EvenLinearMap> results_;
};

}  // namespace

std::vector<EvenLinearMap> enumerate_endomorphisms(const GradedSpace& space, const std::vector<const MultiOp*>& ops,
                                                   const MorphismSearchOptions& opts) {
  if (space.dim() > max_quantifier_dimension()) {
    throw DimensionLimitError("morphism search over dimension " + std::to_string(space.dim()));
  }
  MorphismSolver solver(space, ops, opts);
  auto out = solver.run();
  std::sort(out.begin(), out.end(), [](const EvenLinearMap& a, const EvenLinearMap& b) {
    const auto ra = a.matrix().to_rows();
    const auto rb = b.matrix().to_rows();
    return ra < rb;
  });
  return out;
}

std::vector<std::pair<EvenLinearMap, EvenLinearMap>> commuting_pairs(const std::vector<EvenLinearMap>& maps,
                                                                     std::size_t cap) {
  std::vector<std::pair<EvenLinearMap, EvenLinearMap>> out;
  for (const auto& f : maps) {
    for (const auto& g : maps) {
      if (out.size() >= cap) return out;
      if (f.matrix() * g.matrix() == g.matrix() * f.matrix()) {
        out.emplace_back(f.renamed("alpha"), g.renamed("beta"));
      }
    }
  }
  return out;
}

}  // namespace colorforge
