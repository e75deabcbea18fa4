// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "colorforge/grading.hpp"

#include "colorforge/errors.hpp"
#include "colorforge/report.hpp"

namespace colorforge {

std::string format_degree(const Degree& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d.coords[i]);
  }
  return out + ")";
}

GradingGroup::GradingGroup(int rank, std::vector<long> torsion) : rank_(rank), torsion_(std::move(torsion)) {
  if (rank_ < 0) throw StructuralError("grading group rank must be nonnegative");
  for (long n : torsion_) {
    if (n < 2) throw StructuralError("torsion orders must be at least 2");
  }
}

long GradingGroup::order(std::size_t i) const {
  return i < static_cast<std::size_t>(rank_) ? 0 : torsion_.at(i - rank_);
}

Degree GradingGroup::zero() const { return Degree{std::vector<long>(generator_count(), 0)}; }

Degree GradingGroup::reduce(Degree d) const {
  require_member(d);
  for (std::size_t i = rank_; i < d.coords.size(); ++i) {
    const long n = torsion_[i - rank_];
    d.coords[i] = ((d.coords[i] % n) + n) % n;
  }
  return d;
}

Degree GradingGroup::add(const Degree& a, const Degree& b) const {
  require_member(a);
  require_member(b);
  Degree out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return reduce(std::move(out));
}

Degree GradingGroup::negate(const Degree& a) const {
  Degree out = a;
  for (long& c : out.coords) c = -c;
  return reduce(std::move(out));
}

void GradingGroup::require_member(const Degree& d) const {
  if (d.coords.size() != generator_count()) {
    throw StructuralError("degree " + format_degree(d) + " has " + std::to_string(d.coords.size()) +
                          " coordinates, group has " + std::to_string(generator_count()) + " generators");
  }
}

Bicharacter::Bicharacter(GradingGroup group, std::vector<std::vector<Scalar>> generator_values)
    : group_(std::move(group)), values_(std::move(generator_values)) {
  const std::size_t n = group_.generator_count();
  if (values_.size() != n) throw StructuralError("bicharacter table must be square of the generator count");
  for (const auto& row : values_) {
    if (row.size() != n) throw StructuralError("bicharacter table must be square of the generator count");
  }
}

Bicharacter Bicharacter::trivial(const GradingGroup& group) {
  const std::size_t n = group.generator_count();
  return Bicharacter(group, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(1))));
}

Bicharacter Bicharacter::z2_sign() { return Bicharacter(GradingGroup(0, {2}), {{Scalar(-1)}}); }

Scalar Bicharacter::eval(const Degree& a, const Degree& b) const {
  group_.require_member(a);
  group_.require_member(b);
  Scalar out = 1;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords.size(); ++j) {
      const long e = a.coords[i] * b.coords[j];
      if (e != 0) out *= power(values_[i][j], e);
    }
  }
  return out;
}

namespace {

AxiomResult scalar_entry(std::string id, std::string statement, std::uint64_t domain) {
  AxiomResult r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  r.domain_size = domain;
  return r;
}

void fail_at(AxiomResult& r, std::size_t i, std::size_t j, const Scalar& lhs, const Scalar& rhs) {
  if (!r.passed) return;
  r.passed = false;
  r.witness = Witness{{i, j}, Vector(std::vector<Scalar>{lhs}), Vector(std::vector<Scalar>{rhs})};
}

}  // namespace

CheckReport validate_bicharacter(const Bicharacter& eps) {
  const auto& g = eps.group();
  const auto& v = eps.generator_values();
  const std::size_t n = g.generator_count();
  const std::uint64_t pairs = n * n;

  AxiomResult nonzero = scalar_entry("bicharacter.nonzero", "gen(i,j) != 0", pairs);
  AxiomResult anti = scalar_entry("bicharacter.antisymmetry", "gen(i,j) gen(j,i) = 1", pairs);
  AxiomResult torsion = scalar_entry("bicharacter.torsion", "gen(i,j)^n_i = 1 and gen(i,j)^n_j = 1", pairs);
  AxiomResult diag = scalar_entry("bicharacter.diagonal", "gen(i,i) = +-1", n);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (v[i][j] == 0) fail_at(nonzero, i, j, v[i][j], Scalar(1));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar prod = v[i][j] * v[j][i];
      if (prod != 1) fail_at(anti, i, j, prod, Scalar(1));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (v[i][j] == 0) continue;
      for (long order : {g.order(i), g.order(j)}) {
        if (order == 0) continue;
        const Scalar p = power(v[i][j], order);
        if (p != 1 && torsion.passed) {
          fail_at(torsion, i, j, p, Scalar(1));
          torsion.note = "value " + format_scalar(v[i][j]) + " would have to be a root of unity of order dividing " +
                         std::to_string(order) + "; the only rational roots of unity are 1 and -1" +
                         (order % 2 == 0 ? "" : " (and -1 is excluded for odd order)");
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i][i] != 1 && v[i][i] != -1) fail_at(diag, i, i, v[i][i] * v[i][i], Scalar(1));
  }

  CheckReport report;
  report.add(std::move(nonzero));
  report.add(std::move(anti));
  report.add(std::move(torsion));
  report.add(std::move(diag));
  return report;
}

}  // namespace colorforge
