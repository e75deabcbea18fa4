// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "colorforge/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "colorforge/errors.hpp"

namespace colorforge {

PreconditionFailed::PreconditionFailed(std::string construction, std::shared_ptr<const CheckReport> report)
    : Error([&] {
        std::string msg = construction + ": input fails its checker";
        if (const AxiomResult* f = report->first_failure()) msg += " (first failing axiom: " + f->id + ")";
        return msg;
      }()),
      construction_(std::move(construction)),
      report_(std::move(report)) {}

void CheckReport::add(AxiomResult result) { entries_.push_back(std::move(result)); }

void CheckReport::merge(const std::string& prefix, const CheckReport& other) {
  for (AxiomResult e : other.entries_) {
    e.id = prefix + "." + e.id;
    entries_.push_back(std::move(e));
  }
}

void CheckReport::append(const CheckReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool CheckReport::passed() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const AxiomResult& e) { return e.passed; });
}

const AxiomResult* CheckReport::find(const std::string& id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

bool CheckReport::passed(const std::string& id) const {
  const AxiomResult* e = find(id);
  if (!e) throw std::out_of_range("no report entry '" + id + "'");
  return e->passed;
}

CheckReport CheckReport::select(const std::vector<std::string>& selectors) const {
  CheckReport out;
  for (const auto& e : entries_) {
    for (const auto& s : selectors) {
      if (e.id == s || (e.id.size() > s.size() && e.id.compare(0, s.size(), s) == 0 && e.id[s.size()] == '.')) {
        out.entries_.push_back(e);
        break;
      }
    }
  }
  return out;
}

const AxiomResult* CheckReport::first_failure() const {
  for (const auto& e : entries_) {
    if (!e.passed) return &e;
  }
  return nullptr;
}

std::size_t max_quantifier_dimension() {
  if (const char* env = std::getenv("COLORFORGE_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 12;
}

namespace {

std::uint64_t domain_of(const std::string& id, const std::vector<std::size_t>& dims) {
  const std::size_t limit = max_quantifier_dimension();
  std::uint64_t size = 1;
  for (std::size_t d : dims) {
    if (d > limit) {
      throw DimensionLimitError("axiom '" + id + "' quantifies over dimension " + std::to_string(d) +
                                ", above the limit " + std::to_string(limit) + " (set COLORFORGE_MAX_DIM to raise it)");
    }
    size *= d;
  }
  return size;
}

template <class Fn>
void for_each_tuple(const std::vector<std::size_t>& dims, Fn&& fn) {
  for (std::size_t d : dims) {
    if (d == 0) return;
  }
  std::vector<std::size_t> t(dims.size(), 0);
  while (true) {
    if (!fn(std::span<const std::size_t>(t))) return;
    std::size_t pos = t.size();
    while (true) {
      if (pos == 0) return;
      --pos;
      if (++t[pos] < dims[pos]) break;
      t[pos] = 0;
    }
  }
}

}  // namespace

AxiomResult check_identity_pair(std::string id, std::string statement, const std::vector<std::size_t>& dims,
                                const PairFn& sides) {
  AxiomResult r;
  r.domain_size = domain_of(id, dims);
  r.id = std::move(id);
  r.statement = std::move(statement);
  Vector lhs;
  Vector rhs;
  for_each_tuple(dims, [&](std::span<const std::size_t> t) {
    sides(t, lhs, rhs);
    if (lhs == rhs) return true;
    r.passed = false;
    r.witness = Witness{std::vector<std::size_t>(t.begin(), t.end()), lhs, rhs};
    return false;
  });
  return r;
}

AxiomResult check_identity(std::string id, std::string statement, const std::vector<std::size_t>& dims,
                           const TupleFn& lhs, const TupleFn& rhs) {
  return check_identity_pair(std::move(id), std::move(statement), dims,
                             [&](std::span<const std::size_t> t, Vector& l, Vector& r) {
                               l = lhs(t);
                               r = rhs(t);
                             });
}

}  // namespace colorforge
