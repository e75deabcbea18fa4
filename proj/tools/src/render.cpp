// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "colorforge/cli.hpp"

namespace colorforge::cli {

namespace {

std::string join_values(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += format_scalar(v[i]);
  }
  return s;
}

std::string join_tuple(const std::vector<std::size_t>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s;
}

bool scoped(const std::string& id) { return id.find("module.") == 0 || id.find("operator.") == 0; }

std::string named_tuple(const std::vector<std::size_t>& t, const BasisNames& names, const std::string& id) {
  const bool use_names =
      !scoped(id) && std::all_of(t.begin(), t.end(), [&](std::size_t i) { return i < names.size(); });
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += use_names ? names[t[i]] : "#" + std::to_string(t[i]);
  }
  return s + ")";
}

std::size_t failures(const CheckReport& r) {
  return static_cast<std::size_t>(
      std::count_if(r.entries().begin(), r.entries().end(), [](const AxiomResult& a) { return !a.passed; }));
}

}  // namespace

void render_machine(const CheckReport& report, std::ostream& out) {
  out << "colorforge-report\t1\n";
  for (const auto& a : report.entries()) {
    out << "axiom\t" << a.id << '\t' << (a.passed ? "pass" : "fail") << '\t' << a.domain_size;
    if (a.witness) {
      out << '\t' << join_tuple(a.witness->tuple) << '\t' << join_values(a.witness->lhs) << '\t'
          << join_values(a.witness->rhs);
    } else {
      out << "\t-\t-\t-";
    }
    out << '\t' << (a.note.empty() ? "-" : a.note) << '\n';
  }
  out << "summary\t" << (report.passed() ? "pass" : "fail") << '\t' << report.entries().size() << '\t'
      << failures(report) << '\n';
}

void render_text(const CheckReport& report, const BasisNames& names, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& a : report.entries()) width = std::max(width, a.id.size());
  for (const auto& a : report.entries()) {
    out << (a.passed ? "  ok    " : "  FAIL  ") << a.id << std::string(width - a.id.size() + 2, ' ') << a.statement
        << '\n';
    if (a.witness) {
      out << "        at " << named_tuple(a.witness->tuple, names, a.id) << ": " << format_vector(a.witness->lhs)
          << " != " << format_vector(a.witness->rhs) << '\n';
    }
    if (!a.note.empty()) out << "        " << a.note << '\n';
  }
  const std::size_t f = failures(report);
  out << (f == 0 ? "all " + std::to_string(report.entries().size()) + " axioms hold"
                 : std::to_string(f) + " of " + std::to_string(report.entries().size()) + " axioms fail")
      << '\n';
}

}  // namespace colorforge::cli
