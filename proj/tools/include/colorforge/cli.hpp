// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "colorforge/report.hpp"

namespace colorforge::cli {

enum ExitCode : int {
  kPass = 0,
  kAxiomFail = 1,
  kParseError = 2,
  kSingularMap = 3,
  kPreconditionFail = 4,
};

/// Runs one command line (without the program name) and returns its exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Names used to render witness tuples; empty when indices should be printed.
using BasisNames = std::vector<std::string>;

/// One tab-separated record per entry, then a summary record.
void render_machine(const CheckReport& report, std::ostream& out);
void render_text(const CheckReport& report, const BasisNames& names, std::ostream& out);

}  // namespace colorforge::cli
