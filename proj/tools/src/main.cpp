// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "colorforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return colorforge::cli::run_cli(args, std::cout, std::cerr);
}
