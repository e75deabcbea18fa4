// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace colorforge {

class CheckReport;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes of inputs do not fit together (dimension, arity, grading group).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A required inverse does not exist.
class SingularMapError : public Error {
 public:
  explicit SingularMapError(std::string map_name)
      : Error("map '" + map_name + "' is not invertible"), map_name_(std::move(map_name)) {}
  const std::string& map_name() const { return map_name_; }

 private:
  std::string map_name_;
};

/// Skew-extension of generators hit a basis tuple with two different values.
class ConflictingGeneratorsError : public Error {
 public:
  using Error::Error;
};

/// Quantifier dimension exceeds the configured limit.
class DimensionLimitError : public Error {
 public:
  using Error::Error;
};

/// Enumeration would exceed its candidate budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// Document could not be parsed; `path` is a JSON pointer to the offending field.
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& message)
      : Error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// A construction was refused because its input failed a checker.
class PreconditionFailed : public Error {
 public:
  PreconditionFailed(std::string construction, std::shared_ptr<const CheckReport> report);
  const std::string& construction() const { return construction_; }
  const CheckReport& report() const { return *report_; }

 private:
  std::string construction_;
  std::shared_ptr<const CheckReport> report_;
};

}  // namespace colorforge
