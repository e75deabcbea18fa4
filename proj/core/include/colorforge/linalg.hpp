// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "colorforge/grading.hpp"
#include "colorforge/scalar.hpp"

namespace colorforge {

/// Homogeneous basis with one degree per basis vector.
class GradedSpace {
 public:
  GradedSpace() = default;
  GradedSpace(GradingGroup group, std::vector<Degree> degrees, std::vector<std::string> names = {});

  const GradingGroup& group() const { return group_; }
  std::size_t dim() const { return degrees_.size(); }
  const Degree& degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<Degree>& degrees() const { return degrees_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Basis of this space followed by the basis of `other`.
  GradedSpace direct_sum(const GradedSpace& other) const;

  bool operator==(const GradedSpace&) const = default;

 private:
  GradingGroup group_;
  std::vector<Degree> degrees_;
  std::vector<std::string> names_;
};

/// Sparse coordinates sorted by index, no zero coefficients.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

/// Dense coordinate vector.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coords_(dim) {}
  explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  static Vector basis(std::size_t dim, std::size_t i);
  static Vector from_sparse(std::size_t dim, const SparseVec& s);

  std::size_t dim() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  bool is_zero() const;
  SparseVec sparse() const;
  void add_scaled(const SparseVec& v, const Scalar& c);
  void add_scaled(const Vector& v, const Scalar& c);

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& c);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& c, Vector a) { return a *= c; }
  bool operator==(const Vector&) const = default;

 private:
  std::vector<Scalar> coords_;
};

std::string format_vector(const Vector& v);

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::vector<std::vector<Scalar>> to_rows() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  bool operator==(const Matrix&) const = default;

  /// Exact inverse, or nothing when singular or not square.
  std::optional<Matrix> inverse() const;
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Linear map between graded spaces, column i holds the image of basis vector i.
class EvenLinearMap {
 public:
  EvenLinearMap() = default;
  EvenLinearMap(GradedSpace domain, GradedSpace codomain, Matrix matrix, std::string name = "map");
  static EvenLinearMap identity(const GradedSpace& space, std::string name = "id");

  const GradedSpace& domain() const { return domain_; }
  const GradedSpace& codomain() const { return codomain_; }
  const Matrix& matrix() const { return matrix_; }
  const std::string& name() const { return name_; }
  EvenLinearMap renamed(std::string name) const;

  /// Image of basis vector i.
  const SparseVec& column(std::size_t i) const { return columns_[i]; }
  Vector apply(const Vector& v) const;
  SparseVec apply(const SparseVec& v) const;

  /// First (row, col) entry that is nonzero between different degrees.
  std::optional<std::pair<std::size_t, std::size_t>> evenness_violation() const;
  bool is_even() const { return !evenness_violation().has_value(); }
  bool is_identity() const;

  /// this o other.
  EvenLinearMap compose(const EvenLinearMap& other) const;
  /// Throws SingularMapError naming this map.
  EvenLinearMap inverse() const;
  bool invertible() const;
  /// f^n; negative n uses the inverse.
  EvenLinearMap power(int n) const;

  bool operator==(const EvenLinearMap& o) const {
    return domain_ == o.domain_ && codomain_ == o.codomain_ && matrix_ == o.matrix_;
  }

 private:
  GradedSpace domain_;
  GradedSpace codomain_;
  Matrix matrix_;
  std::string name_;
  std::vector<SparseVec> columns_;
};

/// Multilinear operation of arity 2 or 3 given by structure constants on
/// basis tuples. Constants are kept in a dense table of sparse vectors.
class MultiOp {
 public:
  using Tuple = std::vector<std::size_t>;

  MultiOp() = default;
  MultiOp(std::string name, std::vector<GradedSpace> args, GradedSpace result,
          const std::map<Tuple, Vector>& constants);

  const std::string& name() const { return name_; }
  std::size_t arity() const { return args_.size(); }
  const GradedSpace& arg(std::size_t i) const { return args_[i]; }
  const std::vector<GradedSpace>& args() const { return args_; }
  const GradedSpace& result() const { return result_; }

  /// Structure constant vector at a basis tuple.
  const SparseVec& at(std::span<const std::size_t> tuple) const { return table_[flat(tuple)]; }
  const SparseVec& at(std::size_t i, std::size_t j) const { return table_[i * args_[1].dim() + j]; }
  const SparseVec& at(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * args_[1].dim() + j) * args_[2].dim() + k];
  }
  /// Nonzero constants in lexicographic tuple order.
  std::map<Tuple, Vector> constants() const;
  std::size_t nonzero_count() const;

  /// Copy with one constant replaced.
  MultiOp with_constant(const Tuple& tuple, const Vector& value) const;
  MultiOp renamed(std::string name) const;

  /// Accumulates c * op(a_1, ..., a_n) into out.
  void accumulate(std::span<const SparseVec* const> args, const Scalar& c, Vector& out) const;
  Vector eval(const SparseVec& a, const SparseVec& b) const;
  Vector eval(const SparseVec& a, const SparseVec& b, const SparseVec& c) const;
  Vector eval(std::span<const Vector> args) const;

  /// First basis tuple whose constant is not homogeneous of the sum degree.
  std::optional<Tuple> grading_violation() const;

  /// op(f_1 -, ..., f_n -); maps must have matching codomains.
  MultiOp precompose(const std::vector<const EvenLinearMap*>& maps) const;
  /// g o op.
  MultiOp postcompose(const EvenLinearMap& g) const;

  bool operator==(const MultiOp& o) const { return args_ == o.args_ && result_ == o.result_ && table_ == o.table_; }

 private:
  std::size_t flat(std::span<const std::size_t> tuple) const;

  std::string name_;
  std::vector<GradedSpace> args_;
  GradedSpace result_;
  std::vector<std::size_t> strides_;
  std::vector<SparseVec> table_;
};

/// Builds a ternary operation on `space` from generator constants, extended by
/// [x,y,z] = -eps(x,y)[y,x,z] = -eps(y,z)[x,z,y] over all six orderings.
/// Throws ConflictingGeneratorsError when two generators disagree or a
/// generator contradicts its own orbit.
MultiOp skew_extend_ternary(std::string name, const GradedSpace& space, const Bicharacter& eps,
                            const std::map<MultiOp::Tuple, Vector>& generators);

/// eps evaluated on basis degrees of two spaces, cached as a table.
class EpsTable {
 public:
  EpsTable() = default;
  EpsTable(const Bicharacter& eps, const GradedSpace& left, const GradedSpace& right);
  const Scalar& operator()(std::size_t i, std::size_t j) const { return table_[i * cols_ + j]; }

 private:
  std::size_t cols_ = 0;
  std::vector<Scalar> table_;
};

}  // namespace colorforge
