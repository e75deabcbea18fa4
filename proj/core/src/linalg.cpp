// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "colorforge/linalg.hpp"

#include <algorithm>
#include <array>

#include "colorforge/errors.hpp"

namespace colorforge {

// GradedSpace

GradedSpace::GradedSpace(GradingGroup group, std::vector<Degree> degrees, std::vector<std::string> names)
    : group_(std::move(group)), degrees_(std::move(degrees)), names_(std::move(names)) {
  for (auto& d : degrees_) d = group_.reduce(std::move(d));
  if (names_.empty()) {
    for (std::size_t i = 0; i < degrees_.size(); ++i) names_.push_back("e_" + std::to_string(i + 1));
  }
  if (names_.size() != degrees_.size()) throw StructuralError("basis names and degrees differ in length");
}

GradedSpace GradedSpace::direct_sum(const GradedSpace& other) const {
  if (!(group_ == other.group_)) throw StructuralError("direct sum of spaces graded by different groups");
  auto degrees = degrees_;
  degrees.insert(degrees.end(), other.degrees_.begin(), other.degrees_.end());
  auto names = names_;
  names.insert(names.end(), other.names_.begin(), other.names_.end());
  return GradedSpace(group_, std::move(degrees), std::move(names));
}

// Vector

Vector Vector::basis(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

Vector Vector::from_sparse(std::size_t dim, const SparseVec& s) {
  Vector v(dim);
  for (const auto& [i, c] : s) v[i] = c;
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return c == 0; });
}

SparseVec Vector::sparse() const {
  SparseVec out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] != 0) out.emplace_back(i, coords_[i]);
  }
  return out;
}

void Vector::add_scaled(const SparseVec& v, const Scalar& c) {
  for (const auto& [i, x] : v) coords_[i] += c * x;
}

void Vector::add_scaled(const Vector& v, const Scalar& c) {
  if (v.dim() != dim()) throw StructuralError("vector dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (v.coords_[i] != 0) coords_[i] += c * v.coords_[i];
  }
}

Vector& Vector::operator+=(const Vector& o) {
  if (o.dim() != dim()) throw StructuralError("vector dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (o.dim() != dim()) throw StructuralError("vector dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

std::string format_vector(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ",";
    out += format_scalar(v[i]);
  }
  return out + "]";
}

// Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw StructuralError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<Scalar>> Matrix::to_rows() const {
  std::vector<std::vector<Scalar>> out(rows_, std::vector<Scalar>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw StructuralError("matrix product shape mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o(k, j) != 0) out(i, j) += a * o(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.dim()) throw StructuralError("matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Scalar scale = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Scalar f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t Matrix::rank() const {
  Matrix a = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && a(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a(pivot, j), a(rank, j));
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (a(r, col) == 0) continue;
      const Scalar f = a(r, col) / a(rank, col);
      for (std::size_t j = 0; j < cols_; ++j) a(r, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

// EvenLinearMap

EvenLinearMap::EvenLinearMap(GradedSpace domain, GradedSpace codomain, Matrix matrix, std::string name)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)), name_(std::move(name)) {
  if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim()) {
    throw StructuralError("map '" + name_ + "' has a " + std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()) + " matrix, expected " + std::to_string(codomain_.dim()) +
                          "x" + std::to_string(domain_.dim()));
  }
  if (!(domain_.group() == codomain_.group())) {
    throw StructuralError("map '" + name_ + "' connects spaces graded by different groups");
  }
  columns_.resize(domain_.dim());
  for (std::size_t j = 0; j < domain_.dim(); ++j) {
    for (std::size_t i = 0; i < codomain_.dim(); ++i) {
      if (matrix_(i, j) != 0) columns_[j].emplace_back(i, matrix_(i, j));
    }
  }
}

EvenLinearMap EvenLinearMap::identity(const GradedSpace& space, std::string name) {
  return EvenLinearMap(space, space, Matrix::identity(space.dim()), std::move(name));
}

EvenLinearMap EvenLinearMap::renamed(std::string name) const {
  EvenLinearMap out = *this;
  out.name_ = std::move(name);
  return out;
}

Vector EvenLinearMap::apply(const Vector& v) const { return matrix_ * v; }

SparseVec EvenLinearMap::apply(const SparseVec& v) const {
  Vector out(codomain_.dim());
  for (const auto& [j, c] : v) out.add_scaled(columns_[j], c);
  return out.sparse();
}

std::optional<std::pair<std::size_t, std::size_t>> EvenLinearMap::evenness_violation() const {
  for (std::size_t j = 0; j < domain_.dim(); ++j) {
    for (const auto& [i, c] : columns_[j]) {
      if (!(codomain_.degree(i) == domain_.degree(j))) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

bool EvenLinearMap::is_identity() const {
  return domain_ == codomain_ && matrix_ == Matrix::identity(domain_.dim());
}

EvenLinearMap EvenLinearMap::compose(const EvenLinearMap& other) const {
  if (!(other.codomain_ == domain_)) throw StructuralError("composition of maps with mismatched spaces");
  return EvenLinearMap(other.domain_, codomain_, matrix_ * other.matrix_, name_ + "." + other.name_);
}

bool EvenLinearMap::invertible() const { return matrix_.inverse().has_value(); }

EvenLinearMap EvenLinearMap::inverse() const {
  auto inv = matrix_.inverse();
  if (!inv) throw SingularMapError(name_);
  return EvenLinearMap(codomain_, domain_, std::move(*inv), name_ + "^-1");
}

EvenLinearMap EvenLinearMap::power(int n) const {
  if (!(domain_ == codomain_)) throw StructuralError("power of a map between different spaces");
  const EvenLinearMap base = n < 0 ? inverse() : *this;
  Matrix m = Matrix::identity(domain_.dim());
  for (int k = 0; k < std::abs(n); ++k) m = base.matrix_ * m;
  return EvenLinearMap(domain_, codomain_, std::move(m), name_ + "^" + std::to_string(n));
}

// MultiOp

MultiOp::MultiOp(std::string name, std::vector<GradedSpace> args, GradedSpace result,
                 const std::map<Tuple, Vector>& constants)
    : name_(std::move(name)), args_(std::move(args)), result_(std::move(result)) {
  if (args_.size() < 2 || args_.size() > 3) throw StructuralError("operation '" + name_ + "' must have arity 2 or 3");
  for (const auto& a : args_) {
    if (!(a.group() == result_.group())) {
      throw StructuralError("operation '" + name_ + "' mixes spaces graded by different groups");
    }
  }
  strides_.assign(args_.size(), 1);
  for (std::size_t i = args_.size() - 1; i > 0; --i) strides_[i - 1] = strides_[i] * args_[i].dim();
  table_.assign(strides_[0] * args_[0].dim(), SparseVec{});
  for (const auto& [tuple, value] : constants) {
    if (tuple.size() != args_.size()) {
      throw StructuralError("operation '" + name_ + "' got a constant with " + std::to_string(tuple.size()) +
                            " arguments, arity is " + std::to_string(args_.size()));
    }
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (tuple[i] >= args_[i].dim()) {
        throw StructuralError("operation '" + name_ + "' has a basis index out of range");
      }
    }
    if (value.dim() != result_.dim()) {
      throw StructuralError("operation '" + name_ + "' has a value of the wrong dimension");
    }
    table_[flat(tuple)] = value.sparse();
  }
}

std::size_t MultiOp::flat(std::span<const std::size_t> tuple) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) idx += tuple[i] * strides_[i];
  return idx;
}

std::map<MultiOp::Tuple, Vector> MultiOp::constants() const {
  std::map<Tuple, Vector> out;
  Tuple t(args_.size(), 0);
  for (std::size_t idx = 0; idx < table_.size(); ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = rest / strides_[i];
      rest %= strides_[i];
    }
    if (!table_[idx].empty()) out.emplace(t, Vector::from_sparse(result_.dim(), table_[idx]));
  }
  return out;
}

std::size_t MultiOp::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(table_.begin(), table_.end(), [](const SparseVec& v) { return !v.empty(); }));
}

MultiOp MultiOp::with_constant(const Tuple& tuple, const Vector& value) const {
  if (tuple.size() != args_.size() || value.dim() != result_.dim()) {
    throw StructuralError("replacement constant has the wrong shape");
  }
  MultiOp out = *this;
  out.table_[flat(tuple)] = value.sparse();
  return out;
}

MultiOp MultiOp::renamed(std::string name) const {
  MultiOp out = *this;
  out.name_ = std::move(name);
  return out;
}

void MultiOp::accumulate(std::span<const SparseVec* const> args, const Scalar& c, Vector& out) const {
  if (args.size() != args_.size()) throw StructuralError("operation '" + name_ + "' called with wrong arity");
  if (args_.size() == 2) {
    for (const auto& [i, a] : *args[0]) {
      for (const auto& [j, b] : *args[1]) {
        const SparseVec& v = table_[i * strides_[0] + j];
        if (v.empty()) continue;
        const Scalar k = c * a * b;
        out.add_scaled(v, k);
      }
    }
    return;
  }
  for (const auto& [i, a] : *args[0]) {
    for (const auto& [j, b] : *args[1]) {
      const std::size_t base = i * strides_[0] + j * strides_[1];
      Scalar ab;
      bool have_ab = false;
      for (const auto& [k, d] : *args[2]) {
        const SparseVec& v = table_[base + k];
        if (v.empty()) continue;
        if (!have_ab) {
          ab = c * a * b;
          have_ab = true;
        }
        out.add_scaled(v, ab * d);
      }
    }
  }
}

Vector MultiOp::eval(const SparseVec& a, const SparseVec& b) const {
  Vector out(result_.dim());
  const std::array<const SparseVec*, 2> args{&a, &b};
  accumulate(args, Scalar(1), out);
  return out;
}

Vector MultiOp::eval(const SparseVec& a, const SparseVec& b, const SparseVec& c) const {
  Vector out(result_.dim());
  const std::array<const SparseVec*, 3> args{&a, &b, &c};
  accumulate(args, Scalar(1), out);
  return out;
}

Vector MultiOp::eval(std::span<const Vector> args) const {
  if (args.size() != args_.size()) throw StructuralError("operation '" + name_ + "' called with wrong arity");
  std::vector<SparseVec> sparse;
  std::vector<const SparseVec*> ptrs;
  sparse.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].dim() != args_[i].dim()) throw StructuralError("operation '" + name_ + "' argument has wrong dimension");
    sparse.push_back(args[i].sparse());
  }
  for (const auto& s : sparse) ptrs.push_back(&s);
  Vector out(result_.dim());
  accumulate(ptrs, Scalar(1), out);
  return out;
}

std::optional<MultiOp::Tuple> MultiOp::grading_violation() const {
  for (const auto& [tuple, value] : constants()) {
    Degree d = result_.group().zero();
    for (std::size_t i = 0; i < tuple.size(); ++i) d = result_.group().add(d, args_[i].degree(tuple[i]));
    for (std::size_t k = 0; k < value.dim(); ++k) {
      if (value[k] != 0 && !(result_.degree(k) == d)) return tuple;
    }
  }
  return std::nullopt;
}

MultiOp MultiOp::precompose(const std::vector<const EvenLinearMap*>& maps) const {
  if (maps.size() != args_.size()) throw StructuralError("precompose needs one map per argument");
  std::vector<GradedSpace> new_args;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!(maps[i]->codomain() == args_[i])) throw StructuralError("precompose map codomain mismatch");
    new_args.push_back(maps[i]->domain());
  }
  std::map<Tuple, Vector> constants;
  Tuple t(args_.size(), 0);
  std::vector<const SparseVec*> ptrs(args_.size());
  while (true) {
    for (std::size_t i = 0; i < t.size(); ++i) ptrs[i] = &maps[i]->column(t[i]);
    Vector v(result_.dim());
    accumulate(ptrs, Scalar(1), v);
    if (!v.is_zero()) constants.emplace(t, std::move(v));
    std::size_t pos = t.size();
    while (pos > 0) {
      --pos;
      if (++t[pos] < new_args[pos].dim()) break;
      t[pos] = 0;
      if (pos == 0) return MultiOp(name_, std::move(new_args), result_, constants);
    }
  }
}

MultiOp MultiOp::postcompose(const EvenLinearMap& g) const {
  if (!(g.domain() == result_)) throw StructuralError("postcompose map domain mismatch");
  std::map<Tuple, Vector> constants;
  for (const auto& [tuple, value] : this->constants()) {
    Vector v = g.apply(value);
    if (!v.is_zero()) constants.emplace(tuple, std::move(v));
  }
  return MultiOp(name_, args_, g.codomain(), constants);
}

MultiOp skew_extend_ternary(std::string name, const GradedSpace& space, const Bicharacter& eps,
                            const std::map<MultiOp::Tuple, Vector>& generators) {
  // Each ordering of a generator tuple is reached by adjacent swaps; a swap of
  // positions (p, p+1) multiplies by -eps(deg_p, deg_{p+1}).
  std::map<MultiOp::Tuple, Vector> values;
  for (const auto& [gen, value] : generators) {
    if (gen.size() != 3) throw StructuralError("skew extension needs ternary generators");
    for (std::size_t idx : gen) {
      if (idx >= space.dim()) throw StructuralError("generator index out of range in '" + name + "'");
    }
    if (value.dim() != space.dim()) throw StructuralError("generator value has the wrong dimension in '" + name + "'");
    std::map<MultiOp::Tuple, Vector> orbit;
    std::vector<std::pair<MultiOp::Tuple, Vector>> stack{{gen, value}};
    orbit.emplace(gen, value);
    while (!stack.empty()) {
      auto [t, v] = stack.back();
      stack.pop_back();
      for (std::size_t p = 0; p < 2; ++p) {
        MultiOp::Tuple s = t;
        std::swap(s[p], s[p + 1]);
        Vector w = (-eps.eval(space.degree(t[p]), space.degree(t[p + 1]))) * v;
        auto it = orbit.find(s);
        if (it == orbit.end()) {
          orbit.emplace(s, w);
          stack.emplace_back(s, w);
        } else if (!(it->second == w)) {
          throw ConflictingGeneratorsError("generator of '" + name + "' at (" + std::to_string(gen[0] + 1) + "," +
                                           std::to_string(gen[1] + 1) + "," + std::to_string(gen[2] + 1) +
                                           ") is inconsistent with skew-symmetry");
        }
      }
    }
    for (auto& [t, v] : orbit) {
      auto it = values.find(t);
      if (it == values.end()) {
        values.emplace(t, v);
      } else if (!(it->second == v)) {
        throw ConflictingGeneratorsError("generators of '" + name + "' disagree at (" + std::to_string(t[0] + 1) + "," +
                                         std::to_string(t[1] + 1) + "," + std::to_string(t[2] + 1) + ")");
      }
    }
  }
  return MultiOp(std::move(name), {space, space, space}, space, values);
}

EpsTable::EpsTable(const Bicharacter& eps, const GradedSpace& left, const GradedSpace& right)
    : cols_(right.dim()), table_(left.dim() * right.dim()) {
  for (std::size_t i = 0; i < left.dim(); ++i) {
    for (std::size_t j = 0; j < right.dim(); ++j) table_[i * cols_ + j] = eps.eval(left.degree(i), right.degree(j));
  }
}

}  // namespace colorforge
