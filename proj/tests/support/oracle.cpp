// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "oracle.hpp"

#include <functional>

namespace colorforge::oracle {
namespace {

using Fn = std::function<bool(const Tuple&)>;

std::optional<Tuple> first_failure(std::size_t n, std::size_t k, const Fn& holds) {
  Tuple t(k, 0);
  if (n == 0) return std::nullopt;
  while (true) {
    if (!holds(t)) return t;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (k == 0) return std::nullopt;
  }
}

mpq_class ipow(mpq_class base, long e) {
  if (e < 0) {
    base = 1 / base;
    e = -e;
  }
  mpq_class r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

bool same(const DVec& a, const DVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (cmp(a[i], b[i]) != 0) return false;
  }
  return true;
}

DVec scale(DVec v, const mpq_class& c) {
  for (auto& x : v) x *= c;
  return v;
}

}  // namespace

mpq_class eps_of(const Bicharacter& eps, const Degree& a, const Degree& b) {
  const auto& g = eps.generator_values();
  mpq_class r = 1;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    for (std::size_t j = 0; j < b.coords.size(); ++j) {
      r *= ipow(g[i][j].to_mpq(), a.coords[i] * b.coords[j]);
    }
  }
  return r;
}

std::vector<mpq_class> dense_matrix(const EvenLinearMap& f) {
  const Matrix& m = f.matrix();
  std::vector<mpq_class> out(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r * m.cols() + c] = m(r, c).to_mpq();
  }
  return out;
}

Dense densify(const AlgebraPresentation& p) {
  Dense d;
  d.n = p.dim();
  d.eps.assign(d.n, std::vector<mpq_class>(d.n));
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = 0; j < d.n; ++j) d.eps[i][j] = eps_of(p.eps, p.space.degree(i), p.space.degree(j));
  }
  d.alpha = dense_matrix(p.alpha);
  d.beta = dense_matrix(p.beta);
  for (const auto& [name, op] : p.ops) {
    DenseOp o;
    o.arity = op.arity();
    o.n = d.n;
    o.m = op.result().dim();
    std::size_t cells = o.m;
    for (std::size_t k = 0; k < o.arity; ++k) cells *= d.n;
    o.t.assign(cells, 0);
    for (const auto& [tuple, value] : op.constants()) {
      std::size_t flat = 0;
      for (std::size_t idx : tuple) flat = flat * d.n + idx;
      for (std::size_t r = 0; r < o.m; ++r) o.t[flat * o.m + r] = value[r].to_mpq();
    }
    d.ops.emplace(name, std::move(o));
  }
  return d;
}

DVec basis(std::size_t n, std::size_t i) {
  DVec v(n, 0);
  v[i] = 1;
  return v;
}

DVec act(const std::vector<mpq_class>& mat, const DVec& v) {
  const std::size_t cols = v.size();
  const std::size_t rows = cols == 0 ? 0 : mat.size() / cols;
  DVec out(rows, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out[r] += mat[r * cols + c] * v[c];
  }
  return out;
}

DVec eval2(const DenseOp& op, const DVec& x, const DVec& y) {
  DVec out(op.m, 0);
  for (std::size_t i = 0; i < op.n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < op.n; ++j) {
      if (y[j] == 0) continue;
      const mpq_class c = x[i] * y[j];
      for (std::size_t r = 0; r < op.m; ++r) out[r] += c * op.t[(i * op.n + j) * op.m + r];
    }
  }
  return out;
}

DVec eval3(const DenseOp& op, const DVec& x, const DVec& y, const DVec& z) {
  DVec out(op.m, 0);
  for (std::size_t i = 0; i < op.n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < op.n; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < op.n; ++k) {
        if (z[k] == 0) continue;
        const mpq_class c = x[i] * y[j] * z[k];
        for (std::size_t r = 0; r < op.m; ++r) out[r] += c * op.t[((i * op.n + j) * op.n + k) * op.m + r];
      }
    }
  }
  return out;
}

DVec add(DVec a, const DVec& b, const mpq_class& c) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
  return a;
}

std::optional<Tuple> bihom_associative(const Dense& d) {
  const DenseOp& mu = d.ops.at("mu");
  return first_failure(d.n, 3, [&](const Tuple& t) -> bool {
    const DVec x = basis(d.n, t[0]), y = basis(d.n, t[1]), z = basis(d.n, t[2]);
    return same(eval2(mu, act(d.alpha, x), eval2(mu, y, z)), eval2(mu, eval2(mu, x, y), act(d.beta, z)));
  });
}

std::optional<Tuple> bihom_commutative(const Dense& d) {
  const DenseOp& mu = d.ops.at("mu");
  return first_failure(d.n, 2, [&](const Tuple& t) -> bool {
    const DVec x = basis(d.n, t[0]), y = basis(d.n, t[1]);
    const DVec lhs = eval2(mu, act(d.beta, x), act(d.alpha, y));
    const DVec rhs = scale(eval2(mu, act(d.beta, y), act(d.alpha, x)), d.eps[t[0]][t[1]]);
    return same(lhs, rhs);
  });
}

std::optional<Tuple> multiplicative(const Dense& d, const std::string& name, bool use_alpha) {
  const DenseOp& op = d.ops.at(name);
  const auto& f = use_alpha ? d.alpha : d.beta;
  return first_failure(d.n, op.arity, [&](const Tuple& t) -> bool {
    std::vector<DVec> args, images;
    for (std::size_t i : t) {
      args.push_back(basis(d.n, i));
      images.push_back(act(f, args.back()));
    }
    if (op.arity == 2) return same(act(f, eval2(op, args[0], args[1])), eval2(op, images[0], images[1]));
    return same(act(f, eval3(op, args[0], args[1], args[2])), eval3(op, images[0], images[1], images[2]));
  });
}

std::optional<Tuple> bihom_skew(const Dense& d, int which) {
  const DenseOp& br = d.ops.at("bracket");
  return first_failure(d.n, 3, [&](const Tuple& t) -> bool {
    const std::size_t x = t[0], y = t[1], z = t[2];
    auto b = [&](std::size_t i) { return act(d.beta, basis(d.n, i)); };
    auto a = [&](std::size_t i) { return act(d.alpha, basis(d.n, i)); };
    const DVec lhs = eval3(br, b(x), b(y), a(z));
    if (which == 1) return same(lhs, scale(eval3(br, b(y), b(x), a(z)), -d.eps[x][y]));
    return same(lhs, scale(eval3(br, b(x), b(z), a(y)), -d.eps[y][z]));
  });
}

std::optional<Tuple> bihom_jacobi(const Dense& d) {
  const DenseOp& br = d.ops.at("bracket");
  auto a = [&](std::size_t i) { return act(d.alpha, basis(d.n, i)); };
  auto b = [&](std::size_t i) { return act(d.beta, basis(d.n, i)); };
  auto bb = [&](std::size_t i) { return act(d.beta, act(d.beta, basis(d.n, i))); };
  const auto& E = d.eps;
  return first_failure(d.n, 5, [&](const Tuple& t) -> bool {
    const std::size_t x = t[0], y = t[1], z = t[2], u = t[3], v = t[4];
    const DVec lhs = eval3(br, bb(x), bb(y), eval3(br, b(z), b(u), a(v)));
    DVec rhs = scale(eval3(br, bb(u), bb(v), eval3(br, b(x), b(y), a(z))),
                     E[x][u] * E[x][v] * E[y][u] * E[y][v] * E[z][u] * E[z][v]);
    rhs = add(rhs, eval3(br, bb(z), bb(v), eval3(br, b(x), b(y), a(u))),
              -(E[x][z] * E[x][v] * E[y][z] * E[y][v]) * E[u][v]);
    rhs = add(rhs, eval3(br, bb(z), bb(u), eval3(br, b(x), b(y), a(v))), E[x][z] * E[x][u] * E[y][z] * E[y][u]);
    return same(lhs, rhs);
  });
}

std::optional<Tuple> fundamental(const Dense& d) {
  const DenseOp& br = d.ops.at("bracket");
  const auto& E = d.eps;
  return first_failure(d.n, 5, [&](const Tuple& tu) -> bool {
    const std::size_t x = tu[0], y = tu[1], z = tu[2], t = tu[3], u = tu[4];
    auto e = [&](std::size_t i) { return basis(d.n, i); };
    const DVec lhs = eval3(br, e(x), e(y), eval3(br, e(z), e(t), e(u)));
    DVec rhs = eval3(br, eval3(br, e(x), e(y), e(z)), e(t), e(u));
    rhs = add(rhs, eval3(br, e(z), eval3(br, e(x), e(y), e(t)), e(u)), E[x][z] * E[y][z]);
    rhs = add(rhs, eval3(br, e(z), e(t), eval3(br, e(x), e(y), e(u))), E[x][z] * E[y][z] * E[x][t] * E[y][t]);
    return same(lhs, rhs);
  });
}

std::optional<Tuple> leibniz(const Dense& d) {
  const DenseOp& br = d.ops.at("bracket");
  const DenseOp& mu = d.ops.at("mu");
  auto a = [&](std::size_t i) { return act(d.alpha, basis(d.n, i)); };
  auto b = [&](std::size_t i) { return act(d.beta, basis(d.n, i)); };
  auto ab = [&](std::size_t i) { return act(d.alpha, act(d.beta, basis(d.n, i))); };
  return first_failure(d.n, 4, [&](const Tuple& tu) -> bool {
    const std::size_t x = tu[0], y = tu[1], z = tu[2], t = tu[3];
    const DVec lhs = eval3(br, ab(x), ab(y), eval2(mu, basis(d.n, z), basis(d.n, t)));
    DVec rhs = eval2(mu, eval3(br, b(x), b(y), basis(d.n, z)), b(t));
    rhs = add(rhs, eval2(mu, b(z), eval3(br, a(x), a(y), basis(d.n, t))), d.eps[x][z] * d.eps[y][z]);
    return same(lhs, rhs);
  });
}

std::optional<Tuple> dendriform(const Dense& d, int which) {
  const DenseOp& prec = d.ops.at("prec");
  const DenseOp& succ = d.ops.at("succ");
  auto dot = [&](const DVec& x, const DVec& y) { return add(eval2(prec, x, y), eval2(succ, x, y)); };
  return first_failure(d.n, 3, [&](const Tuple& t) -> bool {
    const DVec x = basis(d.n, t[0]), y = basis(d.n, t[1]), z = basis(d.n, t[2]);
    const DVec ax = act(d.alpha, x), bz = act(d.beta, z);
    if (which == 1) return same(eval2(prec, eval2(prec, x, y), bz), eval2(prec, ax, dot(y, z)));
    if (which == 2) return same(eval2(prec, eval2(succ, x, y), bz), eval2(succ, ax, eval2(prec, y, z)));
    return same(eval2(succ, ax, eval2(succ, y, z)), eval2(succ, dot(x, y), bz));
  });
}

std::optional<Tuple> rota_baxter_mu(const Dense& d, const std::vector<mpq_class>& r) {
  const DenseOp& mu = d.ops.at("mu");
  return first_failure(d.n, 2, [&](const Tuple& t) -> bool {
    const DVec x = basis(d.n, t[0]), y = basis(d.n, t[1]);
    const DVec rx = act(r, x), ry = act(r, y);
    return same(eval2(mu, rx, ry), act(r, add(eval2(mu, rx, y), eval2(mu, x, ry))));
  });
}

std::optional<Tuple> rota_baxter_bracket(const Dense& d, const std::vector<mpq_class>& r) {
  const DenseOp& br = d.ops.at("bracket");
  return first_failure(d.n, 3, [&](const Tuple& t) -> bool {
    const DVec x = basis(d.n, t[0]), y = basis(d.n, t[1]), z = basis(d.n, t[2]);
    const DVec rx = act(r, x), ry = act(r, y), rz = act(r, z);
    DVec inner = eval3(br, rx, ry, z);
    inner = add(inner, eval3(br, rx, y, rz));
    inner = add(inner, eval3(br, x, ry, rz));
    return same(eval3(br, rx, ry, rz), act(r, inner));
  });
}

}  // namespace colorforge::oracle
