// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "colorforge/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "colorforge/errors.hpp"

namespace colorforge {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 magnitude(i128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  const u128 m = magnitude(v);
  mpz_class r(static_cast<unsigned long>(m >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(m & 0xFFFFFFFFFFFFFFFFULL);
  return v < 0 ? mpz_class(-r) : r;
}

bool fits(i128 v) { return v > INT64_MIN && v <= INT64_MAX; }

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("", "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n{std::string(num[0] == '+' ? num.substr(1) : num)};
  mpz_class d{std::string(den)};
  if (d == 0) throw ParseError("", "zero denominator in '" + std::string(text) + "'");
  return Scalar(mpq_class(n, d));
}

std::string format_scalar(const Scalar& value) { return value.str(); }

Scalar::Scalar(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  assign(c);
}

void Scalar::assign(const mpq_class& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n != INT64_MIN) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(q);
  }
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

int Scalar::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Scalar::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

std::string Scalar::str() const {
  if (big_) return big_->get_str();
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

// Stores n/d (d > 0) reduced, inline when it fits.
void store(i128 n, i128 d, std::int64_t& num, std::int64_t& den, std::unique_ptr<mpq_class>& big) {
  const u128 g = gcd128(magnitude(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits(n) && fits(d)) {
    num = static_cast<std::int64_t>(n);
    den = static_cast<std::int64_t>(d);
    big.reset();
  } else {
    num = 0;
    den = 1;
    big = std::make_unique<mpq_class>(to_mpz(n), to_mpz(d));
    big->canonicalize();
  }
}

}  // namespace

Scalar& Scalar::add_slow(const Scalar& o, bool subtract) {
  if (!big_ && !o.big_) {
    const i128 a = static_cast<i128>(num_) * o.den_;
    const i128 b = static_cast<i128>(o.num_) * den_;
    store(subtract ? a - b : a + b, static_cast<i128>(den_) * o.den_, num_, den_, big_);
    return *this;
  }
  assign(subtract ? mpq_class(to_mpq() - o.to_mpq()) : mpq_class(to_mpq() + o.to_mpq()));
  return *this;
}

Scalar& Scalar::mul_slow(const Scalar& o, bool divide) {
  if (divide && o.sign() == 0) throw std::domain_error("division by zero");
  if (!big_ && !o.big_) {
    i128 on = o.num_;
    i128 od = o.den_;
    if (divide) {
      std::swap(on, od);
      if (od < 0) {
        on = -on;
        od = -od;
      }
    }
    store(static_cast<i128>(num_) * on, static_cast<i128>(den_) * od, num_, den_, big_);
    return *this;
  }
  assign(divide ? mpq_class(to_mpq() / o.to_mpq()) : mpq_class(to_mpq() * o.to_mpq()));
  return *this;
}

Scalar power(const Scalar& value, long exponent) {
  Scalar base = value;
  if (exponent < 0) {
    if (base == 0) throw Error("zero raised to a negative power");
    base = 1 / base;
    exponent = -exponent;
  }
  Scalar result = 1;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace colorforge
