// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

namespace colorforge {

/// Exact rational. Values whose reduced numerator and denominator fit in 63
/// bits are stored inline; anything larger lives in a GMP rational. Every
/// operation returns the exact reduced result.
class Scalar {
 public:
  Scalar() noexcept = default;
  template <std::signed_integral I>
  Scalar(I v) noexcept : num_(v) {  // NOLINT(google-explicit-constructor)
    if constexpr (sizeof(I) >= sizeof(std::int64_t)) {
      if (v == INT64_MIN) {
        num_ = 0;
        big_ = std::make_unique<mpq_class>(mpz_class(std::to_string(v)));
      }
    }
  }
  template <std::unsigned_integral I>
  Scalar(I v) {  // NOLINT(google-explicit-constructor)
    if (static_cast<std::uint64_t>(v) <= static_cast<std::uint64_t>(INT64_MAX)) {
      num_ = static_cast<std::int64_t>(v);
    } else {
      big_ = std::make_unique<mpq_class>(mpz_class(std::to_string(v)));
    }
  }
  /// Any rational; the value is reduced on the way in.
  explicit Scalar(const mpq_class& q);
  Scalar(const Scalar& o) : num_(o.num_), den_(o.den_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Scalar& operator=(Scalar&&) noexcept = default;

  mpq_class to_mpq() const;
  /// -1, 0 or 1.
  int sign() const;
  bool is_integer() const;
  std::string str() const;

  Scalar& operator+=(const Scalar& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1 && !__builtin_add_overflow(num_, o.num_, &r) && r != INT64_MIN) {
      num_ = r;
      return *this;
    }
    return add_slow(o, false);
  }
  Scalar& operator-=(const Scalar& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1 && !__builtin_sub_overflow(num_, o.num_, &r) && r != INT64_MIN) {
      num_ = r;
      return *this;
    }
    return add_slow(o, true);
  }
  Scalar& operator*=(const Scalar& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1 && !__builtin_mul_overflow(num_, o.num_, &r) && r != INT64_MIN) {
      num_ = r;
      return *this;
    }
    return mul_slow(o, false);
  }
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o) { return mul_slow(o, true); }

  Scalar operator-() const {
    Scalar r = *this;
    if (r.big_) {
      *r.big_ = -*r.big_;
    } else {
      r.num_ = -r.num_;
    }
    return r;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) {
      const __int128 l = static_cast<__int128>(a.num_) * b.den_;
      const __int128 r = static_cast<__int128>(b.num_) * a.den_;
      return l <=> r;
    }
    return cmp(a.to_mpq(), b.to_mpq()) <=> 0;
  }
  template <std::integral I>
  friend bool operator==(const Scalar& a, I b) {
    return a == Scalar(b);
  }
  template <std::integral I>
  friend std::strong_ordering operator<=>(const Scalar& a, I b) {
    return a <=> Scalar(b);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  Scalar& add_slow(const Scalar& o, bool subtract);
  Scalar& mul_slow(const Scalar& o, bool divide);
  void assign(const mpq_class& q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

/// Parses "p", "-p", "+p" or "p/q" into a reduced rational. Throws ParseError.
Scalar parse_scalar(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise, always reduced.
std::string format_scalar(const Scalar& value);

/// value^exponent; negative exponents need a nonzero base.
Scalar power(const Scalar& value, long exponent);

}  // namespace colorforge
