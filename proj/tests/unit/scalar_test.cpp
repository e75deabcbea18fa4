// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include "colorforge/scalar.hpp"

#include <gtest/gtest.h>

#include <climits>
#include <stdexcept>

#include "colorforge/errors.hpp"
#include "generators.hpp"

namespace colorforge {
namespace {

TEST(Scalar, ParsesAndFormatsCanonically) {
  EXPECT_EQ(format_scalar(parse_scalar("6/4")), "3/2");
  EXPECT_EQ(format_scalar(parse_scalar("-6/4")), "-3/2");
  EXPECT_EQ(format_scalar(parse_scalar("+7")), "7");
  EXPECT_EQ(format_scalar(parse_scalar("0/5")), "0");
  EXPECT_EQ(format_scalar(parse_scalar("123456789012345678901234567890/10")), "12345678901234567890123456789");
}

TEST(Scalar, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/", "/3", "--1", "1 /2", "0x10", "4/-2", "1/+2"}) {
    EXPECT_THROW(parse_scalar(bad), ParseError) << bad;
  }
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW(Scalar(1) / Scalar(0), std::domain_error);
  EXPECT_THROW(power(Scalar(0), -1), Error);
}

TEST(Scalar, Power) {
  EXPECT_EQ(power(Scalar(-1), 7), Scalar(-1));
  EXPECT_EQ(power(parse_scalar("2/3"), -2), parse_scalar("9/4"));
  EXPECT_EQ(power(Scalar(5), 0), Scalar(1));
}

TEST(Scalar, EdgeValuesAroundInt64) {
  const Scalar max(INT64_MAX);
  const Scalar min(INT64_MIN);
  EXPECT_EQ(min.str(), "-9223372036854775808");
  EXPECT_EQ((max + Scalar(1)).str(), "9223372036854775808");
  EXPECT_EQ((max + Scalar(1)) - Scalar(1), max);
  EXPECT_EQ((-min).str(), "9223372036854775808");
  EXPECT_EQ(min * Scalar(-1), -min);
  EXPECT_EQ((max * max) / max, max);
  EXPECT_TRUE((max + Scalar(1) - Scalar(1)).is_integer());
  EXPECT_LT(min, max);
  EXPECT_EQ(Scalar(UINT64_MAX).str(), "18446744073709551615");
}

TEST(Scalar, ComparesAcrossRepresentations) {
  const Scalar big = parse_scalar("100000000000000000000/3");
  EXPECT_GT(big, Scalar(1));
  EXPECT_LT(-big, Scalar(-1));
  EXPECT_EQ(big - big, Scalar(0));
  EXPECT_EQ((big - big).sign(), 0);
  EXPECT_EQ(parse_scalar("1/3") + parse_scalar("2/3"), 1);
}

// The inline representation must agree with GMP on every operation.
TEST(ScalarProperty, MatchesGmpOnRandomOperands) {
  gen::Rng rng(0x5ca1a);
  for (int i = 0; i < 20000; ++i) {
    const Scalar a = gen::wide_scalar(rng);
    const Scalar b = i % 3 == 0 ? gen::small_scalar(rng, 5, 4) : gen::wide_scalar(rng);
    const mpq_class qa = a.to_mpq(), qb = b.to_mpq();
    ASSERT_EQ((a + b).to_mpq(), qa + qb);
    ASSERT_EQ((a - b).to_mpq(), qa - qb);
    ASSERT_EQ((a * b).to_mpq(), qa * qb);
    if (qb != 0) {
      ASSERT_EQ((a / b).to_mpq(), qa / qb);
    }
    ASSERT_EQ((-a).to_mpq(), -qa);
    ASSERT_EQ(a == b, qa == qb);
    ASSERT_EQ(a < b, qa < qb);
    ASSERT_EQ(a.sign(), sgn(qa));
    ASSERT_EQ(a.is_integer(), qa.get_den() == 1);
    ASSERT_EQ(parse_scalar(a.str()), a);
  }
}

TEST(ScalarProperty, EqualValuesCompareEqualWhateverTheHistory) {
  gen::Rng rng(77);
  for (int i = 0; i < 2000; ++i) {
    const Scalar a = gen::wide_scalar(rng);
    const Scalar b = gen::wide_scalar(rng);
    // (a + b) - b lands back inline even after a detour through GMP.
    const Scalar back = (a + b) - b;
    ASSERT_EQ(back, a);
    ASSERT_EQ(back.str(), a.str());
    ASSERT_EQ(back <=> a, std::strong_ordering::equal);
  }
}

TEST(ScalarProperty, FieldLaws) {
  gen::Rng rng(3);
  for (int i = 0; i < 3000; ++i) {
    const Scalar a = gen::small_scalar(rng, 1000, 50);
    const Scalar b = gen::wide_scalar(rng);
    const Scalar c = gen::small_scalar(rng, 1 << 20, 7);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * b, b * a);
    if (c != 0) {
      ASSERT_EQ((a / c) * c, a);
    }
  }
}

}  // namespace
}  // namespace colorforge
