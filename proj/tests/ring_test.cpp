#include <gtest/gtest.h>

#include <random>

#include "baryassoc/error.hpp"
#include "baryassoc/ring.hpp"
#include "support/oracles.hpp"

using namespace baryassoc;

namespace {

RingValue I(long v) { return RingValue(RingId::Int, v); }
RingValue Q(long n, long d = 1) { return RingValue(RingId::Rat, mpq_class(n, d)); }
RingValue GI(long a, long b) { return RingValue(RingId::GaussInt, a, b); }
RingValue GR(mpq_class a, mpq_class b) { return RingValue(RingId::GaussRat, a, b); }

constexpr RingId kRings[] = {RingId::Int, RingId::Rat, RingId::GaussInt, RingId::GaussRat};

}  // namespace

TEST(Ring, AddExamples) {
  EXPECT_EQ(I(2) + I(3), I(5));
  EXPECT_EQ(Q(1, 2) + Q(1, 2), Q(1));
  EXPECT_EQ(GI(1, 1) + GI(0, -1), GI(1, 0));
}

TEST(Ring, MulExamples) {
  EXPECT_EQ(GI(0, 1) * GI(0, 1), GI(-1, 0));
  EXPECT_EQ(Q(2, 3) * Q(3, 2), Q(1));
  EXPECT_EQ(I(0) * I(7), I(0));
}

TEST(Ring, MismatchedRingsThrow) {
  try {
    (void)add(I(1), Q(1));
    FAIL() << "expected RingMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RingMismatch);
  }
  EXPECT_THROW((void)mul(GI(1, 0), GR(1, 0)), Error);
}

TEST(Ring, ConstructorRejectsForeignValues) {
  EXPECT_THROW(RingValue(RingId::Int, mpq_class(1, 2)), Error);
  EXPECT_THROW(RingValue(RingId::Rat, 0, 1), Error);
  EXPECT_THROW(RingValue(RingId::GaussInt, mpq_class(1, 2), 0), Error);
  EXPECT_NO_THROW(RingValue(RingId::GaussRat, mpq_class(1, 2), mpq_class(-1, 3)));
}

TEST(Ring, CanonicalFormIsStructural) {
  EXPECT_EQ(RingValue(RingId::Rat, mpq_class(2, 4)), Q(1, 2));
  EXPECT_EQ(RingValue(RingId::Rat, mpq_class(3, -6)), Q(-1, 2));
  EXPECT_EQ(Q(-1, 2).real().get_den(), 2);
}

TEST(Ring, UnitsOfEachRing) {
  EXPECT_FALSE(is_unit(I(3)));
  EXPECT_TRUE(is_unit(I(-1)));
  EXPECT_TRUE(is_unit(GI(0, -1)));
  EXPECT_FALSE(is_unit(GI(1, 1)));
  EXPECT_FALSE(is_unit(Q(0)));
  EXPECT_TRUE(is_unit(Q(-7, 3)));
  EXPECT_TRUE(is_unit(GR(1, 1)));
}

TEST(Ring, TryInvert) {
  EXPECT_EQ(try_invert(Q(2, 3)), Q(3, 2));
  EXPECT_FALSE(try_invert(I(2)).has_value());
  // (1+i)(1-i) = 2
  EXPECT_EQ(try_invert(GR(1, 1)), GR(mpq_class(1, 2), mpq_class(-1, 2)));
  EXPECT_EQ(try_invert(GI(0, 1)), GI(0, -1));
  EXPECT_FALSE(try_invert(GR(0, 0)).has_value());
}

TEST(Ring, FractionFieldEmbedding) {
  EXPECT_EQ(embed_in_fraction_field(I(5)), Q(5));
  EXPECT_EQ(embed_in_fraction_field(GI(2, -1)), GR(2, -1));
  EXPECT_EQ(embed_in_fraction_field(Q(1, 2)), Q(1, 2));
  EXPECT_TRUE(is_in_base_ring(Q(4), RingId::Int));
  EXPECT_FALSE(is_in_base_ring(Q(1, 2), RingId::Int));
  EXPECT_TRUE(is_in_base_ring(GR(3, 0), RingId::GaussInt));
  EXPECT_FALSE(is_in_base_ring(GR(0, mpq_class(1, 2)), RingId::GaussInt));
  EXPECT_EQ(descend(Q(4), RingId::Int), I(4));
  EXPECT_THROW(descend(Q(1, 3), RingId::Int), Error);
}

TEST(Ring, Rendering) {
  EXPECT_EQ(I(-12).to_string(), "-12");
  EXPECT_EQ(Q(3, 4).to_string(), "3/4");
  EXPECT_EQ(GI(2, 3).to_string(), "2+3i");
  EXPECT_EQ(GI(0, -1).to_string(), "-i");
  EXPECT_EQ(GI(0, 1).to_string(), "i");
  EXPECT_EQ(GI(5, 0).to_string(), "5");
  EXPECT_EQ(GR(mpq_class(1, 2), mpq_class(-1, 3)).to_string(), "1/2-1/3i");
  EXPECT_EQ(GR(0, 0).to_string(), "0");
}

TEST(RingProperties, AxiomsOnSampledTriples) {
  std::mt19937_64 rng(7);
  for (RingId ring : kRings) {
    const RingValue zero = RingValue::zero(ring);
    const RingValue one = RingValue::one(ring);
    for (int t = 0; t < 300; ++t) {
      const RingValue a = support::random_value(ring, rng);
      const RingValue b = support::random_value(ring, rng);
      const RingValue c = support::random_value(ring, rng);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a * one, a);
      ASSERT_EQ(a + zero, a);
      ASSERT_EQ(a - a, zero);
      if (!a.is_zero() && !b.is_zero()) {
        ASSERT_FALSE((a * b).is_zero());
      }
    }
  }
}

TEST(RingProperties, UnitIffInvertible) {
  std::mt19937_64 rng(11);
  for (RingId ring : kRings) {
    for (int t = 0; t < 300; ++t) {
      const RingValue a = support::random_value(ring, rng, 2);
      const auto inv = try_invert(a);
      ASSERT_EQ(is_unit(a), inv.has_value()) << a.to_string();
      if (inv) {
        ASSERT_TRUE((a * *inv).is_one());
      }
    }
  }
}

TEST(RingProperties, EmbeddingIsAHomomorphism) {
  std::mt19937_64 rng(13);
  for (RingId ring : {RingId::Int, RingId::GaussInt}) {
    for (int t = 0; t < 200; ++t) {
      const RingValue a = support::random_value(ring, rng);
      const RingValue b = support::random_value(ring, rng);
      ASSERT_EQ(embed_in_fraction_field(a + b), embed_in_fraction_field(a) + embed_in_fraction_field(b));
      ASSERT_EQ(embed_in_fraction_field(a * b), embed_in_fraction_field(a) * embed_in_fraction_field(b));
      ASSERT_TRUE(is_in_base_ring(embed_in_fraction_field(a), ring));
    }
  }
}
