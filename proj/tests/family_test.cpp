#include <gtest/gtest.h>

#include <random>

#include "baryassoc/error.hpp"
#include "baryassoc/family.hpp"
#include "baryassoc/text.hpp"
#include "support/oracles.hpp"

using namespace baryassoc;

namespace {

RingValue lit(const char* text, RingId ring) { return parse_ring_literal(text, ring); }

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Family, ValidatesMembers) {
  const auto x1 = parse_polynomial("x1", RingId::Rat, 1);
  const auto bad_arity = parse_polynomial("x2", RingId::Rat, 2);
  EXPECT_EQ(code_of([&] { PolyFamily({x1, parse_polynomial("x3", RingId::Rat, 3)}); }),
            ErrorCode::ArityMismatch);
  EXPECT_EQ(code_of([&] { PolyFamily({bad_arity}); }), ErrorCode::ArityMismatch);
  EXPECT_EQ(code_of([&] { PolyFamily({x1, parse_polynomial("x1", RingId::Int, 2)}); }),
            ErrorCode::RingMismatch);
  EXPECT_THROW(PolyFamily(std::vector<Polynomial>{}), Error);
  const PolyFamily f({x1});
  EXPECT_EQ(code_of([&] { (void)f.member(2); }), ErrorCode::ArityOutOfRange);
  EXPECT_EQ(code_of([&] { (void)f.member(0); }), ErrorCode::ArityOutOfRange);
}

TEST(Delta, SmallValuesOverQ) {
  const RingValue third = lit("1/3", RingId::Rat);
  const auto seq = delta_sequence(third, 3);
  ASSERT_EQ(seq.size(), 3U);
  EXPECT_EQ(seq[0], lit("1", RingId::Rat));
  EXPECT_EQ(seq[1], lit("1", RingId::Rat));
  // 1/9 + 2/9 + 4/9
  EXPECT_EQ(seq[2], lit("7/9", RingId::Rat));
}

TEST(Delta, IntegerExamples) {
  const RingValue two = lit("2", RingId::Int);
  EXPECT_EQ(delta(two, 3), lit("3", RingId::Int));
  EXPECT_EQ(n_of_z(two).value, 3U);
  EXPECT_TRUE(n_of_z(lit("0", RingId::Int)).above_bound());
  EXPECT_TRUE(n_of_z(lit("1", RingId::Int)).above_bound());
  EXPECT_EQ(n_of_z(lit("0", RingId::Int)).bound, kDefaultNOfZBound);
}

TEST(Delta, GaussianZeroAtFour) {
  const RingValue z = lit("1/2-1/2i", RingId::GaussRat);
  EXPECT_TRUE(delta(z, 4).is_zero());
  EXPECT_EQ(n_of_z(z).value, 4U);
}

TEST(Delta, NOfZOverQ) {
  EXPECT_EQ(n_of_z(lit("1/2", RingId::Rat)).value, std::nullopt);
  EXPECT_EQ(n_of_z(lit("1/3", RingId::Rat)).value, std::nullopt);
  // Delta_2 = 1 for every z, so n(z) >= 3 always.
  EXPECT_THROW((void)n_of_z(lit("2", RingId::Int), 2), Error);
}

TEST(Delta, Report) {
  const auto r = delta_report(lit("1/2-1/2i", RingId::GaussRat), 5);
  ASSERT_EQ(r.values.size(), 5U);
  EXPECT_TRUE(r.values[3].is_zero());
  EXPECT_EQ(r.n_of_z.value, 4U);
}

TEST(WeightedMean, Examples) {
  EXPECT_EQ(weighted_mean(lit("1/2", RingId::Rat), 2), parse_polynomial("1/2*x1 + 1/2*x2", RingId::Rat, 2));
  EXPECT_EQ(weighted_mean(lit("1/3", RingId::Rat), 3),
            parse_polynomial("1/7*x1 + 2/7*x2 + 4/7*x3", RingId::Rat, 3));
  EXPECT_EQ(weighted_mean(lit("0", RingId::Int), 4), parse_polynomial("x4", RingId::Int, 4));
  EXPECT_EQ(weighted_mean(lit("1", RingId::Int), 4), parse_polynomial("x1", RingId::Int, 4));
  EXPECT_EQ(weighted_mean(lit("2", RingId::Int), 2), parse_polynomial("2*x1 - x2", RingId::Int, 2));
  EXPECT_EQ(code_of([] { (void)weighted_mean(lit("2", RingId::Int), 3); }), ErrorCode::DeltaNotInvertible);
  EXPECT_EQ(code_of([] { (void)weighted_mean(lit("1/2-1/2i", RingId::GaussRat), 4); }),
            ErrorCode::DeltaNotInvertible);
}

TEST(WeightedMean, IsIdempotent) {
  for (const char* z : {"0", "1", "1/2", "-3", "2/7"}) {
    for (unsigned n = 1; n <= 6; ++n) {
      EXPECT_TRUE(is_idempotent(weighted_mean(lit(z, RingId::Rat), n))) << z << " n=" << n;
    }
  }
}

TEST(Constructors, MzFamily) {
  const RingValue two = lit("2", RingId::Int);
  const std::vector<RingValue> tail = {lit("5", RingId::Int), lit("7", RingId::Int)};
  const PolyFamily f = mz_family(two, 4, tail);
  EXPECT_EQ(f.member(1), parse_polynomial("x1", RingId::Int, 1));
  EXPECT_EQ(f.member(2), parse_polynomial("2*x1 - x2", RingId::Int, 2));
  EXPECT_EQ(f.member(3), parse_polynomial("5", RingId::Int, 3));
  EXPECT_EQ(f.member(4), parse_polynomial("7", RingId::Int, 4));
  EXPECT_EQ(code_of([&] { (void)mz_family(two, 4, std::span(tail).first(1)); }),
            ErrorCode::TailLengthMismatch);
  EXPECT_EQ(mz_family(lit("1/2", RingId::Rat), 3, {}).member(3),
            parse_polynomial("1/3*x1 + 1/3*x2 + 1/3*x3", RingId::Rat, 3));
}

TEST(Constructors, Truncate) {
  const PolyFamily f = mz_family(lit("1/2", RingId::Rat), 4, {});
  const std::vector<RingValue> c = {lit("1", RingId::Rat), lit("2", RingId::Rat)};
  const PolyFamily t = truncate(f, 3, c);
  EXPECT_EQ(t.member(2), f.member(2));
  EXPECT_EQ(t.member(3), parse_polynomial("1", RingId::Rat, 3));
  EXPECT_EQ(t.member(4), parse_polynomial("2", RingId::Rat, 4));
  EXPECT_EQ(truncate(f, 5, {}), f);
  EXPECT_THROW((void)truncate(f, 0, {}), Error);
  EXPECT_THROW((void)truncate(f, 6, {}), Error);
  EXPECT_EQ(code_of([&] { (void)truncate(f, 2, c); }), ErrorCode::TailLengthMismatch);
}

TEST(Constructors, CaseII) {
  const auto q = parse_polynomial("x1*x2", RingId::Int, 2);
  const std::vector<RingValue> tail = {lit("4", RingId::Int)};
  const PolyFamily f = case_ii_family(q, 3, tail);
  EXPECT_EQ(f.member(2), parse_polynomial("x1^2*x2 - x1*x2^2 + x2", RingId::Int, 2));
  EXPECT_EQ(f.member(3), parse_polynomial("4", RingId::Int, 3));
  EXPECT_EQ(code_of([] { (void)case_ii_family(parse_polynomial("3", RingId::Int, 2), 2, {}); }),
            ErrorCode::DegreeTooLow);
  EXPECT_EQ(code_of([&] { (void)case_ii_family(q, 3, {}); }), ErrorCode::TailLengthMismatch);
}

TEST(DeltaProperties, RecurrenceMatchesDirectSum) {
  std::mt19937_64 rng(31);
  for (RingId ring : {RingId::Int, RingId::Rat, RingId::GaussInt, RingId::GaussRat}) {
    for (int t = 0; t < 40; ++t) {
      const RingValue z = support::random_value(ring, rng, 4);
      const auto seq = delta_sequence(z, 12);
      for (unsigned n = 1; n <= 12; ++n) {
        ASSERT_EQ(seq[n - 1], support::delta_direct_sum(z, n)) << z.to_string() << " n=" << n;
      }
    }
  }
}

TEST(DeltaProperties, SymmetricUnderReflection) {
  std::mt19937_64 rng(32);
  for (RingId ring : {RingId::Int, RingId::Rat, RingId::GaussInt, RingId::GaussRat}) {
    for (int t = 0; t < 40; ++t) {
      const RingValue z = support::random_value(ring, rng, 6);
      const RingValue w = RingValue::one(ring) - z;
      for (unsigned n = 1; n <= 10; ++n) ASSERT_EQ(delta(z, n), delta(w, n));
      ASSERT_EQ(n_of_z(z, 20), n_of_z(w, 20));
    }
  }
}

TEST(DeltaProperties, NOfZIsAtLeastThreeAndMinimal) {
  std::mt19937_64 rng(33);
  for (RingId ring : {RingId::Int, RingId::GaussInt, RingId::GaussRat}) {
    for (int t = 0; t < 60; ++t) {
      const RingValue z = support::random_value(ring, rng, 3);
      const NOfZ nz = n_of_z(z, 30);
      if (!nz.value) continue;
      ASSERT_GE(*nz.value, 3U);
      ASSERT_FALSE(is_unit(support::delta_direct_sum(z, *nz.value)));
      for (unsigned n = 1; n < *nz.value; ++n) ASSERT_TRUE(is_unit(support::delta_direct_sum(z, n)));
    }
  }
}

TEST(WeightedMeanProperties, BinaryReconstruction) {
  // M_{n+1}^z(x) = c M_n^z(x_1..x_n) + (1 - c) x_{n+1} with c = z Delta_n / Delta_{n+1}.
  std::mt19937_64 rng(34);
  for (int t = 0; t < 30; ++t) {
    const RingValue z = support::random_value(RingId::Rat, rng, 5);
    for (unsigned n = 1; n <= 6; ++n) {
      const RingValue dn = support::delta_direct_sum(z, n);
      const RingValue dn1 = support::delta_direct_sum(z, n + 1);
      if (dn.is_zero() || dn1.is_zero()) break;
      const RingValue c = z * dn * *try_invert(dn1);
      const Polynomial lhs = weighted_mean(z, n + 1);
      const Polynomial rhs = p_scale(c, weighted_mean(z, n).with_num_vars(n + 1)) +
                             p_scale(RingValue::one(RingId::Rat) - c,
                                     Polynomial::variable(RingId::Rat, n + 1, n + 1));
      ASSERT_EQ(lhs, rhs) << z.to_string() << " n=" << n;
    }
  }
}

TEST(WeightedMeanProperties, CoefficientsMatchDirectFormula) {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 30; ++t) {
    const RingValue z = support::random_value(RingId::GaussRat, rng, 4);
    for (unsigned n = 1; n <= 5; ++n) {
      const RingValue d = support::delta_direct_sum(z, n);
      if (d.is_zero()) break;
      const Polynomial m = weighted_mean(z, n);
      const RingValue one = RingValue::one(z.ring());
      for (unsigned i = 1; i <= n; ++i) {
        RingValue w = one;
        for (unsigned e = 0; e < n - i; ++e) w = w * z;
        for (unsigned e = 0; e + 1 < i; ++e) w = w * (one - z);
        ASSERT_EQ(m.coefficient(Monomial::variable(i)) * d, w);
      }
    }
  }
}
