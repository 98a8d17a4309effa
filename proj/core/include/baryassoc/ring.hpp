#pragma once

/// @file ring.hpp
/// Exact arithmetic in the four supported infinite integral domains:
/// Z, Q, Z[i] and Q(i).
///
/// A RingValue always carries its ring tag. Values are stored as a pair of
/// reduced rationals (real, imaginary); the tag restricts which pairs are
/// legal, so two values of the same ring are equal exactly when their
/// components are equal.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace baryassoc {

enum class RingId { Int, Rat, GaussInt, GaussRat };

bool is_field(RingId ring);
/// Z -> Q, Z[i] -> Q(i); fields map to themselves.
RingId fraction_field(RingId ring);
/// True when every element of `sub` is an element of `ring`.
bool contains(RingId ring, RingId sub);

/// Header names used in family files and on the command line:
/// int, rat, gaussint, gaussrat.
std::string_view ring_name(RingId ring);
std::optional<RingId> parse_ring_name(std::string_view name);

class RingValue {
 public:
  /// Zero of Z.
  RingValue();
  /// Throws Error(InvalidArgument) when (re, im) is not an element of `ring`.
  RingValue(RingId ring, mpq_class re, mpq_class im = 0);

  static RingValue zero(RingId ring) { return RingValue(ring, 0); }
  static RingValue one(RingId ring) { return RingValue(ring, 1); }
  static RingValue from_int(RingId ring, long value) {
    return RingValue(ring, value);
  }
  /// The imaginary unit; requires a Gaussian ring.
  static RingValue imaginary_unit(RingId ring);

  RingId ring() const { return ring_; }
  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  RingValue operator-() const;
  RingValue& operator+=(const RingValue& rhs);
  RingValue& operator-=(const RingValue& rhs);
  RingValue& operator*=(const RingValue& rhs);

  friend RingValue operator+(RingValue lhs, const RingValue& rhs) {
    return lhs += rhs;
  }
  friend RingValue operator-(RingValue lhs, const RingValue& rhs) {
    return lhs -= rhs;
  }
  friend RingValue operator*(RingValue lhs, const RingValue& rhs) {
    return lhs *= rhs;
  }
  friend bool operator==(const RingValue& a, const RingValue& b) {
    return a.ring_ == b.ring_ && a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical literal: `-12`, `3/4`, `2+3i`, `-i`, `1/2-1/3i`.
  std::string to_string() const;

 private:
  RingId ring_;
  mpq_class re_;
  mpq_class im_;
};

RingValue add(const RingValue& a, const RingValue& b);
RingValue mul(const RingValue& a, const RingValue& b);
RingValue pow(RingValue base, unsigned exponent);

/// Z: +-1. Z[i]: +-1, +-i. Fields: every nonzero value.
bool is_unit(const RingValue& a);
/// The multiplicative inverse inside a's own ring, or nullopt for non-units.
std::optional<RingValue> try_invert(const RingValue& a);

RingValue embed_in_fraction_field(const RingValue& a);
/// Whether `a` (an element of target or of Frac(target)) lies in target.
bool is_in_base_ring(const RingValue& a, RingId target);
/// Reinterprets `a` as an element of `target`; throws Error(InvalidArgument)
/// unless is_in_base_ring(a, target).
RingValue descend(const RingValue& a, RingId target);
/// Maps `a` into a ring containing its own; throws Error(RingMismatch)
/// when contains(ring, a.ring()) is false.
RingValue embed(const RingValue& a, RingId ring);

}  // namespace baryassoc
