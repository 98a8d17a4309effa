#pragma once

/// @file family.hpp
/// *-ary polynomial families and the weighted arithmetic means M^z.

#include <optional>
#include <span>
#include <vector>

#include "baryassoc/poly.hpp"
#include "baryassoc/ring.hpp"

namespace baryassoc {

/// One polynomial per arity 1..max_arity; member(n) uses only x1..xn.
/// There is no arity-0 member.
class PolyFamily {
 public:
  /// Members are given for arities 1, 2, ... in order. Throws
  /// Error(InvalidArgument) for an empty list or a member using a variable
  /// beyond its arity, Error(RingMismatch) for mixed rings.
  explicit PolyFamily(std::vector<Polynomial> members);

  RingId ring() const { return members_.front().ring(); }
  unsigned max_arity() const { return static_cast<unsigned>(members_.size()); }
  /// 1-based.
  const Polynomial& member(unsigned arity) const;
  const std::vector<Polynomial>& members() const { return members_; }

  /// The same family with arities above `arity` dropped.
  PolyFamily prefix(unsigned arity) const;
  /// Coefficient-wise embedding into a ring containing this one.
  PolyFamily embed(RingId ring) const;

  friend bool operator==(const PolyFamily&, const PolyFamily&) = default;

 private:
  std::vector<Polynomial> members_;
};

/// Result of the bounded n(z) search. `value` is empty when every
/// Delta_n^z with n <= bound is a unit; n(z) may then be infinite.
struct NOfZ {
  std::optional<unsigned> value;
  unsigned bound = 0;

  bool above_bound() const { return !value.has_value(); }
  friend bool operator==(const NOfZ&, const NOfZ&) = default;
};

inline constexpr unsigned kDefaultNOfZBound = 64;

/// Delta_n^z = sum_{i=1..n} z^{n-i} (1-z)^{i-1}, computed with
/// Delta_1 = 1 and Delta_{n+1} = (1-z) Delta_n + z^n.
RingValue delta(const RingValue& z, unsigned n);
/// Delta_1^z .. Delta_count^z.
std::vector<RingValue> delta_sequence(const RingValue& z, unsigned count);

/// Least n <= bound whose Delta_n^z is not a unit of z's ring.
NOfZ n_of_z(const RingValue& z, unsigned bound = kDefaultNOfZBound);

struct DeltaReport {
  RingValue z;
  std::vector<RingValue> values;  // Delta_1 .. Delta_N
  NOfZ n_of_z;
};
DeltaReport delta_report(const RingValue& z, unsigned max_n);

/// M_n^z(x) = (Delta_n^z)^{-1} sum_i z^{n-i} (1-z)^{i-1} x_i.
/// Throws Error(DeltaNotInvertible) when Delta_n^z is not a unit.
Polynomial weighted_mean(const RingValue& z, unsigned n);

/// Family whose member n is M_n^z below n(z) and tail[n - n(z)] from n(z)
/// on. `tail` must hold exactly one constant per arity in [n(z), max_arity].
PolyFamily mz_family(const RingValue& z, unsigned max_arity, std::span<const RingValue> tail);

/// A member of the truncation class [F]_k: arities below k are kept, arity
/// n >= k becomes the constant constants[n - k].
PolyFamily truncate(const PolyFamily& family, unsigned k, std::span<const RingValue> constants);

/// F_1 = x1, F_2 = Q x1 + (1 - Q) x2, F_n = tail[n - 3] for n >= 3.
/// Throws Error(DegreeTooLow) for constant Q.
PolyFamily case_ii_family(const Polynomial& q, unsigned max_arity, std::span<const RingValue> tail);

}  // namespace baryassoc
