#pragma once

/// @file bassoc.hpp
/// Barycentric associativity: the symbolic checker, the classifier into the
/// two families of B-associative polynomial functions, the symmetric
/// specialization and the binary-reduction diagnostic.
///
/// A family F is B-associative when, for every arity n and every split
/// n = a + k + c with k >= 1,
///
///   F_n(x_1..x_n) = F_n(x_1..x_a, k copies of F_k(x_{a+1}..x_{a+k}), x_{a+k+1}..x_n).
///
/// Both sides are polynomials over an infinite integral domain, so each
/// instance is decided exactly by comparing term maps.

#include <optional>
#include <variant>
#include <vector>

#include "baryassoc/family.hpp"
#include "baryassoc/poly.hpp"
#include "baryassoc/ring.hpp"

namespace baryassoc {

/// Positions of the replaced block: a arguments before it, k inside, c after.
struct Split {
  unsigned a = 0;
  unsigned k = 0;
  unsigned c = 0;

  unsigned arity() const { return a + k + c; }
  friend auto operator<=>(const Split&, const Split&) = default;
};

struct SplitWitness {
  unsigned arity = 0;
  Split split;
  /// F_n(x) - F_n(x_1..x_a, k*F_k(block), x_{a+k+1}..x_n); never zero.
  Polynomial difference;

  friend bool operator==(const SplitWitness&, const SplitWitness&) = default;
};

/// All splits of arity n with k >= 1, in canonical order (a, then k).
std::vector<Split> splits_of(unsigned n);

/// Left side minus right side of the identity for one split.
Polynomial split_difference(const PolyFamily& family, const Split& split);

/// First failing split of arity n, if any. Only members 1..n are read.
std::optional<SplitWitness> first_violation_at_arity(const PolyFamily& family, unsigned n);

/// Checks every split of every arity up to max_arity. Returns the first
/// failure in canonical order (ascending n, a, k), or nullopt when the
/// family is B-associative up to its maximal arity.
std::optional<SplitWitness> check_b_associative(const PolyFamily& family);

// ------------------------------------------------------------ classification

/// F is in [M^z]_k. `z` is absent when k <= 2, where every z gives the same
/// class. k = max_arity + 1 when no member is constant.
struct CaseI {
  std::optional<RingValue> z;
  unsigned k = 0;
  std::vector<RingValue> tail;  // constants of arities k..max_arity

  friend bool operator==(const CaseI&, const CaseI&) = default;
};

/// F_1 = x1, F_2 = Q x1 + (1 - Q) x2 with deg Q >= 1, constants from arity 3.
struct CaseII {
  Polynomial q;
  std::vector<RingValue> tail;  // constants of arities 3..max_arity

  friend bool operator==(const CaseII&, const CaseII&) = default;
};

struct NotBAssociative {
  SplitWitness witness;

  friend bool operator==(const NotBAssociative&, const NotBAssociative&) = default;
};

using Classification = std::variant<CaseI, CaseII, NotBAssociative>;

/// Decides which case of the classification F falls into, up to its
/// maximal arity. Over Z and Z[i] the comparison with M_n^z runs in the
/// fraction field and then requires every Delta_n^z below k to be a unit of
/// the base ring. Never disagrees with check_b_associative.
Classification classify(const PolyFamily& family);

/// Rebuilds the family described by a CaseI or CaseII classification.
/// Throws Error(InvalidArgument) for NotBAssociative.
PolyFamily realize(const Classification& classification, RingId ring, unsigned max_arity);

// ------------------------------------------------------------- symmetric case

struct AllConstant {
  std::vector<RingValue> tail;  // constants of arities 1..max_arity
  friend bool operator==(const AllConstant&, const AllConstant&) = default;
};

/// F in [M^{1/2}]_k with k >= 2.
struct CaseIHalf {
  unsigned k = 0;
  std::vector<RingValue> tail;
  friend bool operator==(const CaseIHalf&, const CaseIHalf&) = default;
};

/// F_2 = (x1 + x2)/2 + (x1 - x2) Q with Q nonzero and antisymmetric.
struct CaseIIAntisym {
  Polynomial q;
  std::vector<RingValue> tail;
  friend bool operator==(const CaseIIAntisym&, const CaseIIAntisym&) = default;
};

struct NotSymmetric {
  unsigned arity = 0;
  friend bool operator==(const NotSymmetric&, const NotSymmetric&) = default;
};

using SymmetricClassification =
    std::variant<AllConstant, CaseIHalf, CaseIIAntisym, NotBAssociative, NotSymmetric>;

/// Invariance under every adjacent transposition of x1..xn.
bool is_symmetric(const Polynomial& f);

SymmetricClassification classify_symmetric(const PolyFamily& family);

// ----------------------------------------------------------- binary reduction

/// For P(x, y) = F_{n+1}(n*x, y), whether the three identities a
/// B-associative family must satisfy hold:
///   reconstruction     F_{n+1}(x) = P(F_n(x_1..x_n), x_{n+1})
///   inner substitution F_{n+1}(x) = P(F_n(x_1, (n-1)*G), G)
///   fixed point        P(F_n(G, x_2..x_n), x_{n+1}) = G
/// where G = F_n(x_2..x_{n+1}).
struct Lemma3Report {
  unsigned n = 0;
  Polynomial p;
  bool p_idempotent = false;
  bool eq_reconstruction_holds = false;
  bool eq_inner_substitution_holds = false;
  bool eq_fixed_point_holds = false;

  bool all_hold() const {
    return eq_reconstruction_holds && eq_inner_substitution_holds && eq_fixed_point_holds;
  }
};

/// Requires 2 <= n < max_arity (Error ArityOutOfRange) and a nonconstant
/// F_{n+1} (Error ConstantMember).
Lemma3Report lemma3_diagnostic(const PolyFamily& family, unsigned n);

}  // namespace baryassoc
