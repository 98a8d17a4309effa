#pragma once

/// @file oracle.hpp
/// Checks that do not go through the symbolic checker's substitution path:
/// randomized point evaluation of the B-associativity identity, and an
/// exhaustive sweep over small-coefficient families.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "baryassoc/bassoc.hpp"
#include "baryassoc/family.hpp"
#include "baryassoc/ring.hpp"

namespace baryassoc {

/// Random coordinates are integers drawn uniformly from [-kSampleBox, kSampleBox].
inline constexpr long kSampleBox = 1'000'000;

std::vector<RingValue> random_point(RingId ring, unsigned size, std::mt19937_64& rng);

struct PointViolation {
  unsigned arity = 0;
  Split split;
  std::vector<RingValue> point;
  RingValue lhs;
  RingValue rhs;
};

/// Evaluates both sides of the identity for one split at one point.
/// Returns (lhs, rhs).
std::pair<RingValue, RingValue> evaluate_split(const PolyFamily& family, const Split& split,
                                               const std::vector<RingValue>& point);

/// Draws `trials` (arity, split, point) triples and compares exact
/// evaluations. nullopt means no violation was found, which is evidence
/// only; a returned violation is a definitive refutation.
std::optional<PointViolation> sample_check(const PolyFamily& family, unsigned trials,
                                           std::uint64_t seed);

struct AgreementEntry {
  bool symbolic_ok = false;
  bool sample_consistent = false;
  /// For a symbolic failure: a point where the witness difference is nonzero.
  std::optional<std::vector<RingValue>> witness_point;
  bool agree = false;
};

struct AgreementReport {
  std::vector<AgreementEntry> entries;
  std::size_t disagreements = 0;
};

/// Symbolic Ok must come with a consistent sample run; a symbolic witness
/// must evaluate nonzero somewhere (10 rounds of 100 random points).
AgreementReport checker_oracle_agreement(const std::vector<PolyFamily>& corpus, unsigned trials,
                                         std::uint64_t seed);

// ------------------------------------------------------------ exhaustive sweep

struct SearchConfig {
  RingId ring = RingId::Int;
  unsigned max_arity = 2;
  unsigned max_total_degree = 1;
  std::vector<RingValue> coefficient_pool;
  std::uint64_t seed = 0;
  /// Optional per-arity degree caps (entry n-1 for arity n); overrides
  /// max_total_degree where given.
  std::vector<unsigned> max_degree_per_arity;
  /// Lifts the candidate-count guard.
  bool allow_large = false;

  unsigned degree_cap(unsigned arity) const;
};

inline constexpr std::uint64_t kSearchGuard = 100'000'000;

struct FoundFamily {
  PolyFamily family;
  Classification classification;
};

struct Mismatch {
  PolyFamily family;
  std::string reason;
};

struct SearchReport {
  /// Size of the full candidate space, |pool|^(coefficient slots).
  std::uint64_t total_enumerated = 0;
  /// Arity-level identity checks actually run after prefix pruning.
  std::uint64_t arity_checks = 0;
  std::vector<FoundFamily> b_associative;
  std::vector<Mismatch> mismatches;
};

/// Every monomial in x1..x_arity of total degree <= degree, largest first.
std::vector<Monomial> monomials_up_to(unsigned arity, unsigned degree);

/// Throws Error(InvalidArgument) for a malformed config and
/// Error(SearchSpaceTooLarge) above kSearchGuard without allow_large.
/// The report does not depend on `jobs`.
SearchReport exhaustive_search(const SearchConfig& config, unsigned jobs = 1);

/// Reads the JSON form: {"ring": "int", "max_arity": 3, "max_total_degree": 1,
/// "coefficient_pool": ["-2", "1/2", ...], "seed": 0,
/// "max_degree_per_arity": [1, 1, 0], "allow_large": false}.
SearchConfig parse_search_config(const std::string& json_text);

}  // namespace baryassoc
