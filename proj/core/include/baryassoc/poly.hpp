#pragma once

/// @file poly.hpp
/// Sparse multivariate polynomials over a RingValue ring, in positional
/// variables x1..xn.
///
/// Because every supported ring is an infinite integral domain, two
/// polynomials define the same function exactly when their term maps agree,
/// so structural equality is functional equality.

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "baryassoc/ring.hpp"

namespace baryassoc {

/// nullopt stands for the degree of the zero polynomial (minus infinity).
using Degree = std::optional<unsigned>;

/// A power product x_{v1}^{e1} ... x_{vm}^{em}, stored sparsely with strictly
/// increasing variable indices (1-based) and positive exponents.
class Monomial {
 public:
  using Factor = std::pair<unsigned, unsigned>;  // (variable, exponent)

  Monomial() = default;
  /// Accepts factors in any order; merges repeated variables and drops
  /// zero exponents. Variable 0 is rejected.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial variable(unsigned var, unsigned exponent = 1);

  std::span<const Factor> factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }
  unsigned total_degree() const;
  unsigned degree_in(unsigned var) const;
  /// Largest variable index used; 0 for the constant monomial.
  unsigned max_var() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic comparison: total degree first, then the exponent
/// vectors (e1, e2, ...) lexicographically, so x1 > x2 > ... > xn.
std::strong_ordering graded_lex(const Monomial& a, const Monomial& b);

/// Orders terms from the largest monomial down.
struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return graded_lex(a, b) > 0;
  }
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, RingValue, GradedLexDescending>;

  /// The zero polynomial of Z in zero variables.
  Polynomial() = default;
  /// The zero polynomial.
  Polynomial(RingId ring, unsigned num_vars) : ring_(ring), num_vars_(num_vars) {}

  static Polynomial constant(const RingValue& c, unsigned num_vars);
  static Polynomial variable(RingId ring, unsigned var, unsigned num_vars);
  /// Builds from (monomial, coefficient) pairs; zero coefficients are dropped
  /// and repeated monomials summed.
  static Polynomial from_terms(RingId ring, unsigned num_vars,
                               std::vector<std::pair<Monomial, RingValue>> terms);

  RingId ring() const { return ring_; }
  unsigned num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of `m`, zero when absent.
  RingValue coefficient(const Monomial& m) const;

  /// Same polynomial viewed in more variables. Throws Error(InvalidArgument)
  /// if a used variable would fall outside the new range.
  Polynomial with_num_vars(unsigned num_vars) const;
  /// Coefficient-wise embedding into a ring containing this one.
  Polynomial embed(RingId ring) const;
  /// Coefficient-wise descent; nullopt if some coefficient lies outside `ring`.
  std::optional<Polynomial> descend(RingId ring) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const RingValue& c);

  RingId ring_ = RingId::Int;
  unsigned num_vars_ = 0;
  TermMap terms_;
};

Polynomial p_add(const Polynomial& f, const Polynomial& g);
Polynomial p_mul(const Polynomial& f, const Polynomial& g);
Polynomial p_scale(const RingValue& c, const Polynomial& f);
Polynomial pow(const Polynomial& f, unsigned exponent);

using Assignment = std::map<unsigned, Polynomial>;

/// Replaces each variable x_i of f by assignment[i]. Every variable that
/// occurs in f needs an entry (Error MissingAssignment otherwise); the
/// result lives in the largest num_vars among the assigned polynomials.
Polynomial substitute(const Polynomial& f, const Assignment& assignment);

/// Assignment x_i -> x_i for i in 1..num_vars.
Assignment identity_assignment(RingId ring, unsigned num_vars);

Degree total_degree(const Polynomial& f);
Degree degree_in_var(const Polynomial& f, unsigned var);

bool is_constant(const Polynomial& f);
/// Throws Error(NotConstant) unless is_constant(f).
RingValue constant_value(const Polynomial& f);

/// delta_f(x1) = f(x1, x1, ..., x1), as a polynomial in one variable.
Polynomial diagonal(const Polynomial& f);
bool is_idempotent(const Polynomial& f);
/// delta_f o delta_f = delta_f and delta_f o f = f.
bool is_range_idempotent(const Polynomial& f);

struct RangeIdempotenceClass {
  enum class Kind { Constant, Idempotent, Neither };
  Kind kind;
  std::optional<RingValue> constant;  // set for Kind::Constant
};
/// Range-idempotent polynomial functions are constant or idempotent; this
/// reports which, or Neither when f is not range-idempotent.
RangeIdempotenceClass range_idempotence_class(const Polynomial& f);

/// Exact quotient q with r = (x_i - x_j) q, or nullopt when r does not
/// vanish on the hyperplane x_i = x_j.
std::optional<Polynomial> divide_by_difference(const Polynomial& r, unsigned i,
                                               unsigned j);

/// Throws Error(ArityMismatch) if point.size() != num_vars, and
/// Error(RingMismatch) if a coordinate is from another ring.
RingValue evaluate(const Polynomial& f, std::span<const RingValue> point);

/// The polynomial with x_i and x_j exchanged.
Polynomial swap_vars(const Polynomial& f, unsigned i, unsigned j);

}  // namespace baryassoc
