#include "baryassoc/poly.hpp"

#include <algorithm>

#include "baryassoc/error.hpp"

namespace baryassoc {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [var, exp] : factors) {
    if (var == 0) throw Error(ErrorCode::InvalidArgument, "variable index 0");
    if (exp == 0) continue;
    if (!factors_.empty() && factors_.back().first == var) {
      factors_.back().second += exp;
    } else {
      factors_.emplace_back(var, exp);
    }
  }
}

Monomial Monomial::variable(unsigned var, unsigned exponent) {
  return Monomial({{var, exponent}});
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::degree_in(unsigned var) const {
  for (const auto& [v, e] : factors_) {
    if (v == var) return e;
  }
  return 0;
}

unsigned Monomial::max_var() const {
  return factors_.empty() ? 0 : factors_.back().first;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      out.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::strong_ordering graded_lex(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    // The side holding the smaller variable index has a positive exponent
    // where the other has zero.
    if (fa[i].first != fb[j].first) {
      return fa[i].first < fb[j].first ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
    }
    if (fa[i].second != fb[j].second) return fa[i].second <=> fb[j].second;
    ++i;
    ++j;
  }
  if (i < fa.size()) return std::strong_ordering::greater;
  if (j < fb.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// -------------------------------------------------------------- Polynomial

namespace {

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (f.ring() != g.ring()) {
    throw Error(ErrorCode::RingMismatch,
                "polynomial ring mismatch: " + std::string(ring_name(f.ring())) +
                    " vs " + std::string(ring_name(g.ring())));
  }
}

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (const auto& [var, exp] : m.factors()) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(var);
    if (exp > 1) out += '^' + std::to_string(exp);
  }
  return out;
}

std::string render_term(const Monomial& m, const RingValue& c) {
  bool compound = sgn(c.real()) != 0 && sgn(c.imag()) != 0;
  std::string lit = compound ? "(" + c.to_string() + ")" : c.to_string();
  if (m.is_constant()) return lit;
  std::string mono = render_monomial(m);
  if (c.is_one()) return mono;
  if ((-c).is_one()) return "-" + mono;
  return lit + "*" + mono;
}

}  // namespace

Polynomial Polynomial::constant(const RingValue& c, unsigned num_vars) {
  Polynomial p(c.ring(), num_vars);
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(RingId ring, unsigned var, unsigned num_vars) {
  if (var == 0 || var > num_vars) {
    throw Error(ErrorCode::InvalidArgument,
                "variable x" + std::to_string(var) + " outside x1..x" +
                    std::to_string(num_vars));
  }
  Polynomial p(ring, num_vars);
  p.terms_.emplace(Monomial::variable(var), RingValue::one(ring));
  return p;
}

Polynomial Polynomial::from_terms(RingId ring, unsigned num_vars,
                                  std::vector<std::pair<Monomial, RingValue>> terms) {
  Polynomial p(ring, num_vars);
  for (auto& [m, c] : terms) {
    if (m.max_var() > num_vars) {
      throw Error(ErrorCode::InvalidArgument,
                  "monomial uses x" + std::to_string(m.max_var()) + " beyond x" +
                      std::to_string(num_vars));
    }
    if (c.ring() != ring) throw Error(ErrorCode::RingMismatch, "coefficient ring mismatch");
    p.add_term(m, c);
  }
  return p;
}

void Polynomial::add_term(const Monomial& m, const RingValue& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RingValue Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RingValue::zero(ring_) : it->second;
}

Polynomial Polynomial::with_num_vars(unsigned num_vars) const {
  for (const auto& [m, c] : terms_) {
    if (m.max_var() > num_vars) {
      throw Error(ErrorCode::InvalidArgument,
                  "polynomial uses x" + std::to_string(m.max_var()) +
                      ", cannot restrict to " + std::to_string(num_vars) + " variables");
    }
  }
  Polynomial out = *this;
  out.num_vars_ = num_vars;
  return out;
}

Polynomial Polynomial::embed(RingId ring) const {
  Polynomial out(ring, num_vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, baryassoc::embed(c, ring));
  return out;
}

std::optional<Polynomial> Polynomial::descend(RingId ring) const {
  Polynomial out(ring, num_vars_);
  for (const auto& [m, c] : terms_) {
    if (!is_in_base_ring(c, ring)) return std::nullopt;
    out.terms_.emplace(m, baryassoc::descend(c, ring));
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_ring(*this, rhs);
  num_vars_ = std::max(num_vars_, rhs.num_vars_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_ring(*this, rhs);
  num_vars_ = std::max(num_vars_, rhs.num_vars_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  require_same_ring(lhs, rhs);
  Polynomial out(lhs.ring_, std::max(lhs.num_vars_, rhs.num_vars_));
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string term = render_term(m, c);
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

Polynomial p_add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial p_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial p_scale(const RingValue& c, const Polynomial& f) {
  if (c.ring() != f.ring()) throw Error(ErrorCode::RingMismatch, "scalar ring mismatch");
  return Polynomial::constant(c, f.num_vars()) * f;
}

Polynomial pow(const Polynomial& f, unsigned exponent) {
  Polynomial acc = Polynomial::constant(RingValue::one(f.ring()), f.num_vars());
  Polynomial base = f;
  while (exponent > 0) {
    if (exponent & 1U) acc = acc * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return acc;
}

// ------------------------------------------------------------ substitution

Polynomial substitute(const Polynomial& f, const Assignment& assignment) {
  unsigned num_vars = 0;
  for (const auto& [var, g] : assignment) {
    if (g.ring() != f.ring()) {
      throw Error(ErrorCode::RingMismatch,
                  "assignment for x" + std::to_string(var) + " is over another ring");
    }
    num_vars = std::max(num_vars, g.num_vars());
  }

  // powers[var][e-1] = assignment[var]^e, grown on demand.
  std::map<unsigned, std::vector<Polynomial>> powers;
  auto power_of = [&](unsigned var, unsigned exp) -> const Polynomial& {
    auto it = assignment.find(var);
    if (it == assignment.end()) {
      throw Error(ErrorCode::MissingAssignment, "no assignment for x" + std::to_string(var));
    }
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(it->second);
    while (cache.size() < exp) cache.push_back(cache.back() * it->second);
    return cache[exp - 1];
  };

  Polynomial out(f.ring(), num_vars);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(c, num_vars);
    for (const auto& [var, exp] : m.factors()) term = term * power_of(var, exp);
    out += term;
  }
  return out;
}

Assignment identity_assignment(RingId ring, unsigned num_vars) {
  Assignment a;
  for (unsigned i = 1; i <= num_vars; ++i) a.emplace(i, Polynomial::variable(ring, i, num_vars));
  return a;
}

// ---------------------------------------------------------------- queries

Degree total_degree(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  // Terms are sorted by total degree first.
  return f.terms().begin()->first.total_degree();
}

Degree degree_in_var(const Polynomial& f, unsigned var) {
  if (f.is_zero()) return std::nullopt;
  unsigned d = 0;
  for (const auto& [m, c] : f.terms()) d = std::max(d, m.degree_in(var));
  return d;
}

bool is_constant(const Polynomial& f) {
  return f.is_zero() || (f.terms().size() == 1 && f.terms().begin()->first.is_constant());
}

RingValue constant_value(const Polynomial& f) {
  if (!is_constant(f)) {
    throw Error(ErrorCode::NotConstant, "polynomial " + f.to_string() + " is not constant");
  }
  return f.coefficient(Monomial());
}

Polynomial diagonal(const Polynomial& f) {
  Polynomial x = Polynomial::variable(f.ring(), 1, 1);
  Assignment a;
  for (unsigned i = 1; i <= f.num_vars(); ++i) a.emplace(i, x);
  if (a.empty()) a.emplace(1, x);
  return substitute(f, a);
}

bool is_idempotent(const Polynomial& f) {
  return diagonal(f) == Polynomial::variable(f.ring(), 1, 1);
}

bool is_range_idempotent(const Polynomial& f) {
  Polynomial delta = diagonal(f);
  if (substitute(delta, {{1, delta}}) != delta) return false;
  return substitute(delta, {{1, f}}) == f;
}

RangeIdempotenceClass range_idempotence_class(const Polynomial& f) {
  using Kind = RangeIdempotenceClass::Kind;
  if (!is_range_idempotent(f)) return {Kind::Neither, std::nullopt};
  if (is_constant(f)) return {Kind::Constant, constant_value(f)};
  return {Kind::Idempotent, std::nullopt};
}

std::optional<Polynomial> divide_by_difference(const Polynomial& r, unsigned i, unsigned j) {
  if (i == j || i == 0 || j == 0) {
    throw Error(ErrorCode::InvalidArgument, "divide_by_difference needs distinct variables");
  }
  unsigned num_vars = std::max({r.num_vars(), i, j});
  if (r.is_zero()) return Polynomial(r.ring(), num_vars);

  // r = sum_k coeffs[k] * x_i^k with coeffs free of x_i.
  std::map<unsigned, Polynomial> coeffs;
  for (const auto& [m, c] : r.terms()) {
    std::vector<Monomial::Factor> rest;
    unsigned k = 0;
    for (const auto& f : m.factors()) {
      if (f.first == i) {
        k = f.second;
      } else {
        rest.push_back(f);
      }
    }
    auto [it, _] = coeffs.try_emplace(k, r.ring(), num_vars);
    it->second += Polynomial::from_terms(r.ring(), num_vars, {{Monomial(rest), c}});
  }
  auto coeff = [&](unsigned k) {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? Polynomial(r.ring(), num_vars) : it->second;
  };

  // Synthetic division by the monic (x_i - x_j).
  const unsigned d = coeffs.rbegin()->first;
  const Polynomial xj = Polynomial::variable(r.ring(), j, num_vars);
  std::vector<Polynomial> q(d, Polynomial(r.ring(), num_vars));
  if (d > 0) {
    q[d - 1] = coeff(d);
    for (unsigned k = d - 1; k >= 1; --k) q[k - 1] = coeff(k) + xj * q[k];
  }
  Polynomial remainder = coeff(0);
  if (d > 0) remainder += xj * q[0];
  if (!remainder.is_zero()) return std::nullopt;

  Polynomial out(r.ring(), num_vars);
  for (unsigned k = 0; k < d; ++k) {
    out += q[k] * pow(Polynomial::variable(r.ring(), i, num_vars), k);
  }
  return out;
}

RingValue evaluate(const Polynomial& f, std::span<const RingValue> point) {
  if (point.size() != f.num_vars()) {
    throw Error(ErrorCode::ArityMismatch,
                "point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                    std::to_string(f.num_vars()) + " variables");
  }
  for (const auto& v : point) {
    if (v.ring() != f.ring()) throw Error(ErrorCode::RingMismatch, "point coordinate ring mismatch");
  }
  RingValue sum = RingValue::zero(f.ring());
  for (const auto& [m, c] : f.terms()) {
    RingValue term = c;
    for (const auto& [var, exp] : m.factors()) term *= pow(point[var - 1], exp);
    sum += term;
  }
  return sum;
}

Polynomial swap_vars(const Polynomial& f, unsigned i, unsigned j) {
  unsigned n = std::max({f.num_vars(), i, j});
  Assignment a = identity_assignment(f.ring(), n);
  a.insert_or_assign(i, Polynomial::variable(f.ring(), j, n));
  a.insert_or_assign(j, Polynomial::variable(f.ring(), i, n));
  return substitute(f, a);
}

}  // namespace baryassoc
