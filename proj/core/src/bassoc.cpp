#include "baryassoc/bassoc.hpp"

#include <stdexcept>
#include <string>

#include "baryassoc/error.hpp"

namespace baryassoc {

// ------------------------------------------------------------------ checker

std::vector<Split> splits_of(unsigned n) {
  std::vector<Split> out;
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned k = 1; a + k <= n; ++k) out.push_back({a, k, n - a - k});
  }
  return out;
}

Polynomial split_difference(const PolyFamily& family, const Split& split) {
  const unsigned n = split.arity();
  const RingId ring = family.ring();
  const Polynomial& outer = family.member(n);

  Assignment shift;
  for (unsigned i = 1; i <= split.k; ++i) {
    shift.emplace(i, Polynomial::variable(ring, split.a + i, n));
  }
  const Polynomial block = substitute(family.member(split.k), shift);

  Assignment assignment = identity_assignment(ring, n);
  for (unsigned i = split.a + 1; i <= split.a + split.k; ++i) assignment.insert_or_assign(i, block);
  return outer - substitute(outer, assignment);
}

std::optional<SplitWitness> first_violation_at_arity(const PolyFamily& family, unsigned n) {
  // A constant F_n makes both sides equal for every split.
  if (is_constant(family.member(n))) return std::nullopt;
  for (const Split& s : splits_of(n)) {
    Polynomial diff = split_difference(family, s);
    if (!diff.is_zero()) return SplitWitness{n, s, std::move(diff)};
  }
  return std::nullopt;
}

std::optional<SplitWitness> check_b_associative(const PolyFamily& family) {
  for (unsigned n = 1; n <= family.max_arity(); ++n) {
    if (auto w = first_violation_at_arity(family, n)) return w;
  }
  return std::nullopt;
}

// --------------------------------------------------------------- classifier

namespace {

std::optional<Classification> classify_structure(const PolyFamily& family) {
  const unsigned max_arity = family.max_arity();
  const RingId ring = family.ring();

  unsigned k = max_arity + 1;
  for (unsigned n = 1; n <= max_arity; ++n) {
    if (is_constant(family.member(n))) {
      k = n;
      break;
    }
  }
  std::vector<RingValue> tail;
  for (unsigned n = k; n <= max_arity; ++n) {
    if (!is_constant(family.member(n))) return std::nullopt;  // constancy propagates upward
    tail.push_back(constant_value(family.member(n)));
  }

  for (unsigned n = 1; n < k; ++n) {
    if (range_idempotence_class(family.member(n)).kind !=
        RangeIdempotenceClass::Kind::Idempotent) {
      return std::nullopt;
    }
  }

  if (k <= 2) return CaseI{std::nullopt, k, std::move(tail)};

  const Polynomial& f2 = family.member(2);
  const RingValue z = evaluate(f2, std::vector<RingValue>{RingValue::one(ring), RingValue::zero(ring)});

  if (total_degree(f2) == 1U) {
    if (f2 != weighted_mean(z, 2)) return std::nullopt;

    const RingId frac = fraction_field(ring);
    const RingValue z_frac = embed(z, frac);
    for (unsigned n = 3; n < k; ++n) {
      const RingValue d = delta(z_frac, n);
      if (d.is_zero()) return std::nullopt;
      if (weighted_mean(z_frac, n) != family.member(n).embed(frac)) return std::nullopt;
      // Descent: integral weights force Delta_n^z to be a unit of the base ring.
      if (!is_unit(descend(d, ring))) return std::nullopt;
    }
    const NOfZ nz = n_of_z(z, std::max(max_arity, 3U));
    if (nz.value && k > *nz.value) return std::nullopt;
    return CaseI{z, k, std::move(tail)};
  }

  // deg F_2 >= 2: no nonconstant member above arity 2.
  if (k != 3) return std::nullopt;
  auto q = divide_by_difference(f2 - Polynomial::variable(ring, 2, 2), 1, 2);
  if (!q) return std::nullopt;
  return CaseII{q->with_num_vars(2), std::move(tail)};
}

}  // namespace

Classification classify(const PolyFamily& family) {
  if (auto c = classify_structure(family)) return *c;
  auto witness = check_b_associative(family);
  if (!witness) {
    throw std::logic_error("classifier rejected a family the checker accepts");
  }
  return NotBAssociative{std::move(*witness)};
}

PolyFamily realize(const Classification& classification, RingId ring, unsigned max_arity) {
  if (const auto* c1 = std::get_if<CaseI>(&classification)) {
    std::vector<Polynomial> members;
    for (unsigned n = 1; n <= max_arity; ++n) {
      if (n >= c1->k) {
        members.push_back(Polynomial::constant(c1->tail.at(n - c1->k), n));
      } else if (n == 1) {
        members.push_back(Polynomial::variable(ring, 1, 1));
      } else {
        if (!c1->z) throw Error(ErrorCode::InvalidArgument, "CaseI with k > 2 needs z");
        members.push_back(weighted_mean(*c1->z, n));
      }
    }
    return PolyFamily(std::move(members));
  }
  if (const auto* c2 = std::get_if<CaseII>(&classification)) {
    return case_ii_family(c2->q, max_arity, c2->tail);
  }
  throw Error(ErrorCode::InvalidArgument, "cannot realize a non-B-associative classification");
}

// ------------------------------------------------------------ symmetric case

bool is_symmetric(const Polynomial& f) {
  for (unsigned i = 1; i < f.num_vars(); ++i) {
    if (swap_vars(f, i, i + 1) != f) return false;
  }
  return true;
}

SymmetricClassification classify_symmetric(const PolyFamily& family) {
  for (unsigned n = 1; n <= family.max_arity(); ++n) {
    if (!is_symmetric(family.member(n))) return NotSymmetric{n};
  }

  Classification c = classify(family);
  if (auto* nb = std::get_if<NotBAssociative>(&c)) return std::move(*nb);

  if (auto* c1 = std::get_if<CaseI>(&c)) {
    if (c1->k == 1) return AllConstant{std::move(c1->tail)};
    // A symmetric z*x1 + (1-z)*x2 forces z = 1/2.
    if (c1->z) {
      const RingId frac = fraction_field(family.ring());
      if (embed(*c1->z, frac) != RingValue(frac, mpq_class(1, 2))) {
        throw std::logic_error("symmetric case (i) family with z != 1/2");
      }
    }
    return CaseIHalf{c1->k, std::move(c1->tail)};
  }

  auto& c2 = std::get<CaseII>(c);
  const RingId frac = fraction_field(family.ring());
  const Polynomial half = Polynomial::constant(RingValue(frac, mpq_class(1, 2)), 2);
  Polynomial q = c2.q.embed(frac) - half;
  if (q.is_zero() || swap_vars(q, 1, 2) != -q) {
    throw std::logic_error("symmetric case (ii) family without antisymmetric Q");
  }
  if (auto down = q.descend(family.ring())) q = std::move(*down);
  return CaseIIAntisym{std::move(q), std::move(c2.tail)};
}

// ---------------------------------------------------------- binary reduction

Lemma3Report lemma3_diagnostic(const PolyFamily& family, unsigned n) {
  if (n < 2 || n >= family.max_arity()) {
    throw Error(ErrorCode::ArityOutOfRange,
                "diagnostic needs 2 <= n < max_arity, got n = " + std::to_string(n));
  }
  const Polynomial& next = family.member(n + 1);
  if (is_constant(next)) {
    throw Error(ErrorCode::ConstantMember, "F_" + std::to_string(n + 1) + " is constant");
  }
  const RingId ring = family.ring();
  const unsigned m = n + 1;
  auto var = [&](unsigned i, unsigned nv) { return Polynomial::variable(ring, i, nv); };

  Lemma3Report report;
  report.n = n;

  Assignment to_p;
  for (unsigned i = 1; i <= n; ++i) to_p.emplace(i, var(1, 2));
  to_p.emplace(m, var(2, 2));
  report.p = substitute(next, to_p);
  report.p_idempotent = is_idempotent(report.p);

  const Polynomial head = family.member(n).with_num_vars(m);  // F_n(x_1..x_n)
  Assignment shift;
  for (unsigned i = 1; i <= n; ++i) shift.emplace(i, var(i + 1, m));
  const Polynomial g = substitute(family.member(n), shift);  // F_n(x_2..x_{n+1})

  auto apply_p = [&](const Polynomial& first, const Polynomial& second) {
    return substitute(report.p, {{1, first}, {2, second}});
  };

  report.eq_reconstruction_holds = apply_p(head, var(m, m)) == next;

  Assignment inner;
  inner.emplace(1, var(1, m));
  for (unsigned i = 2; i <= n; ++i) inner.emplace(i, g);
  report.eq_inner_substitution_holds = apply_p(substitute(family.member(n), inner), g) == next;

  Assignment fixed;
  fixed.emplace(1, g);
  for (unsigned i = 2; i <= n; ++i) fixed.emplace(i, var(i, m));
  report.eq_fixed_point_holds = apply_p(substitute(family.member(n), fixed), var(m, m)) == g;

  return report;
}

}  // namespace baryassoc
