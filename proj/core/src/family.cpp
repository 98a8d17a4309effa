#include "baryassoc/family.hpp"

#include <algorithm>
#include <string>

#include "baryassoc/error.hpp"

namespace baryassoc {

namespace {

void require_tail_length(std::size_t got, std::size_t want) {
  if (got != want) {
    throw Error(ErrorCode::TailLengthMismatch,
                "expected " + std::to_string(want) + " tail constants, got " + std::to_string(got));
  }
}

Polynomial constant_member(const RingValue& c, RingId ring, unsigned arity) {
  if (c.ring() != ring) throw Error(ErrorCode::RingMismatch, "tail constant from another ring");
  return Polynomial::constant(c, arity);
}

}  // namespace

PolyFamily::PolyFamily(std::vector<Polynomial> members) : members_(std::move(members)) {
  if (members_.empty()) throw Error(ErrorCode::InvalidArgument, "a family needs at least arity 1");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const auto arity = static_cast<unsigned>(i + 1);
    if (members_[i].ring() != members_.front().ring()) {
      throw Error(ErrorCode::RingMismatch, "family members over different rings");
    }
    for (const auto& [m, c] : members_[i].terms()) {
      if (m.max_var() > arity) {
        throw Error(ErrorCode::ArityMismatch, "F_" + std::to_string(arity) + " uses x" + std::to_string(m.max_var()));
      }
    }
    members_[i] = members_[i].with_num_vars(arity);
  }
}

const Polynomial& PolyFamily::member(unsigned arity) const {
  if (arity == 0 || arity > members_.size()) {
    throw Error(ErrorCode::ArityOutOfRange, "no member of arity " + std::to_string(arity));
  }
  return members_[arity - 1];
}

PolyFamily PolyFamily::prefix(unsigned arity) const {
  if (arity == 0 || arity > members_.size()) {
    throw Error(ErrorCode::ArityOutOfRange, "prefix arity " + std::to_string(arity));
  }
  return PolyFamily(std::vector<Polynomial>(members_.begin(), members_.begin() + arity));
}

PolyFamily PolyFamily::embed(RingId ring) const {
  std::vector<Polynomial> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.embed(ring));
  return PolyFamily(std::move(out));
}

std::vector<RingValue> delta_sequence(const RingValue& z, unsigned count) {
  std::vector<RingValue> values;
  if (count == 0) return values;
  values.reserve(count);
  const RingValue one_minus_z = RingValue::one(z.ring()) - z;
  RingValue z_pow = z;  // z^n for the step producing Delta_{n+1}
  values.push_back(RingValue::one(z.ring()));
  while (values.size() < count) {
    values.push_back(one_minus_z * values.back() + z_pow);
    z_pow *= z;
  }
  return values;
}

RingValue delta(const RingValue& z, unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "delta needs n >= 1");
  return delta_sequence(z, n).back();
}

NOfZ n_of_z(const RingValue& z, unsigned bound) {
  if (bound < 3) throw Error(ErrorCode::InvalidArgument, "n(z) search bound must be >= 3");
  const auto values = delta_sequence(z, bound);
  for (unsigned n = 1; n <= bound; ++n) {
    if (!is_unit(values[n - 1])) return {n, bound};
  }
  return {std::nullopt, bound};
}

DeltaReport delta_report(const RingValue& z, unsigned max_n) {
  return {z, delta_sequence(z, max_n), n_of_z(z, std::max(max_n, 3U))};
}

Polynomial weighted_mean(const RingValue& z, unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "weighted_mean needs n >= 1");
  const RingId ring = z.ring();
  auto inv = try_invert(delta(z, n));
  if (!inv) {
    throw Error(ErrorCode::DeltaNotInvertible,
                "Delta_" + std::to_string(n) + "^z is not a unit for z = " + z.to_string());
  }
  const RingValue one_minus_z = RingValue::one(ring) - z;
  Polynomial out(ring, n);
  for (unsigned i = 1; i <= n; ++i) {
    RingValue weight = *inv * pow(z, n - i) * pow(one_minus_z, i - 1);
    out += p_scale(weight, Polynomial::variable(ring, i, n));
  }
  return out;
}

PolyFamily mz_family(const RingValue& z, unsigned max_arity, std::span<const RingValue> tail) {
  if (max_arity == 0) throw Error(ErrorCode::InvalidArgument, "max_arity must be >= 1");
  const NOfZ nz = n_of_z(z, std::max(max_arity, 3U));
  const unsigned first_constant =
      nz.value && *nz.value <= max_arity ? *nz.value : max_arity + 1;
  require_tail_length(tail.size(), max_arity + 1 - first_constant);

  std::vector<Polynomial> members;
  for (unsigned n = 1; n <= max_arity; ++n) {
    if (n < first_constant) {
      members.push_back(weighted_mean(z, n));
    } else {
      members.push_back(constant_member(tail[n - first_constant], z.ring(), n));
    }
  }
  return PolyFamily(std::move(members));
}

PolyFamily truncate(const PolyFamily& family, unsigned k, std::span<const RingValue> constants) {
  const unsigned max_arity = family.max_arity();
  if (k == 0 || k > max_arity + 1) {
    throw Error(ErrorCode::InvalidArgument, "truncation index k must lie in [1, max_arity + 1]");
  }
  require_tail_length(constants.size(), max_arity + 1 - k);
  std::vector<Polynomial> members;
  for (unsigned n = 1; n <= max_arity; ++n) {
    members.push_back(n < k ? family.member(n)
                            : constant_member(constants[n - k], family.ring(), n));
  }
  return PolyFamily(std::move(members));
}

PolyFamily case_ii_family(const Polynomial& q, unsigned max_arity, std::span<const RingValue> tail) {
  if (max_arity < 2) throw Error(ErrorCode::InvalidArgument, "case (ii) families need max_arity >= 2");
  const Degree deg = total_degree(q);
  if (!deg || *deg < 1) {
    throw Error(ErrorCode::DegreeTooLow, "case (ii) needs Q of degree >= 1, got " + q.to_string());
  }
  require_tail_length(tail.size(), max_arity - 2);

  const RingId ring = q.ring();
  const Polynomial q2 = q.with_num_vars(2);
  const Polynomial x1 = Polynomial::variable(ring, 1, 2);
  const Polynomial x2 = Polynomial::variable(ring, 2, 2);
  const Polynomial one = Polynomial::constant(RingValue::one(ring), 2);

  std::vector<Polynomial> members;
  members.push_back(Polynomial::variable(ring, 1, 1));
  members.push_back(q2 * x1 + (one - q2) * x2);
  for (unsigned n = 3; n <= max_arity; ++n) members.push_back(constant_member(tail[n - 3], ring, n));
  return PolyFamily(std::move(members));
}

}  // namespace baryassoc
