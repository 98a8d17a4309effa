#include "baryassoc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include <json.hpp>

#include "baryassoc/error.hpp"
#include "baryassoc/text.hpp"

namespace baryassoc {

std::vector<RingValue> random_point(RingId ring, unsigned size, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coord(-kSampleBox, kSampleBox);
  std::vector<RingValue> point;
  point.reserve(size);
  for (unsigned i = 0; i < size; ++i) point.emplace_back(ring, coord(rng));
  return point;
}

std::pair<RingValue, RingValue> evaluate_split(const PolyFamily& family, const Split& split,
                                               const std::vector<RingValue>& point) {
  const unsigned n = split.arity();
  RingValue lhs = evaluate(family.member(n), point);
  std::vector<RingValue> block(point.begin() + split.a, point.begin() + split.a + split.k);
  const RingValue inner = evaluate(family.member(split.k), block);
  std::vector<RingValue> replaced = point;
  std::fill(replaced.begin() + split.a, replaced.begin() + split.a + split.k, inner);
  return {std::move(lhs), evaluate(family.member(n), replaced)};
}

std::optional<PointViolation> sample_check(const PolyFamily& family, unsigned trials,
                                           std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorCode::InvalidArgument, "sample_check needs trials >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> pick_arity(1, family.max_arity());
  for (unsigned t = 0; t < trials; ++t) {
    const unsigned n = pick_arity(rng);
    const auto splits = splits_of(n);
    std::uniform_int_distribution<std::size_t> pick_split(0, splits.size() - 1);
    const Split split = splits[pick_split(rng)];
    auto point = random_point(family.ring(), n, rng);
    auto [lhs, rhs] = evaluate_split(family, split, point);
    if (lhs != rhs) return PointViolation{n, split, std::move(point), std::move(lhs), std::move(rhs)};
  }
  return std::nullopt;
}

AgreementReport checker_oracle_agreement(const std::vector<PolyFamily>& corpus, unsigned trials,
                                         std::uint64_t seed) {
  constexpr unsigned kRounds = 10;
  constexpr unsigned kPointsPerRound = 100;

  AgreementReport report;
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const PolyFamily& family = corpus[idx];
    const std::uint64_t family_seed = seed + idx;
    AgreementEntry entry;
    auto witness = check_b_associative(family);
    entry.symbolic_ok = !witness.has_value();
    entry.sample_consistent = !sample_check(family, trials, family_seed).has_value();
    if (entry.symbolic_ok) {
      entry.agree = entry.sample_consistent;
    } else {
      std::mt19937_64 rng(family_seed ^ 0x9e3779b97f4a7c15ULL);
      for (unsigned round = 0; round < kRounds && !entry.witness_point; ++round) {
        for (unsigned p = 0; p < kPointsPerRound; ++p) {
          auto point = random_point(family.ring(), witness->arity, rng);
          if (!evaluate(witness->difference, point).is_zero()) {
            entry.witness_point = std::move(point);
            break;
          }
        }
      }
      entry.agree = entry.witness_point.has_value();
    }
    if (!entry.agree) ++report.disagreements;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

// ------------------------------------------------------------ exhaustive sweep

unsigned SearchConfig::degree_cap(unsigned arity) const {
  if (arity >= 1 && arity <= max_degree_per_arity.size()) return max_degree_per_arity[arity - 1];
  return max_total_degree;
}

std::vector<Monomial> monomials_up_to(unsigned arity, unsigned degree) {
  std::vector<Monomial> out;
  std::vector<Monomial::Factor> current;
  std::function<void(unsigned, unsigned)> walk = [&](unsigned var, unsigned budget) {
    if (var > arity) {
      out.emplace_back(current);
      return;
    }
    for (unsigned e = 0; e <= budget; ++e) {
      if (e > 0) current.emplace_back(var, e);
      walk(var + 1, budget - e);
      if (e > 0) current.pop_back();
    }
  };
  walk(1, degree);
  std::sort(out.begin(), out.end(), GradedLexDescending{});
  return out;
}

namespace {

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1U, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, count); ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
}

/// Candidate members of one arity, addressed by a mixed-radix index whose
/// most significant digit is the coefficient of the largest monomial.
class CandidateSpace {
 public:
  CandidateSpace(const SearchConfig& config, unsigned arity)
      : ring_(config.ring),
        arity_(arity),
        pool_(&config.coefficient_pool),
        monomials_(monomials_up_to(arity, config.degree_cap(arity))) {
    size_ = 1;
    for (std::size_t i = 0; i < monomials_.size(); ++i) size_ *= pool_->size();
  }

  std::uint64_t size() const { return size_; }
  std::size_t slots() const { return monomials_.size(); }

  Polynomial at(std::uint64_t index) const {
    std::vector<std::pair<Monomial, RingValue>> terms;
    for (std::size_t s = monomials_.size(); s-- > 0;) {
      terms.emplace_back(monomials_[s], (*pool_)[index % pool_->size()]);
      index /= pool_->size();
    }
    return Polynomial::from_terms(ring_, arity_, std::move(terms));
  }

 private:
  RingId ring_;
  unsigned arity_;
  const std::vector<RingValue>* pool_;
  std::vector<Monomial> monomials_;
  std::uint64_t size_ = 1;
};

void validate(const SearchConfig& config) {
  if (config.max_arity < 2) throw Error(ErrorCode::InvalidArgument, "search needs max_arity >= 2");
  const auto& pool = config.coefficient_pool;
  if (pool.empty()) throw Error(ErrorCode::InvalidArgument, "coefficient pool is empty");
  for (const auto& c : pool) {
    if (c.ring() != config.ring) throw Error(ErrorCode::RingMismatch, "pool entry from another ring");
  }
  auto has = [&](const RingValue& v) { return std::find(pool.begin(), pool.end(), v) != pool.end(); };
  if (!has(RingValue::zero(config.ring)) || !has(RingValue::one(config.ring))) {
    throw Error(ErrorCode::InvalidArgument, "coefficient pool must contain 0 and 1");
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (pool[i] == pool[j]) throw Error(ErrorCode::InvalidArgument, "duplicate pool entry " + pool[i].to_string());
    }
  }
}

}  // namespace

SearchReport exhaustive_search(const SearchConfig& config, unsigned jobs) {
  validate(config);

  std::vector<CandidateSpace> spaces;
  mpz_class total = 1;
  std::size_t slots = 0;
  for (unsigned n = 1; n <= config.max_arity; ++n) {
    spaces.emplace_back(config, n);
    slots += spaces.back().slots();
  }
  mpz_pow_ui(total.get_mpz_t(), mpz_class(static_cast<unsigned long>(config.coefficient_pool.size())).get_mpz_t(), slots);
  if (!config.allow_large && total > kSearchGuard) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "search space has " + total.get_str() + " candidates (guard " +
                    std::to_string(kSearchGuard) + ")");
  }

  SearchReport report;
  report.total_enumerated = total.fits_ulong_p() ? total.get_ui() : UINT64_MAX;

  // Families passing every identity of arity <= n, in canonical order.
  std::vector<std::vector<Polynomial>> prefixes{{}};
  for (unsigned n = 1; n <= config.max_arity; ++n) {
    const CandidateSpace& space = spaces[n - 1];
    std::vector<std::vector<Polynomial>> next;
    for (const auto& prefix : prefixes) {
      std::vector<char> passing(space.size(), 0);
      parallel_for(space.size(), jobs, [&](std::size_t idx) {
        std::vector<Polynomial> members = prefix;
        members.push_back(space.at(idx));
        passing[idx] = !first_violation_at_arity(PolyFamily(std::move(members)), n).has_value();
      });
      report.arity_checks += space.size();
      for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
        if (!passing[idx]) continue;
        next.push_back(prefix);
        next.back().push_back(space.at(idx));
      }
    }
    prefixes = std::move(next);
  }

  std::vector<std::optional<Classification>> classes(prefixes.size());
  std::vector<std::string> problems(prefixes.size());
  parallel_for(prefixes.size(), jobs, [&](std::size_t idx) {
    PolyFamily family(prefixes[idx]);
    Classification c = classify(family);
    if (std::holds_alternative<NotBAssociative>(c)) {
      problems[idx] = "classified as not B-associative";
    } else if (realize(c, config.ring, config.max_arity) != family) {
      problems[idx] = "classification does not reproduce the family";
    }
    classes[idx] = std::move(c);
  });

  for (std::size_t idx = 0; idx < prefixes.size(); ++idx) {
    PolyFamily family(prefixes[idx]);
    if (!problems[idx].empty()) report.mismatches.push_back({family, problems[idx]});
    report.b_associative.push_back({std::move(family), std::move(*classes[idx])});
  }
  return report;
}

SearchConfig parse_search_config(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("search config: ") + e.what());
  }
  try {
    SearchConfig config;
    auto ring = parse_ring_name(doc.at("ring").get<std::string>());
    if (!ring) throw Error(ErrorCode::InvalidArgument, "search config: unknown ring");
    config.ring = *ring;
    config.max_arity = doc.at("max_arity").get<unsigned>();
    config.max_total_degree = doc.at("max_total_degree").get<unsigned>();
    for (const auto& lit : doc.at("coefficient_pool")) {
      config.coefficient_pool.push_back(parse_ring_literal(lit.get<std::string>(), config.ring));
    }
    config.seed = doc.value("seed", std::uint64_t{0});
    if (doc.contains("max_degree_per_arity")) {
      config.max_degree_per_arity = doc.at("max_degree_per_arity").get<std::vector<unsigned>>();
    }
    config.allow_large = doc.value("allow_large", false);
    return config;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("search config: ") + e.what());
  }
}

}  // namespace baryassoc
