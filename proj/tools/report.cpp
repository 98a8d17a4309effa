#include "report.hpp"

#include <sstream>

namespace baryassoc::cli {

using nlohmann::json;

namespace {

json values_json(const std::vector<RingValue>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

std::string values_text(const std::vector<RingValue>& values) {
  if (values.empty()) return "(none)";
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ", ";
    out += v.to_string();
  }
  return out;
}

json family_json(const PolyFamily& family) {
  json members = json::array();
  for (const auto& m : family.members()) members.push_back(m.to_string());
  return {{"ring", std::string(ring_name(family.ring()))}, {"members", members}};
}

const char* yes_no(bool b) { return b ? "holds" : "FAILS"; }

}  // namespace

json witness_json(const SplitWitness& w) {
  return {{"arity", w.arity},
          {"split", {w.split.a, w.split.k, w.split.c}},
          {"difference", w.difference.to_string()}};
}

json classification_json(const Classification& c) {
  if (const auto* c1 = std::get_if<CaseI>(&c)) {
    return {{"status", "ok"},
            {"case", "i"},
            {"z", c1->z ? json(c1->z->to_string()) : json(nullptr)},
            {"k", c1->k},
            {"tail", values_json(c1->tail)}};
  }
  if (const auto* c2 = std::get_if<CaseII>(&c)) {
    return {{"status", "ok"}, {"case", "ii"}, {"Q", c2->q.to_string()}, {"tail", values_json(c2->tail)}};
  }
  const auto& nb = std::get<NotBAssociative>(c);
  return {{"status", "not_b_associative"}, {"case", "not_b_associative"}, {"witness", witness_json(nb.witness)}};
}

json symmetric_json(const SymmetricClassification& c) {
  if (const auto* ac = std::get_if<AllConstant>(&c)) {
    return {{"status", "ok"}, {"case", "i"}, {"symmetric", "all_constant"}, {"k", 1}, {"tail", values_json(ac->tail)}};
  }
  if (const auto* half = std::get_if<CaseIHalf>(&c)) {
    return {{"status", "ok"},
            {"case", "i"},
            {"symmetric", "i_half"},
            {"z", "1/2"},
            {"k", half->k},
            {"tail", values_json(half->tail)}};
  }
  if (const auto* anti = std::get_if<CaseIIAntisym>(&c)) {
    return {{"status", "ok"},
            {"case", "ii"},
            {"symmetric", "ii_antisym"},
            {"Q", anti->q.to_string()},
            {"tail", values_json(anti->tail)}};
  }
  if (const auto* nb = std::get_if<NotBAssociative>(&c)) {
    return {{"status", "not_b_associative"}, {"case", "not_b_associative"}, {"witness", witness_json(nb->witness)}};
  }
  return {{"status", "not_symmetric"}, {"case", "not_symmetric"}, {"arity", std::get<NotSymmetric>(c).arity}};
}

json lemma3_json(const Lemma3Report& r) {
  return {{"status", r.all_hold() ? "ok" : "identity_failed"},
          {"n", r.n},
          {"P", r.p.to_string()},
          {"P_idempotent", r.p_idempotent},
          {"reconstruction", r.eq_reconstruction_holds},
          {"inner_substitution", r.eq_inner_substitution_holds},
          {"fixed_point", r.eq_fixed_point_holds}};
}

json search_json(const SearchReport& r) {
  json found = json::array();
  for (const auto& f : r.b_associative) {
    json entry = classification_json(f.classification);
    entry["family"] = family_json(f.family);
    found.push_back(std::move(entry));
  }
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"family", family_json(m.family)}, {"reason", m.reason}});
  }
  return {{"status", r.mismatches.empty() ? "ok" : "mismatch"},
          {"total_enumerated", r.total_enumerated},
          {"arity_checks", r.arity_checks},
          {"b_associative_count", r.b_associative.size()},
          {"b_associative", found},
          {"mismatches", mismatches}};
}

std::string witness_text(const SplitWitness& w) {
  std::ostringstream out;
  out << "witness: arity " << w.arity << ", split (a, k, c) = (" << w.split.a << ", " << w.split.k << ", "
      << w.split.c << ")\n"
      << "difference: " << w.difference.to_string() << "\n";
  return out.str();
}

std::string classification_text(const Classification& c, unsigned max_arity) {
  std::ostringstream out;
  if (const auto* c1 = std::get_if<CaseI>(&c)) {
    out << "B-associative: case (i)\n";
    out << "z = " << (c1->z ? c1->z->to_string() : std::string("(any)")) << "\n";
    out << "k = " << c1->k;
    if (c1->k == max_arity + 1) out << " (no constant member up to arity " << max_arity << ")";
    out << "\ntail = " << values_text(c1->tail) << "\n";
  } else if (const auto* c2 = std::get_if<CaseII>(&c)) {
    out << "B-associative: case (ii)\n";
    out << "Q = " << c2->q.to_string() << "\n";
    out << "tail = " << values_text(c2->tail) << "\n";
  } else {
    out << "not B-associative\n" << witness_text(std::get<NotBAssociative>(c).witness);
  }
  return out.str();
}

std::string symmetric_text(const SymmetricClassification& c) {
  std::ostringstream out;
  if (const auto* ac = std::get_if<AllConstant>(&c)) {
    out << "symmetric, B-associative: all members constant\n";
    out << "constants = " << values_text(ac->tail) << "\n";
  } else if (const auto* half = std::get_if<CaseIHalf>(&c)) {
    out << "symmetric, B-associative: case (i) with z = 1/2\n";
    out << "k = " << half->k << "\ntail = " << values_text(half->tail) << "\n";
  } else if (const auto* anti = std::get_if<CaseIIAntisym>(&c)) {
    out << "symmetric, B-associative: case (ii), F2 = (x1 + x2)/2 + (x1 - x2)*Q\n";
    out << "Q = " << anti->q.to_string() << "\ntail = " << values_text(anti->tail) << "\n";
  } else if (const auto* nb = std::get_if<NotBAssociative>(&c)) {
    out << "symmetric, not B-associative\n" << witness_text(nb->witness);
  } else {
    out << "not symmetric: F" << std::get<NotSymmetric>(c).arity << " changes under a transposition\n";
  }
  return out.str();
}

std::string lemma3_text(const Lemma3Report& r) {
  std::ostringstream out;
  out << "n = " << r.n << "\n"
      << "P = " << r.p.to_string() << "\n"
      << "P idempotent: " << (r.p_idempotent ? "yes" : "no") << "\n"
      << "reconstruction: " << yes_no(r.eq_reconstruction_holds) << "\n"
      << "inner substitution: " << yes_no(r.eq_inner_substitution_holds) << "\n"
      << "fixed point: " << yes_no(r.eq_fixed_point_holds) << "\n";
  return out.str();
}

std::string search_text(const SearchReport& r) {
  std::size_t case_i = 0;
  std::size_t case_ii = 0;
  for (const auto& f : r.b_associative) {
    if (std::holds_alternative<CaseI>(f.classification)) ++case_i;
    if (std::holds_alternative<CaseII>(f.classification)) ++case_ii;
  }
  std::ostringstream out;
  out << "enumerated: " << r.total_enumerated << "\n"
      << "arity checks: " << r.arity_checks << "\n"
      << "b-associative: " << r.b_associative.size() << " (case i: " << case_i << ", case ii: " << case_ii
      << ")\n"
      << "mismatches: " << r.mismatches.size() << "\n";
  for (const auto& m : r.mismatches) {
    out << "  " << m.reason << ":";
    for (const auto& p : m.family.members()) out << " [" << p.to_string() << "]";
    out << "\n";
  }
  return out.str();
}

}  // namespace baryassoc::cli
