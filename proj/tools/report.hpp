#pragma once

// JSON and plain-text renderings of library results for the command line.

#include <string>

#include <json.hpp>

#include "baryassoc/bassoc.hpp"
#include "baryassoc/oracle.hpp"

namespace baryassoc::cli {

nlohmann::json witness_json(const SplitWitness& witness);
/// Keys: status, case ("i" | "ii" | "not_b_associative"), z, k, tail, Q, witness.
nlohmann::json classification_json(const Classification& c);
/// Adds `symmetric` (all_constant | i_half | ii_antisym) and the
/// not_symmetric case to the classification keys.
nlohmann::json symmetric_json(const SymmetricClassification& c);
nlohmann::json lemma3_json(const Lemma3Report& report);
nlohmann::json search_json(const SearchReport& report);

std::string witness_text(const SplitWitness& witness);
std::string classification_text(const Classification& c, unsigned max_arity);
std::string symmetric_text(const SymmetricClassification& c);
std::string lemma3_text(const Lemma3Report& report);
std::string search_text(const SearchReport& report);

}  // namespace baryassoc::cli
