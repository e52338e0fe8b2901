#pragma once

#include <string>

#include <json.hpp>

#include "sfword/construct.hpp"
#include "sfword/disposability.hpp"
#include "sfword/enumerate.hpp"
#include "sfword/morphism.hpp"
#include "sfword/word.hpp"

// JSON views of the report types. Keys are stable; golden-file tests rely
// on them.

namespace sfword {

using json = nlohmann::json;

inline void to_json(json& j, const SquareWitness& sq) {
  j = json{{"start", sq.start}, {"half_length", sq.half_length}};
}

inline void to_json(json& j, const DeletionSite& site) {
  j = json{{"start", site.start}, {"length", site.length}};
}

inline void to_json(json& j, const SiteCheck& check) {
  j = json{{"site", check.site}};
  if (check.square)
    j["square"] = *check.square;
  else
    j["square"] = nullptr;
}

inline void to_json(json& j, const IrreducibilityReport& report) {
  j = json{{"word", report.word},
           {"k", report.k},
           {"verdict", report.verdict},
           {"witnesses", report.witnesses}};
  if (report.first_disposable)
    j["first_disposable"] = *report.first_disposable;
  else
    j["first_disposable"] = nullptr;
}

inline void to_json(json& j, const CrochemoreResult& result) {
  j = json{{"pass", result.pass}};
  if (result.witness)
    j["witness"] = json{{"input", result.witness->input}, {"square", result.witness->square}};
  else
    j["witness"] = nullptr;
}

inline void to_json(json& j, const AlignmentResult& result) {
  j = json{{"pass", result.pass}};
  if (result.witness)
    j["witness"] = json{{"a", std::string(1, result.witness->a)},
                        {"b", std::string(1, result.witness->b)},
                        {"c", std::string(1, result.witness->c)},
                        {"offset", result.witness->offset}};
  else
    j["witness"] = nullptr;
}

inline void to_json(json& j, const PairCheck& check) {
  j = json{{"a", std::string(1, check.a)}, {"b", std::string(1, check.b)}, {"pass", check.pass}};
  j["square_in_image"] = check.square_in_image ? json(*check.square_in_image) : json(nullptr);
  j["report"] = check.report ? json(*check.report) : json(nullptr);
}

inline void to_json(json& j, const MorphismCertificate& cert) {
  j = json{{"crochemore", cert.crochemore},
           {"alignment", cert.alignment},
           {"k", cert.k},
           {"pair_checks", cert.pair_checks},
           {"pass", cert.pass()}};
}

inline void to_json(json& j, const CensusRow& row) {
  j = json{{"length", row.length},
           {"square_free", row.square_free_count},
           {"irreducible_raw", row.irreducible_count_raw},
           {"irreducible_canonical", row.irreducible_count_canonical},
           {"representatives", row.representatives}};
}

inline void to_json(json& j, const ConstructionTrace& trace) {
  j = json{{"n", trace.n},
           {"branch", std::string(to_string(trace.branch))},
           {"i", trace.residue},
           {"k", trace.quotient},
           {"parts", trace.parts},
           {"result", trace.result},
           {"verified", trace.verified}};
}

inline void to_json(json& j, const SuffixCheck& check) {
  j = json{{"source", std::string(1, check.source)},
           {"suffix_length", check.suffix_length},
           {"pass", check.pass}};
  j["square"] = check.square ? json(*check.square) : json(nullptr);
}

inline void to_json(json& j, const ClaimAReport& report) {
  j = json{{"depth", report.depth}, {"pass", report.pass}, {"checks", report.checks}};
}

inline void to_json(json& j, const ClaimBReport& report) {
  j = json{{"depth", report.depth},
           {"pass", report.pass},
           {"with_121_pass", report.with_121_pass},
           {"with_0102_pass", report.with_0102_pass},
           {"prefix8_matches", report.prefix8_matches},
           {"prefix8_absent_from_phi", report.prefix8_absent_from_phi}};
  j["with_121_square"] = report.with_121_square ? json(*report.with_121_square) : json(nullptr);
  j["with_0102_square"] = report.with_0102_square ? json(*report.with_0102_square) : json(nullptr);
}

inline void to_json(json& j, const SpecialWordCheck& check) {
  j = json{{"index", check.index},
           {"length_ok", check.length_ok},
           {"prefix_square_free", check.prefix_square_free},
           {"with_phi0_irreducible", check.with_phi0_irreducible}};
}

inline void to_json(json& j, const SpecialWordsReport& report) {
  j = json{{"depth", report.depth}, {"pass", report.pass}, {"checks", report.checks}};
}

inline void to_json(json& j, const PrefixGapEntry& entry) {
  j = json{{"length", entry.length}, {"irreducible", entry.irreducible}};
  j["first_disposable"] = entry.first_disposable ? json(*entry.first_disposable) : json(nullptr);
}

inline void to_json(json& j, const PrefixGapReport& report) {
  j = json{{"pass", report.pass}, {"entries", report.entries}};
}

}  // namespace sfword
