#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "sfword/construct.hpp"
#include "sfword/disposability.hpp"
#include "sfword/enumerate.hpp"
#include "sfword/morphism.hpp"
#include "sfword/serialize.hpp"
#include "sfword/word.hpp"

namespace sfword {

/// Outcome of re-checking one published claim. bounded marks checks that
/// sample an infinite statement on a finite prefix.
struct ClaimResult {
  std::string claim_id;
  std::string description;
  bool verdict = false;
  bool bounded = false;
  json witnesses;
};

inline void to_json(json& j, const ClaimResult& result) {
  j = json{{"claim_id", result.claim_id},
           {"description", result.description},
           {"verdict", result.verdict},
           {"bounded", result.bounded},
           {"witnesses", result.witnesses}};
}

namespace detail {

inline std::size_t count_occurrences(const Word& haystack, std::string_view needle) {
  std::size_t count = 0;
  for (std::size_t pos = haystack.find(needle); pos != Word::npos;
       pos = haystack.find(needle, pos + 1))
    ++count;
  return count;
}

}  // namespace detail

/// The Thue word avoids 010, 212 and 1021, and deleting its third letter
/// leaves a square-free word; checked on the length-depth prefix.
inline ClaimResult replicate_example1(std::size_t depth) {
  if (depth < 20) raise(errc::out_of_range, "depth must be at least 20");
  ClaimResult result;
  result.claim_id = "example1.thue-deletion";
  result.description =
      "Thue word prefix avoids 010, 212, 1021; deleting the third letter leaves it square-free";
  result.bounded = true;
  const Word prefix = fixed_point_prefix(tau(), '0', depth);
  json scans;
  bool avoided = true;
  for (std::string_view factor : {"010", "212", "1021"}) {
    const std::size_t occurrences = detail::count_occurrences(prefix, factor);
    scans[std::string(factor)] = occurrences;
    if (occurrences != 0) avoided = false;
  }
  const Word deleted = delete_factor(prefix, DeletionSite{2, 1});
  const bool head_ok = deleted.compare(0, 14, "01021012102012") == 0;
  const bool deleted_square_free = is_square_free(deleted);
  result.verdict = avoided && head_ok && deleted_square_free;
  result.witnesses = json{{"depth", depth},
                          {"factor_occurrences", scans},
                          {"deleted_head", deleted.substr(0, 14)},
                          {"deleted_square_free", deleted_square_free}};
  return result;
}

/// Theorem 2: Procedure I certifies phi, the images are irreducibly
/// square-free, and the four deletion squares come out exactly as stated.
inline ClaimResult replicate_theorem2() {
  ClaimResult result;
  result.claim_id = "thm2.phi";
  result.description =
      "Procedure I certifies phi; images are irreducibly square-free; middle-letter deletions "
      "give the stated squares";
  result.bounded = false;
  const Morphism& m = phi();
  const MorphismCertificate cert = procedure_I(m);
  struct Expected {
    const char* pair;
    DeletionSite site;
    const char* square;
  };
  const std::array<Expected, 4> expected{{{"01", {16, 1}, "11"},
                                          {"02", {16, 1}, "02120212"},
                                          {"01", {17, 1}, "10201020"},
                                          {"02", {17, 1}, "00"}}};
  bool deletions_ok = true;
  json deletions = json::array();
  for (const Expected& e : expected) {
    const Word image = apply_morphism(m, parse_word(e.pair));
    const Word deleted = delete_factor(image, e.site);
    const auto square = find_square(deleted);
    const Word content = square ? square_content(deleted, *square) : Word{};
    const bool ok = square.has_value() && content == e.square;
    if (!ok) deletions_ok = false;
    deletions.push_back(json{{"pair", e.pair},
                             {"site", e.site},
                             {"expected_square", e.square},
                             {"found_square", content},
                             {"pass", ok}});
  }
  bool images_ok = true;
  json images;
  for (char a : alphabet) {
    const bool irr = is_irreducibly_square_free(m.image(a));
    images[std::string(1, a)] = irr;
    if (!irr) images_ok = false;
  }
  result.verdict = cert.pass() && cert.alignment.pass && deletions_ok && images_ok;
  result.witnesses = json{{"procedure_I_pass", cert.pass()},
                          {"alignment_pass", cert.alignment.pass},
                          {"deletions", deletions},
                          {"images_irreducible", images}};
  return result;
}

/// Table 1: the census of irreducibly square-free words of lengths 3..30
/// up to isomorphism and reversal.
inline ClaimResult replicate_table1(unsigned threads = 1) {
  ClaimResult result;
  result.claim_id = "table1.census";
  result.description = "census of irreducibly square-free words, lengths 3..30, up to isomorphism "
                       "and reversal";
  result.bounded = false;
  constexpr std::array<std::uint64_t, 28> expected{1,  0,  0,  1,  0,  1,  1,  1,  3,  0,
                                                   3,  4,  4,  7,  9,  7,  12, 12, 16, 18,
                                                   23, 24, 34, 36, 48, 55, 69, 78};
  CensusOptions options;
  options.threads = threads;
  const std::vector<CensusRow> rows = census_range(3, 30, options);
  bool all_match = true;
  json table = json::array();
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    const bool ok = rows[idx].irreducible_count_canonical == expected[idx];
    if (!ok) all_match = false;
    table.push_back(json{{"length", rows[idx].length},
                         {"canonical", rows[idx].irreducible_count_canonical},
                         {"expected", expected[idx]},
                         {"pass", ok}});
  }
  result.verdict = all_match;
  result.witnesses = json{{"rows", table}};
  return result;
}

/// Example 2: the tau^5 block facts behind 2-irreducibility of the Thue
/// word, and the failure of tau^{2n}(0) itself.
inline ClaimResult replicate_example2() {
  ClaimResult result;
  result.claim_id = "example2.two-irreducibility";
  result.description = "tau^2 images, the 121 suffix of tau^{2n}(0), and the tau^5 pair-deletion "
                       "facts for 2-irreducibility of the Thue word";
  result.bounded = false;
  bool ok = true;
  const auto expect = [&](bool condition) {
    if (!condition) ok = false;
    return condition;
  };

  const Morphism tau2 = power(tau(), 2);
  json checks;
  checks["tau2_images"] = expect(tau2.image('0') == "012021" && tau2.image('1') == "0121" &&
                                 tau2.image('2') == "02");

  // tau^{2n}(0) ends in 121 and the final pair deletion refutes
  // 2-irreducibility; probed at n = 2 and n = 3.
  json even_powers = json::array();
  for (std::size_t exponent : {4u, 6u}) {
    const Word w = apply_morphism(power(tau(), exponent - 1), tau().image('0'));
    const DeletionSite site{w.size() - 3, 2};
    const bool suffix_ok = w.size() >= 3 && w.compare(w.size() - 3, 3, "121") == 0;
    const bool fails = !is_k_irreducible(w, 2);
    const bool site_disposable = is_disposable(w, site);
    even_powers.push_back(json{{"exponent", exponent},
                               {"length", w.size()},
                               {"suffix_121", suffix_ok},
                               {"fails_2_irreducibility", fails},
                               {"final_pair_disposable", site_disposable}});
    expect(suffix_ok && fails && site_disposable);
  }
  checks["even_powers"] = even_powers;

  const Morphism tau5 = power(tau(), 5);
  checks["tau5_lengths"] = expect(tau5.image_length('0') == 48 && tau5.image_length('1') == 32 &&
                                  tau5.image_length('2') == 16);
  checks["tau5_of_2"] = expect(tau5.image('2') == "0120210121020121");
  const Word p = "012021";
  checks["common_prefix"] = expect(tau5.image('0').compare(0, p.size(), p) == 0 &&
                                   tau5.image('1').compare(0, p.size(), p) == 0 &&
                                   tau5.image('2').compare(0, p.size(), p) == 0);
  checks["tau5_1_p_2irr"] = expect(is_k_irreducible(tau5.image('1') + p, 2));
  checks["tau5_2_p_2irr"] = expect(is_k_irreducible(tau5.image('2') + p, 2));

  // In tau^5(0)·p only the pairs 20 and 02 inside the final p block are
  // disposable.
  const Word w0p = tau5.image('0') + p;
  const std::size_t block_start = tau5.image_length('0');
  json disposable = json::array();
  bool sites_ok = true;
  for (std::size_t s = 1; s + 3 <= w0p.size(); ++s) {
    if (!is_square_free(delete_factor(w0p, DeletionSite{s, 2}))) continue;
    const Word pair = w0p.substr(s, 2);
    const bool inside_p = s >= block_start;
    if (!inside_p || (pair != "20" && pair != "02")) sites_ok = false;
    disposable.push_back(json{{"start", s}, {"pair", pair}, {"inside_p", inside_p}});
  }
  if (disposable.size() != 2) sites_ok = false;
  expect(sites_ok);
  checks["tau5_0_p_disposable_pairs"] = disposable;

  result.verdict = ok;
  result.witnesses = checks;
  return result;
}

/// The repetition-of-the-first-letter argument: if the first letter of w
/// recurs at position j and the site (1, j) is interior, deleting it
/// leaves a suffix of w, so k = j fails. Sites inside the right quarter of
/// the prefix are reported not-applicable instead of being used as
/// evidence, since the unseen extension could change them.
inline ClaimResult replicate_section3_theorem(const Word& prefix, std::size_t max_k) {
  if (prefix.size() < 3) raise(errc::too_short, "need length >= 3");
  if (!is_square_free(prefix)) raise(errc::not_square_free, "prefix contains a square");
  ClaimResult result;
  result.claim_id = "sec3.failing-k";
  result.description =
      "every infinite square-free word has failing factor lengths; the first-letter repetition "
      "site checked on a prefix";
  result.bounded = true;
  const std::size_t j = prefix.find(prefix[0], 1);
  if (j == Word::npos)
    raise(errc::no_recurrence, "the first letter never recurs in the prefix");
  const DeletionSite site{1, j};
  const std::size_t margin = prefix.size() / 4;
  json payload{{"prefix_length", prefix.size()},
               {"first_letter", std::string(1, prefix[0])},
               {"second_occurrence", j},
               {"site", site},
               {"right_margin", margin}};
  if (!is_interior(site, prefix.size())) {
    payload["applicable"] = false;
    payload["reason"] = "proof site is not interior; extend the prefix";
    result.verdict = true;
    result.witnesses = payload;
    return result;
  }
  if (site.start + site.length + margin > prefix.size()) {
    payload["applicable"] = false;
    payload["reason"] = "proof site falls inside the right margin; extend the prefix";
    result.verdict = true;
    result.witnesses = payload;
    return result;
  }
  payload["applicable"] = true;
  const bool deleted_square_free = is_square_free(delete_factor(prefix, site));
  const std::set<std::size_t> failing = failing_ks(prefix, max_k);
  const bool consistent = j > max_k || failing.count(j) > 0;
  payload["deleted_square_free"] = deleted_square_free;
  payload["failing_k"] = j;
  payload["failing_ks"] = failing;
  payload["consistent_with_failing_ks"] = consistent;
  result.verdict = deleted_square_free && consistent;
  result.witnesses = payload;
  return result;
}

/// alpha3 preserves square-freeness, is prolongable on 0, and all six
/// two-letter images are 3-irreducibly square-free.
inline ClaimResult replicate_alpha3() {
  ClaimResult result;
  result.claim_id = "sec3.alpha3";
  result.description = "alpha3 passes the Crochemore test and Procedure I at factor length 3";
  result.bounded = false;
  const Morphism& m = alpha3();
  const MorphismCertificate cert = procedure_I_k(m, 3);
  const bool prolongable = m.is_prolongable_on('0');
  json pairs = json::array();
  for (const PairCheck& pc : cert.pair_checks)
    pairs.push_back(json{{"a", std::string(1, pc.a)}, {"b", std::string(1, pc.b)}, {"pass", pc.pass}});
  result.verdict = cert.pass() && prolongable;
  result.witnesses = json{{"crochemore_pass", cert.crochemore.pass},
                          {"prolongable_on_0", prolongable},
                          {"image_lengths",
                           json::array({m.image_length('0'), m.image_length('1'), m.image_length('2')})},
                          {"pair_checks", pairs}};
  return result;
}

/// The prefix gap around length 17 of the phi fixed point.
inline ClaimResult replicate_prefix_gap() {
  const PrefixGapReport gap = phi_prefix_gap_check();
  ClaimResult r;
  r.claim_id = "phi.prefix-gap";
  r.description = "phi fixed-point prefixes of lengths 19..29 are not irreducibly square-free; "
                  "length 17 is";
  r.bounded = false;
  r.verdict = gap.pass;
  r.witnesses = gap;
  return r;
}

inline ClaimResult replicate_claim_A(std::size_t depth) {
  const ClaimAReport report = verify_claim_A(depth);
  ClaimResult r;
  r.claim_id = "thm3.claimA";
  r.description = "w·Phi is square-free for every short nonempty suffix w of phi(1) or phi(2)";
  r.bounded = true;
  r.verdict = report.pass;
  r.witnesses = report;
  return r;
}

inline ClaimResult replicate_claim_B(std::size_t depth) {
  const ClaimBReport report = verify_claim_B(depth);
  ClaimResult r;
  r.claim_id = "thm3.claimB";
  r.description = "121·Phi and 0102·Phi are square-free";
  r.bounded = true;
  r.verdict = report.pass;
  r.witnesses = report;
  return r;
}

inline ClaimResult replicate_special_words(std::size_t depth) {
  const SpecialWordsReport report = verify_special_words(depth);
  ClaimResult r;
  r.claim_id = "thm3.special-words";
  r.description = "the sixteen special words have the right lengths, stay square-free before "
                  "Phi, and are irreducible with phi(0)";
  r.bounded = true;
  r.verdict = report.pass;
  r.witnesses = report;
  return r;
}

/// Runs every claim check. depth controls the fixed-point prefixes used by
/// the bounded checks; census work may be split across threads without
/// affecting the output.
inline std::vector<ClaimResult> replicate_all(std::size_t depth, unsigned threads = 1) {
  if (depth < 17) raise(errc::out_of_range, "depth must be at least 17");
  std::vector<ClaimResult> results;
  results.push_back(replicate_example1(std::max<std::size_t>(depth, 20)));
  results.push_back(replicate_table1(threads));
  results.push_back(replicate_theorem2());
  results.push_back(replicate_prefix_gap());
  results.push_back(replicate_claim_A(depth));
  results.push_back(replicate_claim_B(depth));
  results.push_back(replicate_special_words(depth));
  results.push_back(replicate_example2());
  results.push_back(replicate_section3_theorem(fixed_point_prefix(tau(), '0', 30), 10));
  results.push_back(replicate_alpha3());
  return results;
}

inline bool all_pass(const std::vector<ClaimResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const ClaimResult& r) { return r.verdict; });
}

}  // namespace sfword
