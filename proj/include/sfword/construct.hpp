#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfword/disposability.hpp"
#include "sfword/morphism.hpp"
#include "sfword/word.hpp"

namespace sfword {

namespace detail {

// Smallest irreducibly square-free word of each length 3..17; empty slots
// mark the lengths where none exists.
inline constexpr std::array<std::string_view, 15> small_words{
    "010",               // 3
    "",                  // 4
    "",                  // 5
    "010212",            // 6
    "",                  // 7
    "01020121",          // 8
    "010212010",         // 9
    "0102012101",        // 10
    "01020120212",       // 11
    "",                  // 12
    "0102012101202",     // 13
    "01020120212010",    // 14
    "010201210120212",   // 15
    "0102012021201020",  // 16
    "01202120102120210", // 17
};

// Special words w_1..w_16 with |w_i| = i; w_i followed by any prefix of
// the phi fixed point stays square-free, and w_i·phi(0) is irreducibly
// square-free.
inline constexpr std::array<std::string_view, 16> special_words{
    "1",
    "02",
    "121",
    "2102",
    "12102",
    "020121",
    "2120102",
    "01020121",
    "121020121",
    "2021012102",
    "10121020121",
    "101202120121",
    "0210121020121",
    "01021201020121",
    "010201202120121",
    "0201021201020121",
};

}  // namespace detail

/// The tabulated irreducibly square-free word of length n, 3 <= n <= 17.
/// Lengths 4, 5, 7 and 12 have none.
inline Word small_word(std::size_t n) {
  if (n < 3 || n > 17)
    raise(errc::out_of_range, "small words cover lengths 3..17, got " + std::to_string(n));
  std::string_view entry = detail::small_words[n - 3];
  if (entry.empty())
    raise(errc::no_such_length,
          "no irreducibly square-free word of length " + std::to_string(n) + " exists");
  return Word(entry);
}

/// The special word w_i, 1 <= i <= 16.
inline Word special_word(std::size_t i) {
  if (i < 1 || i > 16)
    raise(errc::out_of_range, "special words cover indices 1..16, got " + std::to_string(i));
  return Word(detail::special_words[i - 1]);
}

enum class ConstructionBranch { table2, phi_power, special_prefix };

inline std::string_view to_string(ConstructionBranch branch) {
  switch (branch) {
    case ConstructionBranch::table2: return "table2";
    case ConstructionBranch::phi_power: return "phi-power";
    case ConstructionBranch::special_prefix: return "special-prefix";
  }
  return "?";
}

struct ConstructionTrace {
  std::size_t n = 0;
  ConstructionBranch branch = ConstructionBranch::table2;
  std::size_t residue = 0;   // n mod 17
  std::size_t quotient = 0;  // n div 17
  std::vector<Word> parts;
  Word result;
  bool verified = false;
};

/// Builds an irreducibly square-free word of length n and re-verifies it.
/// n <= 17 comes from the small-word table; otherwise n = 17k + i uses the
/// phi fixed point directly (i = 0) or special_word(i) prepended to the
/// length-17k fixed-point prefix. Throws VerificationFailed rather than
/// returning an unverified word.
inline ConstructionTrace construct(std::size_t n) {
  if (n < 3) raise(errc::out_of_range, "no words of length < 3 qualify");
  ConstructionTrace trace;
  trace.n = n;
  trace.residue = n % 17;
  trace.quotient = n / 17;
  if (n <= 17) {
    trace.branch = ConstructionBranch::table2;
    trace.parts = {small_word(n)};
  } else if (trace.residue == 0) {
    trace.branch = ConstructionBranch::phi_power;
    trace.parts = {fixed_point_prefix(phi(), '0', n)};
  } else {
    trace.branch = ConstructionBranch::special_prefix;
    trace.parts = {special_word(trace.residue),
                   fixed_point_prefix(phi(), '0', 17 * trace.quotient)};
  }
  for (const Word& part : trace.parts) trace.result += part;
  trace.verified = trace.result.size() == n && is_square_free(trace.result) &&
                   is_irreducibly_square_free(trace.result);
  if (!trace.verified)
    raise(errc::verification_failed,
          "constructed word of length " + std::to_string(n) + " failed re-verification");
  return trace;
}

/// One bounded check of a claim about an infinite word.
struct SuffixCheck {
  char source = '1';           // phi image the suffix was taken from
  std::size_t suffix_length = 0;
  bool pass = false;
  std::optional<SquareWitness> square;
};

struct ClaimAReport {
  std::size_t depth = 0;
  bool pass = false;
  std::vector<SuffixCheck> checks;  // 32 = 16 suffixes of phi(1) + 16 of phi(2)
};

/// Claim A sampled at finite depth: w·Phi is square-free for every
/// nonempty suffix w of phi(1) or phi(2) shorter than 17, with Phi
/// replaced by its length-depth prefix.
inline ClaimAReport verify_claim_A(std::size_t depth) {
  if (depth < 17) raise(errc::out_of_range, "depth must be at least 17");
  ClaimAReport report;
  report.depth = depth;
  report.pass = true;
  const Word prefix = fixed_point_prefix(phi(), '0', depth);
  for (char a : {'1', '2'}) {
    const Word& image = phi().image(a);
    for (std::size_t len = 1; len < image.size(); ++len) {
      SuffixCheck check;
      check.source = a;
      check.suffix_length = len;
      const Word candidate = image.substr(image.size() - len) + prefix;
      auto square = find_square(candidate);
      check.pass = !square.has_value();
      check.square = square;
      if (!check.pass) report.pass = false;
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

struct ClaimBReport {
  std::size_t depth = 0;
  bool pass = false;
  bool with_121_pass = false;
  std::optional<SquareWitness> with_121_square;
  bool with_0102_pass = false;
  std::optional<SquareWitness> with_0102_square;
  bool prefix8_matches = false;          // 0102·Phi begins with 01020120
  bool prefix8_absent_from_phi = false;  // and 01020120 is not a factor of Phi
};

/// Claim B sampled at finite depth: 121·Phi and 0102·Phi are square-free,
/// plus the proof's side facts about the prefix 01020120.
inline ClaimBReport verify_claim_B(std::size_t depth) {
  if (depth < 17) raise(errc::out_of_range, "depth must be at least 17");
  ClaimBReport report;
  report.depth = depth;
  const Word prefix = fixed_point_prefix(phi(), '0', depth);
  const Word with_121 = "121" + prefix;
  const Word with_0102 = "0102" + prefix;
  report.with_121_square = find_square(with_121);
  report.with_121_pass = !report.with_121_square.has_value();
  report.with_0102_square = find_square(with_0102);
  report.with_0102_pass = !report.with_0102_square.has_value();
  report.prefix8_matches = with_0102.compare(0, 8, "01020120") == 0;
  report.prefix8_absent_from_phi = prefix.find("01020120") == Word::npos;
  report.pass = report.with_121_pass && report.with_0102_pass && report.prefix8_matches &&
                report.prefix8_absent_from_phi;
  return report;
}

struct SpecialWordCheck {
  std::size_t index = 0;
  bool length_ok = false;            // |w_i| = i
  bool prefix_square_free = false;   // w_i · Phi prefix is square-free
  bool with_phi0_irreducible = false;  // w_i · phi(0) is irreducibly square-free
};

struct SpecialWordsReport {
  std::size_t depth = 0;
  bool pass = false;
  std::vector<SpecialWordCheck> checks;
};

/// Properties (iii)-(v) of the special words, with (iv) sampled at depth.
inline SpecialWordsReport verify_special_words(std::size_t depth) {
  if (depth < 17) raise(errc::out_of_range, "depth must be at least 17");
  SpecialWordsReport report;
  report.depth = depth;
  report.pass = true;
  const Word prefix = fixed_point_prefix(phi(), '0', depth);
  const Word& phi0 = phi().image('0');
  for (std::size_t i = 1; i <= 16; ++i) {
    const Word w = special_word(i);
    SpecialWordCheck check;
    check.index = i;
    check.length_ok = w.size() == i;
    check.prefix_square_free = is_square_free(w + prefix);
    check.with_phi0_irreducible = is_irreducibly_square_free(w + phi0);
    if (!(check.length_ok && check.prefix_square_free && check.with_phi0_irreducible))
      report.pass = false;
    report.checks.push_back(check);
  }
  return report;
}

struct PrefixGapEntry {
  std::size_t length = 0;
  bool irreducible = false;
  std::optional<DeletionSite> first_disposable;
};

struct PrefixGapReport {
  bool pass = false;
  std::vector<PrefixGapEntry> entries;  // lengths 17 and 19..29
};

/// The fixed-point prefix of length 17 is irreducibly square-free but the
/// prefixes of lengths 19..29 all fail; reports the refuting site of each.
inline PrefixGapReport phi_prefix_gap_check() {
  PrefixGapReport report;
  report.pass = true;
  std::vector<std::size_t> lengths{17};
  for (std::size_t n = 19; n <= 29; ++n) lengths.push_back(n);
  for (std::size_t n : lengths) {
    auto word_report = irreducibility_report(fixed_point_prefix(phi(), '0', n));
    PrefixGapEntry entry{n, word_report.verdict, word_report.first_disposable};
    const bool expected = n == 17;
    if (entry.irreducible != expected) report.pass = false;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace sfword
