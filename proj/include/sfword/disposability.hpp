#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sfword/word.hpp"

namespace sfword {

/// An interior factor occurrence to delete: positions
/// [start, start+length) with nonempty flanks on both sides.
struct DeletionSite {
  std::size_t start = 0;
  std::size_t length = 1;

  friend bool operator==(const DeletionSite&, const DeletionSite&) = default;
};

inline bool is_interior(const DeletionSite& site, std::size_t word_length) {
  return site.length >= 1 && site.start >= 1 && site.start + site.length + 1 <= word_length;
}

/// w = w1·v·w2 with |w1| = site.start, |v| = site.length; returns w1·w2.
inline Word delete_factor(const Word& w, const DeletionSite& site) {
  if (!is_interior(site, w.size()))
    raise(errc::not_interior, "site (" + std::to_string(site.start) + "," +
                                  std::to_string(site.length) + ") is not interior in a word of length " +
                                  std::to_string(w.size()));
  Word out;
  out.reserve(w.size() - site.length);
  out.append(w, 0, site.start);
  out.append(w, site.start + site.length, Word::npos);
  return out;
}

/// True iff deleting the site from square-free w leaves a square-free word.
inline bool is_disposable(const Word& w, const DeletionSite& site) {
  if (!is_interior(site, w.size()))
    raise(errc::not_interior, "site (" + std::to_string(site.start) + "," +
                                  std::to_string(site.length) + ") is not interior");
  if (!is_square_free(w)) raise(errc::not_square_free, "word contains a square");
  return is_square_free(delete_factor(w, site));
}

/// Outcome of one interior deletion: the square it creates, or nothing if
/// the site is disposable.
struct SiteCheck {
  DeletionSite site;
  std::optional<SquareWitness> square;  // witness inside the deleted word

  bool disposable() const { return !square.has_value(); }
};

struct IrreducibilityReport {
  Word word;
  std::size_t k = 1;
  bool verdict = false;
  std::vector<SiteCheck> witnesses;  // one per interior site, left to right
  std::optional<DeletionSite> first_disposable;
};

namespace detail {

/// Verdict-only k-irreducibility for square-free w, early exit on the
/// first disposable site. scratch is reused to avoid reallocation in
/// enumeration loops.
inline bool is_irreducible_sf(const Word& w, std::size_t k, Word& scratch) {
  const std::size_t n = w.size();
  for (std::size_t s = 1; s + k + 1 <= n; ++s) {
    scratch.assign(w, 0, s);
    scratch.append(w, s + k, Word::npos);
    if (is_square_free(scratch)) return false;
  }
  return true;
}

inline void require_checkable(const Word& w, std::size_t k) {
  if (k < 1) raise(errc::out_of_range, "k must be positive");
  if (w.size() < k + 2)
    raise(errc::too_short, "length " + std::to_string(w.size()) +
                               " admits no interior factor of length " + std::to_string(k));
  if (!is_square_free(w)) raise(errc::not_square_free, "word contains a square");
}

}  // namespace detail

/// Full per-site report: every interior length-k site with either the
/// square its deletion creates or a disposability marker.
inline IrreducibilityReport k_irreducibility_report(const Word& w, std::size_t k) {
  detail::require_checkable(w, k);
  IrreducibilityReport report;
  report.word = w;
  report.k = k;
  report.witnesses.reserve(w.size() - k - 1);
  for (std::size_t s = 1; s + k + 1 <= w.size(); ++s) {
    const DeletionSite site{s, k};
    auto square = find_square(delete_factor(w, site));
    if (!square && !report.first_disposable) report.first_disposable = site;
    report.witnesses.push_back(SiteCheck{site, square});
  }
  report.verdict = !report.first_disposable.has_value();
  return report;
}

inline IrreducibilityReport irreducibility_report(const Word& w) {
  return k_irreducibility_report(w, 1);
}

/// Verdict-only variants (early exit on the first disposable site).
inline bool is_k_irreducible(const Word& w, std::size_t k) {
  detail::require_checkable(w, k);
  Word scratch;
  return detail::is_irreducible_sf(w, k, scratch);
}

inline bool is_irreducibly_square_free(const Word& w) { return is_k_irreducible(w, 1); }

/// All k <= max_k for which w fails to be k-irreducible. Lengths k with
/// no interior site (k > |w|-2) cannot fail and are skipped.
inline std::set<std::size_t> failing_ks(const Word& w, std::size_t max_k) {
  if (w.size() < 3) raise(errc::too_short, "need length >= 3");
  if (!is_square_free(w)) raise(errc::not_square_free, "word contains a square");
  std::set<std::size_t> out;
  Word scratch;
  const std::size_t top = std::min(max_k, w.size() - 2);
  for (std::size_t k = 1; k <= top; ++k) {
    if (!detail::is_irreducible_sf(w, k, scratch)) out.insert(k);
  }
  return out;
}

}  // namespace sfword
