#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "sfword/disposability.hpp"
#include "sfword/word.hpp"

namespace sfword {

/// Visits every square-free word of length n exactly once, in
/// lexicographic order, pruning with the suffix test. The visitor
/// receives a const Word& that is only valid during the call. Returns the
/// number of words visited.
template <typename Visitor>
std::uint64_t enumerate_square_free(std::size_t n, Visitor&& visit) {
  Word buf;
  buf.reserve(n);
  std::uint64_t count = 0;
  detail::scan_square_free(n, buf, [&](const Word& w) {
    ++count;
    visit(w);
    return true;
  });
  return count;
}

struct CensusRow {
  std::size_t length = 0;
  std::uint64_t square_free_count = 0;
  std::uint64_t irreducible_count_raw = 0;
  std::uint64_t irreducible_count_canonical = 0;
  std::vector<Word> representatives;  // sorted canonical keys, when requested

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusOptions {
  bool with_representatives = false;
  unsigned threads = 1;       // 0 means hardware concurrency
  std::size_t split_depth = 6;  // DFS depth at which the tree is partitioned
};

namespace detail {

struct CensusAccumulator {
  std::uint64_t square_free = 0;
  std::uint64_t irreducible_raw = 0;
  std::set<Word> canonical;
  Word scratch;

  void take(const Word& w) {
    ++square_free;
    if (is_irreducible_sf(w, 1, scratch)) {
      ++irreducible_raw;
      canonical.insert(canonical_key(w));
    }
  }

  void merge(CensusAccumulator&& other) {
    square_free += other.square_free;
    irreducible_raw += other.irreducible_raw;
    canonical.merge(std::move(other.canonical));
  }
};

inline unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace detail

/// Counts (and optionally collects) the irreducibly square-free words of
/// length n, raw and up to isomorphism and reversal. With threads > 1 the
/// DFS tree is split at split_depth into independent prefix subtrees;
/// totals are schedule-independent.
inline CensusRow census(std::size_t n, const CensusOptions& options = {}) {
  if (n < 3) raise(errc::too_short, "census needs length >= 3");
  const unsigned threads = detail::resolve_threads(options.threads);
  detail::CensusAccumulator total;
  if (threads <= 1 || n <= options.split_depth + 1) {
    Word buf;
    buf.reserve(n);
    detail::scan_square_free(n, buf, [&](const Word& w) {
      total.take(w);
      return true;
    });
  } else {
    std::vector<Word> prefixes;
    {
      Word buf;
      detail::scan_square_free(options.split_depth, buf, [&](const Word& w) {
        prefixes.push_back(w);
        return true;
      });
    }
    std::vector<detail::CensusAccumulator> parts(threads);
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        Word buf;
        buf.reserve(n);
        for (;;) {
          const std::size_t index = cursor.fetch_add(1, std::memory_order_relaxed);
          if (index >= prefixes.size()) break;
          buf = prefixes[index];
          detail::scan_square_free(n, buf, [&](const Word& w) {
            parts[t].take(w);
            return true;
          });
        }
      });
    }
    for (std::thread& worker : workers) worker.join();
    for (detail::CensusAccumulator& part : parts) total.merge(std::move(part));
  }
  CensusRow row;
  row.length = n;
  row.square_free_count = total.square_free;
  row.irreducible_count_raw = total.irreducible_raw;
  row.irreducible_count_canonical = total.canonical.size();
  if (options.with_representatives)
    row.representatives.assign(total.canonical.begin(), total.canonical.end());
  return row;
}

inline std::vector<CensusRow> census_range(std::size_t from, std::size_t to,
                                           const CensusOptions& options = {}) {
  if (from < 3) raise(errc::too_short, "census needs length >= 3");
  if (to < from) raise(errc::out_of_range, "empty length range");
  std::vector<CensusRow> rows;
  rows.reserve(to - from + 1);
  for (std::size_t n = from; n <= to; ++n) rows.push_back(census(n, options));
  return rows;
}

/// True iff some irreducibly square-free word of length n exists; stops at
/// the first hit, so it must not be used for counting.
inline bool exists_irreducible(std::size_t n) {
  if (n < 3) raise(errc::too_short, "need length >= 3");
  bool found = false;
  Word buf, scratch;
  buf.reserve(n);
  detail::scan_square_free(n, buf, [&](const Word& w) {
    if (detail::is_irreducible_sf(w, 1, scratch)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace sfword
