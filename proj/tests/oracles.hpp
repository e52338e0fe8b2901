#pragma once

// Brute-force reference implementations for the property tests. These
// deliberately avoid the library's pruned scans: squares are found by
// enumerating every (start, half_length) pair with direct character
// comparison, and word sets come from filtering all 3^n words.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <sfword/word.hpp>

namespace oracle {

using sfword::Word;

inline bool halves_equal(const Word& w, std::size_t start, std::size_t half) {
  for (std::size_t i = 0; i < half; ++i)
    if (w[start + i] != w[start + half + i]) return false;
  return true;
}

/// Minimal square by (start, then half_length), chosen from the full list
/// of matches rather than by scan order.
inline std::optional<sfword::SquareWitness> find_square_cubic(const Word& w) {
  std::optional<sfword::SquareWitness> best;
  for (std::size_t start = 0; start < w.size(); ++start) {
    for (std::size_t half = 1; start + 2 * half <= w.size(); ++half) {
      if (!halves_equal(w, start, half)) continue;
      if (!best || start < best->start || (start == best->start && half < best->half_length))
        best = sfword::SquareWitness{start, half};
    }
  }
  return best;
}

inline bool is_square_free(const Word& w) { return !find_square_cubic(w).has_value(); }

/// Calls f on every word of length n over {0,1,2}, in lexicographic order.
template <typename F>
void for_each_word(std::size_t n, F&& f) {
  Word w(n, '0');
  for (;;) {
    f(const_cast<const Word&>(w));
    std::size_t i = n;
    while (i > 0 && w[i - 1] == '2') w[--i] = '0';
    if (i == 0) return;
    ++w[i - 1];
  }
}

inline std::vector<Word> square_free_words(std::size_t n) {
  std::vector<Word> out;
  for_each_word(n, [&](const Word& w) {
    if (is_square_free(w)) out.push_back(w);
  });
  return out;
}

/// Irreducibility by definition: delete every interior length-k factor and
/// run the cubic square search on the remainder.
inline bool is_k_irreducible(const Word& w, std::size_t k) {
  for (std::size_t start = 1; start + k + 1 <= w.size(); ++start) {
    Word deleted = w.substr(0, start) + w.substr(start + k);
    if (is_square_free(deleted)) return false;
  }
  return true;
}

inline bool is_irreducible(const Word& w) { return is_k_irreducible(w, 1); }

inline Word random_word(std::mt19937& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> length_dist(0, max_length);
  std::uniform_int_distribution<int> letter_dist(0, 2);
  Word w(length_dist(rng), '0');
  for (char& c : w) c = static_cast<char>('0' + letter_dist(rng));
  return w;
}

}  // namespace oracle
