#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sfword {

/// Words over the ternary alphabet {0,1,2} are plain strings of the
/// characters '0', '1', '2'. Lexicographic string order (0 < 1 < 2) is the
/// word order used throughout the library.
using Word = std::string;

inline constexpr std::string_view alphabet{"012"};

enum class errc {
  invalid_character,
  bad_morphism,
  not_interior,
  not_square_free,
  too_short,
  out_of_range,
  no_such_length,
  verification_failed,
  image_too_short,
  not_prolongable,
  no_recurrence,
};

inline std::string_view errc_name(errc code) {
  switch (code) {
    case errc::invalid_character: return "InvalidCharacter";
    case errc::bad_morphism: return "BadMorphism";
    case errc::not_interior: return "NotInterior";
    case errc::not_square_free: return "NotSquareFree";
    case errc::too_short: return "TooShort";
    case errc::out_of_range: return "OutOfRange";
    case errc::no_such_length: return "NoSuchLength";
    case errc::verification_failed: return "VerificationFailed";
    case errc::image_too_short: return "ImageTooShort";
    case errc::not_prolongable: return "NotProlongable";
    case errc::no_recurrence: return "NoRecurrence";
  }
  return "UnknownError";
}

/// Domain error; code() tells callers which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

inline bool is_letter(char c) noexcept { return c == '0' || c == '1' || c == '2'; }

/// Index 0..2 of a letter character.
inline int letter_index(char c) noexcept { return c - '0'; }

/// Validates that text is a word over {0,1,2} and returns it.
inline Word parse_word(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_letter(text[i]))
      raise(errc::invalid_character,
            "'" + std::string(1, text[i]) + "' at position " + std::to_string(i));
  }
  return Word(text);
}

/// A square uu inside a word: w[start, start+half) equals
/// w[start+half, start+2*half).
struct SquareWitness {
  std::size_t start = 0;
  std::size_t half_length = 0;

  friend bool operator==(const SquareWitness&, const SquareWitness&) = default;
};

/// The factor uu itself.
inline Word square_content(const Word& w, const SquareWitness& sq) {
  return w.substr(sq.start, 2 * sq.half_length);
}

/// True iff the witness points at a genuine square of w.
inline bool square_holds(const Word& w, const SquareWitness& sq) {
  if (sq.half_length == 0 || sq.start + 2 * sq.half_length > w.size()) return false;
  return w.compare(sq.start, sq.half_length, w, sq.start + sq.half_length, sq.half_length) == 0;
}

/// First square by (start, then half_length); absent iff w is square-free.
inline std::optional<SquareWitness> find_square(const Word& w) {
  const char* s = w.data();
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t h = 1; i + 2 * h <= n; ++h) {
      if (s[i] == s[i + h] && std::memcmp(s + i + 1, s + i + h + 1, h - 1) == 0)
        return SquareWitness{i, h};
    }
  }
  return std::nullopt;
}

/// Whole-word square test, scanning square end positions. The boundary
/// letter comparison rejects almost every candidate in one step, which
/// keeps this usable on fixed-point prefixes of length 1e5.
inline bool is_square_free(const Word& w) {
  const char* s = w.data();
  const std::size_t n = w.size();
  for (std::size_t e = 2; e <= n; ++e) {
    const char last = s[e - 1];
    for (std::size_t h = 1; 2 * h <= e; ++h) {
      if (s[e - 1 - h] == last && std::memcmp(s + e - 2 * h, s + e - h, h - 1) == 0)
        return false;
    }
  }
  return true;
}

/// Suffix test: given square-free w, is w·a square-free? Only squares
/// ending at the appended letter need inspection, so this is one
/// half-length sweep instead of a full rescan.
inline bool extends_square_free(const Word& w, char a) {
  const char* s = w.data();
  const std::size_t m = w.size() + 1;
  for (std::size_t h = 1; 2 * h <= m; ++h) {
    if (s[m - 1 - h] == a && std::memcmp(s + m - 2 * h, s + m - h, h - 1) == 0) return false;
  }
  return true;
}

/// One of the 12 word symmetries: a letter permutation plus optional
/// reversal.
struct Symmetry {
  std::array<char, 3> permutation{{'0', '1', '2'}};  // image of letter i
  bool reversed = false;
};

/// All 12 symmetries, permutations in lexicographic order, plain before
/// reversed.
inline const std::array<Symmetry, 12>& all_symmetries() {
  static const std::array<Symmetry, 12> table = [] {
    std::array<Symmetry, 12> out{};
    std::array<char, 3> perm{{'0', '1', '2'}};
    std::size_t i = 0;
    do {
      out[i++] = Symmetry{perm, false};
      out[i++] = Symmetry{perm, true};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return table;
}

inline Word apply_symmetry(const Word& w, const Symmetry& s) {
  Word out(w.size(), '0');
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[s.reversed ? w.size() - 1 - i : i] = s.permutation[letter_index(w[i])];
  }
  return out;
}

/// Least word in the 12-element symmetry orbit; the representative used
/// when counting up to isomorphism and reversal.
inline Word canonical_key(const Word& w) {
  Word best = w;  // the identity is among the symmetries
  for (const Symmetry& s : all_symmetries()) {
    Word image = apply_symmetry(w, s);
    if (image < best) best = std::move(image);
  }
  return best;
}

namespace detail {

/// Depth-first expansion of buf (assumed square-free) to every square-free
/// word of length n with buf as prefix, in lexicographic order. The
/// visitor returns false to abort the whole scan. Returns false iff
/// aborted.
template <typename Visitor>
bool scan_square_free(std::size_t n, Word& buf, Visitor&& visit) {
  if (buf.size() == n) return visit(const_cast<const Word&>(buf));
  for (char a : alphabet) {
    if (!extends_square_free(buf, a)) continue;
    buf.push_back(a);
    const bool keep_going = scan_square_free(n, buf, visit);
    buf.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace detail

}  // namespace sfword
