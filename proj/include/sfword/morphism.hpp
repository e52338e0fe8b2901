#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sfword/disposability.hpp"
#include "sfword/word.hpp"

namespace sfword {

/// A morphism on ternary words, given by the images of the three letters.
/// Images are nonempty words; values are immutable after construction.
class Morphism {
 public:
  Morphism(Word image_of_0, Word image_of_1, Word image_of_2)
      : images_{std::move(image_of_0), std::move(image_of_1), std::move(image_of_2)} {
    for (int a = 0; a < 3; ++a) {
      if (images_[a].empty())
        raise(errc::bad_morphism, std::string("image of '") + char('0' + a) + "' is empty");
      images_[a] = parse_word(images_[a]);
    }
  }

  const Word& image(char letter) const { return images_[letter_index(letter)]; }
  std::size_t image_length(char letter) const { return image(letter).size(); }

  bool is_uniform() const {
    return images_[0].size() == images_[1].size() && images_[1].size() == images_[2].size();
  }

  /// image(letter) starts with letter and has length >= 2, so iterating
  /// the morphism on it converges to a fixed point.
  bool is_prolongable_on(char letter) const {
    const Word& im = image(letter);
    return im.size() >= 2 && im.front() == letter;
  }

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  std::array<Word, 3> images_;
};

inline Word apply_morphism(const Morphism& m, const Word& w) {
  std::size_t total = 0;
  for (char c : w) total += m.image_length(c);
  Word out;
  out.reserve(total);
  for (char c : w) out += m.image(c);
  return out;
}

inline Morphism power(const Morphism& m, std::size_t n) {
  if (n < 1) raise(errc::out_of_range, "power needs n >= 1");
  Morphism result = m;
  for (std::size_t i = 1; i < n; ++i) {
    result = Morphism(apply_morphism(m, result.image('0')), apply_morphism(m, result.image('1')),
                      apply_morphism(m, result.image('2')));
  }
  return result;
}

/// Length-L prefix of the fixed point obtained by iterating m on seed.
/// Streams the expansion, so at most one image length beyond L is ever
/// materialized.
inline Word fixed_point_prefix(const Morphism& m, char seed, std::size_t length) {
  if (!is_letter(seed)) raise(errc::invalid_character, "seed must be 0, 1 or 2");
  if (!m.is_prolongable_on(seed))
    raise(errc::not_prolongable,
          std::string("image of '") + seed + "' does not start with it or is a single letter");
  Word buf = m.image(seed);
  std::size_t next = 1;  // buf == m(buf[0..next)) stays a fixed-point prefix
  while (buf.size() < length) {
    buf += m.image(buf[next]);
    ++next;
  }
  buf.resize(length);
  return buf;
}

// Built-in morphisms. tau generates the Thue word; phi is the uniform
// palindromic morphism of length 17 whose images stay irreducibly
// square-free under concatenation; alpha3 generates a 3-irreducibly
// square-free word.
inline const Morphism& tau() {
  static const Morphism m{"012", "02", "1"};
  return m;
}

inline const Morphism& phi() {
  static const Morphism m{"01202120102120210", "12010201210201021", "20121012021012102"};
  return m;
}

inline const Morphism& alpha3() {
  static const Morphism m{"0121012", "01020120212", "0102101210212"};
  return m;
}

/// Square-freeness preservation probed on every square-free word of
/// length <= 5; by Crochemore's criterion that decides preservation for
/// all square-free words.
struct CrochemoreResult {
  struct Witness {
    Word input;            // square-free word whose image has a square
    SquareWitness square;  // inside the image
  };

  bool pass = true;
  std::optional<Witness> witness;
};

inline CrochemoreResult crochemore_test(const Morphism& m) {
  CrochemoreResult result;
  Word buf;
  for (std::size_t n = 1; n <= 5 && result.pass; ++n) {
    buf.clear();
    detail::scan_square_free(n, buf, [&](const Word& w) {
      const Word image = apply_morphism(m, w);
      if (auto square = find_square(image)) {
        result.pass = false;
        result.witness = CrochemoreResult::Witness{w, *square};
        return false;
      }
      return true;
    });
  }
  return result;
}

/// Alignment property: any occurrence of image(a) inside image(b)·image(c)
/// must be flush left with a=b or flush right with a=c.
struct AlignmentResult {
  struct Witness {
    char a = '0';
    char b = '0';
    char c = '0';
    std::size_t offset = 0;
  };

  bool pass = true;
  std::optional<Witness> witness;
};

inline AlignmentResult alignment_test(const Morphism& m) {
  for (char b : alphabet) {
    for (char c : alphabet) {
      const Word pair = m.image(b) + m.image(c);
      for (char a : alphabet) {
        const Word& im = m.image(a);
        if (im.size() > pair.size()) continue;
        for (std::size_t off = 0; off + im.size() <= pair.size(); ++off) {
          if (pair.compare(off, im.size(), im) != 0) continue;
          const bool flush_left = off == 0 && a == b;
          const bool flush_right = off + im.size() == pair.size() && a == c;
          if (!flush_left && !flush_right)
            return AlignmentResult{false, AlignmentResult::Witness{a, b, c, off}};
        }
      }
    }
  }
  return AlignmentResult{};
}

/// One pair check of Procedure I: is image(a)·image(b) k-irreducibly
/// square-free? If the pair word itself has a square the report is absent
/// and the square is recorded instead.
struct PairCheck {
  char a = '0';
  char b = '0';
  bool pass = false;
  std::optional<SquareWitness> square_in_image;
  std::optional<IrreducibilityReport> report;
};

struct MorphismCertificate {
  CrochemoreResult crochemore;
  AlignmentResult alignment;
  std::size_t k = 1;
  std::vector<PairCheck> pair_checks;  // ordered pairs (a,b), a != b, lexicographic

  bool pass() const {
    if (!crochemore.pass) return false;
    for (const PairCheck& pc : pair_checks)
      if (!pc.pass) return false;
    return true;
  }
};

/// Procedure I with pair checks at factor length k: the Crochemore test
/// plus k-irreducibility of all six two-letter images. Requires every
/// image to have length > 1.
inline MorphismCertificate procedure_I_k(const Morphism& m, std::size_t k) {
  for (char a : alphabet) {
    if (m.image_length(a) < 2)
      raise(errc::image_too_short,
            std::string("image of '") + a + "' has length 1; the procedure needs |image| > 1");
  }
  MorphismCertificate cert;
  cert.k = k;
  cert.crochemore = crochemore_test(m);
  cert.alignment = alignment_test(m);
  for (char a : alphabet) {
    for (char b : alphabet) {
      if (a == b) continue;
      PairCheck pc;
      pc.a = a;
      pc.b = b;
      const Word pair = m.image(a) + m.image(b);
      if (auto square = find_square(pair)) {
        pc.pass = false;
        pc.square_in_image = *square;
      } else {
        pc.report = k_irreducibility_report(pair, k);
        pc.pass = pc.report->verdict;
      }
      cert.pair_checks.push_back(std::move(pc));
    }
  }
  return cert;
}

inline MorphismCertificate procedure_I(const Morphism& m) { return procedure_I_k(m, 1); }

/// Morphism spec file format: exactly one line per letter,
/// `a -> image`, whitespace around the arrow ignored, blank lines skipped.
inline Morphism parse_morphism_spec(std::string_view text) {
  std::array<std::optional<Word>, 3> images;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto bad = [&](const std::string& what) {
      raise(errc::bad_morphism, "line " + std::to_string(line_no) + ": " + what);
    };
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;  // blank line
    std::size_t last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (!is_letter(line[0])) bad("expected a letter 0, 1 or 2 before '->'");
    const char letter = line[0];
    std::size_t arrow = line.find("->");
    if (arrow == std::string_view::npos) bad("missing '->'");
    std::string_view head = line.substr(1, arrow - 1);
    if (head.find_first_not_of(" \t") != std::string_view::npos)
      bad("unexpected text before '->'");
    std::string_view tail = line.substr(arrow + 2);
    std::size_t word_begin = tail.find_first_not_of(" \t");
    if (word_begin == std::string_view::npos) bad("empty image");
    std::size_t word_end = tail.find_last_not_of(" \t");
    std::string_view word_text = tail.substr(word_begin, word_end - word_begin + 1);
    if (images[letter_index(letter)])
      bad(std::string("duplicate image for '") + letter + "'");
    for (char c : word_text) {
      if (!is_letter(c)) bad(std::string("invalid character '") + c + "' in image");
    }
    images[letter_index(letter)] = Word(word_text);
  }
  for (int a = 0; a < 3; ++a) {
    if (!images[a])
      raise(errc::bad_morphism, std::string("no image given for '") + char('0' + a) + "'");
  }
  return Morphism(std::move(*images[0]), std::move(*images[1]), std::move(*images[2]));
}

/// Renders a morphism in the spec file format (parse_morphism_spec
/// round-trips it).
inline std::string format_morphism_spec(const Morphism& m) {
  std::string out;
  for (char a : alphabet) {
    out += a;
    out += " -> ";
    out += m.image(a);
    out += '\n';
  }
  return out;
}

}  // namespace sfword
