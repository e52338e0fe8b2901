// Acceptance suite: one line per criterion, exit code = number of failures.
// Everything here is exact; the bounded claim checks run at depth 1e4.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <sfword/sfword.hpp>

#include "oracles.hpp"

using namespace sfword;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string note;
  try {
    pass = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  if (!pass) ++failures;
  std::printf("[%s] %2d. %s%s (%lld ms)\n", pass ? "PASS" : "FAIL", number, title.c_str(),
              note.c_str(), static_cast<long long>(elapsed));
  std::fflush(stdout);
}

constexpr std::array<std::uint64_t, 28> table1{1,  0,  0,  1,  0,  1,  1,  1,  3,  0,
                                               3,  4,  4,  7,  9,  7,  12, 12, 16, 18,
                                               23, 24, 34, 36, 48, 55, 69, 78};

std::vector<CensusRow> census_rows_threads1;

}  // namespace

int main() {
  criterion(1, "Table 1 reproduction: census 3..30 up to isomorphism and reversal", [] {
    CensusOptions options;
    options.threads = 1;
    census_rows_threads1 = census_range(3, 30, options);
    if (census_rows_threads1.size() != table1.size()) return false;
    for (std::size_t i = 0; i < table1.size(); ++i) {
      const CensusRow& row = census_rows_threads1[i];
      if (row.irreducible_count_canonical != table1[i]) return false;
      // raw multiplicities lie between 1 and 12 per class
      if (row.irreducible_count_raw < row.irreducible_count_canonical) return false;
      if (row.irreducible_count_raw > 12 * row.irreducible_count_canonical) return false;
    }
    return true;
  });

  criterion(2, "nonexistence at lengths 4, 5, 7 and 12", [] {
    for (std::size_t n : {4u, 5u, 7u, 12u}) {
      if (exists_irreducible(n)) return false;
      const CensusRow row = census(n);
      if (row.irreducible_count_raw != 0 || row.irreducible_count_canonical != 0) return false;
    }
    return true;
  });

  criterion(3, "length 9 has the single palindromic class 010212010", [] {
    CensusOptions options;
    options.with_representatives = true;
    const CensusRow row = census(9, options);
    if (row.irreducible_count_canonical != 1) return false;
    if (row.representatives != std::vector<Word>{"010212010"}) return false;
    const Word& rep = row.representatives[0];
    return rep == Word(rep.rbegin(), rep.rend());
  });

  criterion(4, "the phi suite: Crochemore, alignment, images, deletion squares", [] {
    if (!crochemore_test(phi()).pass) return false;
    if (!alignment_test(phi()).pass) return false;
    for (char a : alphabet)
      if (!is_irreducibly_square_free(phi().image(a))) return false;
    const struct {
      const char* pair;
      DeletionSite site;
      const char* square;
    } expected[] = {{"01", {16, 1}, "11"},
                    {"02", {16, 1}, "02120212"},
                    {"01", {17, 1}, "10201020"},
                    {"02", {17, 1}, "00"}};
    for (const auto& e : expected) {
      const Word deleted = delete_factor(apply_morphism(phi(), e.pair), e.site);
      const auto square = find_square(deleted);
      if (!square || square_content(deleted, *square) != e.square) return false;
    }
    return true;
  });

  criterion(5, "phi fixed-point prefixes: length 17 passes, 19..29 all fail", [] {
    if (!is_irreducibly_square_free(fixed_point_prefix(phi(), '0', 17))) return false;
    for (std::size_t n = 19; n <= 29; ++n)
      if (is_irreducibly_square_free(fixed_point_prefix(phi(), '0', n))) return false;
    return phi_prefix_gap_check().pass;
  });

  criterion(6, "Claims A and B at depth 1e4, flagged bounded", [] {
    const ClaimAReport a = verify_claim_A(10000);
    if (!a.pass || a.checks.size() != 32) return false;
    for (const SuffixCheck& check : a.checks)
      if (!check.pass) return false;
    const ClaimBReport b = verify_claim_B(10000);
    if (!b.pass) return false;
    const ClaimResult claim_a = replicate_claim_A(10000);
    const ClaimResult claim_b = replicate_claim_B(10000);
    return claim_a.verdict && claim_a.bounded && claim_b.verdict && claim_b.bounded;
  });

  criterion(7, "construct yields a verified word for every admissible length in 3..300", [] {
    for (std::size_t n = 3; n <= 300; ++n) {
      if (n == 4 || n == 5 || n == 7 || n == 12) {
        try {
          construct(n);
          return false;
        } catch (const Error& e) {
          if (e.code() != errc::no_such_length) return false;
        }
        continue;
      }
      const ConstructionTrace trace = construct(n);
      if (!trace.verified || trace.result.size() != n) return false;
    }
    return true;
  });

  criterion(8, "Example 2: tau^5 facts and the 121-suffix failures", [] {
    const Morphism tau5 = power(tau(), 5);
    if (tau5.image_length('0') != 48 || tau5.image_length('1') != 32 ||
        tau5.image_length('2') != 16)
      return false;
    const Word p = "012021";
    for (char a : alphabet)
      if (tau5.image(a).compare(0, p.size(), p) != 0) return false;
    if (!is_k_irreducible(tau5.image('1') + p, 2)) return false;
    if (!is_k_irreducible(tau5.image('2') + p, 2)) return false;

    const Word w0p = tau5.image('0') + p;
    std::vector<std::pair<std::size_t, Word>> disposable;
    for (std::size_t s = 1; s + 3 <= w0p.size(); ++s)
      if (is_square_free(delete_factor(w0p, {s, 2}))) disposable.push_back({s, w0p.substr(s, 2)});
    const std::vector<std::pair<std::size_t, Word>> expected{{50, "20"}, {51, "02"}};
    if (disposable != expected) return false;

    for (std::size_t exponent : {4u, 6u}) {
      const Word w = power(tau(), exponent).image('0');
      if (w.compare(w.size() - 3, 3, "121") != 0) return false;
      if (is_k_irreducible(w, 2)) return false;
    }
    return true;
  });

  criterion(9, "alpha3 passes Crochemore and all six pairs are 3-irreducible", [] {
    if (!crochemore_test(alpha3()).pass) return false;
    const MorphismCertificate cert = procedure_I_k(alpha3(), 3);
    if (cert.pair_checks.size() != 6) return false;
    for (const PairCheck& pc : cert.pair_checks)
      if (!pc.pass) return false;
    return cert.pass();
  });

  criterion(10, "property suites against the brute-force oracles", [] {
    // find_square == cubic oracle on every word of length <= 14
    for (std::size_t n = 0; n <= 14; ++n) {
      bool ok = true;
      oracle::for_each_word(n, [&](const Word& w) {
        if (find_square(w) != oracle::find_square_cubic(w)) ok = false;
      });
      if (!ok) return false;
    }
    // ... and on 1e4 random words of length <= 50
    std::mt19937 rng(987654321);
    for (int i = 0; i < 10000; ++i) {
      const Word w = oracle::random_word(rng, 50);
      if (find_square(w) != oracle::find_square_cubic(w)) return false;
    }
    // canonical_key: idempotent and orbit-constant on 1e4 random words
    for (int i = 0; i < 10000; ++i) {
      const Word w = oracle::random_word(rng, 30);
      const Word key = canonical_key(w);
      if (canonical_key(key) != key) return false;
      for (const Symmetry& s : all_symmetries())
        if (canonical_key(apply_symmetry(w, s)) != key) return false;
    }
    // census counts invariant under threads in {1, 4}
    CensusOptions four;
    four.threads = 4;
    const auto threaded = census_range(3, 30, four);
    if (threaded.size() != census_rows_threads1.size()) return false;
    for (std::size_t i = 0; i < threaded.size(); ++i)
      if (threaded[i] != census_rows_threads1[i]) return false;
    // square-free counts for n <= 12 match the filter-all-3^n oracle
    for (std::size_t n = 0; n <= 12; ++n) {
      std::uint64_t expected = 0;
      oracle::for_each_word(n, [&](const Word& w) {
        if (oracle::is_square_free(w)) ++expected;
      });
      if (enumerate_square_free(n, [](const Word&) {}) != expected) return false;
    }
    return true;
  });

  criterion(11, "202 square-free classes of length 20 up to isomorphism and reversal", [] {
    std::set<Word> classes;
    enumerate_square_free(20, [&](const Word& w) { classes.insert(canonical_key(w)); });
    return classes.size() == 202;
  });

  if (failures == 0)
    std::printf("all acceptance criteria pass\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
