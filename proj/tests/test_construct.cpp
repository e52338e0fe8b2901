#include <catch2/catch_amalgamated.hpp>

#include <sfword/construct.hpp>
#include <sfword/enumerate.hpp>

using namespace sfword;

TEST_CASE("small_word serves the table of lengths 3..17") {
  CHECK(small_word(6) == "010212");
  CHECK(small_word(17) == "01202120102120210");
  CHECK(small_word(17) == phi().image('0'));
  try {
    small_word(12);
    FAIL("expected NoSuchLength");
  } catch (const Error& e) {
    CHECK(e.code() == errc::no_such_length);
  }
  CHECK_THROWS_AS(small_word(4), Error);
  try {
    small_word(18);
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == errc::out_of_range);
  }
  CHECK_THROWS_AS(small_word(2), Error);
}

TEST_CASE("small words are genuine and minimal-length exact") {
  for (std::size_t n = 3; n <= 17; ++n) {
    if (n == 4 || n == 5 || n == 7 || n == 12) continue;
    const Word w = small_word(n);
    CHECK(w.size() == n);
    CHECK(is_irreducibly_square_free(w));
  }
}

TEST_CASE("special_word serves indices 1..16") {
  CHECK(special_word(1) == "1");
  CHECK(special_word(9) == "121020121");
  CHECK(special_word(16) == "0201021201020121");
  CHECK_THROWS_AS(special_word(0), Error);
  CHECK_THROWS_AS(special_word(17), Error);
}

TEST_CASE("special words have the advertised shapes") {
  for (std::size_t i = 1; i <= 16; ++i) {
    const Word w = special_word(i);
    CHECK(w.size() == i);
    CHECK(is_square_free(w));
    // indices settled by the 121/0102 extension argument carry the suffix
    const bool claimA_case = i == 1 || i == 2 || i == 4 || i == 5 || i == 10;
    if (!claimA_case) {
      const bool ends_121 = w.size() >= 3 && w.compare(w.size() - 3, 3, "121") == 0;
      const bool ends_0102 = w.size() >= 4 && w.compare(w.size() - 4, 4, "0102") == 0;
      CHECK((ends_121 || ends_0102));
    }
  }
}

TEST_CASE("verify_claim_A") {
  const ClaimAReport report = verify_claim_A(2000);
  CHECK(report.pass);
  CHECK(report.checks.size() == 32);
  for (const SuffixCheck& check : report.checks) {
    CHECK(check.pass);
    CHECK_FALSE(check.square.has_value());
  }
  CHECK_THROWS_AS(verify_claim_A(16), Error);
}

TEST_CASE("verify_claim_B") {
  const ClaimBReport report = verify_claim_B(2000);
  CHECK(report.pass);
  CHECK(report.with_121_pass);
  CHECK(report.with_0102_pass);
  CHECK(report.prefix8_matches);
  CHECK(report.prefix8_absent_from_phi);
  CHECK(("0102" + fixed_point_prefix(phi(), '0', 17)).substr(0, 8) == "01020120");
}

TEST_CASE("verify_special_words") {
  const SpecialWordsReport report = verify_special_words(2000);
  CHECK(report.pass);
  REQUIRE(report.checks.size() == 16);
  for (const SpecialWordCheck& check : report.checks) {
    CHECK(check.length_ok);
    CHECK(check.prefix_square_free);
    CHECK(check.with_phi0_irreducible);
  }
}

TEST_CASE("construct picks the documented branch") {
  const ConstructionTrace nine = construct(9);
  CHECK(nine.branch == ConstructionBranch::table2);
  CHECK(nine.result == "010212010");
  CHECK(nine.verified);

  const ConstructionTrace eighteen = construct(18);
  CHECK(eighteen.branch == ConstructionBranch::special_prefix);
  CHECK(eighteen.residue == 1);
  CHECK(eighteen.quotient == 1);
  CHECK(eighteen.result == "101202120102120210");
  CHECK(eighteen.result == "1" + phi().image('0'));

  const ConstructionTrace thirty_four = construct(34);
  CHECK(thirty_four.branch == ConstructionBranch::phi_power);
  CHECK(thirty_four.result == fixed_point_prefix(phi(), '0', 34));
  CHECK(thirty_four.result == apply_morphism(phi(), fixed_point_prefix(phi(), '0', 2)));
}

TEST_CASE("construct refuses the impossible lengths") {
  for (std::size_t n : {4u, 5u, 7u, 12u}) {
    try {
      construct(n);
      FAIL("expected NoSuchLength");
    } catch (const Error& e) {
      CHECK(e.code() == errc::no_such_length);
    }
    CHECK_FALSE(exists_irreducible(n));
  }
  CHECK_THROWS_AS(construct(2), Error);
}

TEST_CASE("construct covers lengths 3..120 with a recoverable decomposition") {
  for (std::size_t n = 3; n <= 120; ++n) {
    if (n == 4 || n == 5 || n == 7 || n == 12) continue;
    const ConstructionTrace trace = construct(n);
    CHECK(trace.verified);
    CHECK(trace.result.size() == n);
    if (n >= 18 && trace.residue != 0) {
      REQUIRE(trace.parts.size() == 2);
      CHECK(trace.parts[0] == special_word(trace.residue));
      CHECK(trace.parts[1] == fixed_point_prefix(phi(), '0', 17 * trace.quotient));
      CHECK(trace.result.substr(0, trace.residue) == trace.parts[0]);
      CHECK(trace.result.substr(trace.residue) == trace.parts[1]);
    }
  }
}

TEST_CASE("phi_prefix_gap_check") {
  const PrefixGapReport report = phi_prefix_gap_check();
  CHECK(report.pass);
  REQUIRE(report.entries.size() == 12);
  CHECK(report.entries.front().length == 17);
  CHECK(report.entries.front().irreducible);
  for (std::size_t i = 1; i < report.entries.size(); ++i) {
    const PrefixGapEntry& entry = report.entries[i];
    CHECK(entry.length == 18 + i);
    CHECK_FALSE(entry.irreducible);
    REQUIRE(entry.first_disposable.has_value());
    const Word prefix = fixed_point_prefix(phi(), '0', entry.length);
    CHECK(is_disposable(prefix, *entry.first_disposable));
  }
}
