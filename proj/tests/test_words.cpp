#include <doctest.h>

#include <random>

#include "lexleast/overlapfree.hpp"
#include "lexleast/words.hpp"
#include "test_helpers.hpp"

using namespace lexleast;

TEST_CASE("rotate_right basics") {
  CHECK(rotate_right(parse_word("001"), std::size_t{1}) == parse_word("100"));
  CHECK(rotate_right(parse_word("001"), std::size_t{3}) == parse_word("001"));
  CHECK(rotate_right(parse_word("001"), std::size_t{0}) == parse_word("001"));
  CHECK_THROWS_AS(rotate_right(Word{}, std::size_t{1}), std::domain_error);
}

TEST_CASE("rotate_right by a table amount") {
  // the last a(0,1) = 3 letters of psi(0,2) move to the front
  const Word w = psi(0, 2);
  REQUIRE(w == parse_word("0010011001002"));
  CHECK(rotate_right(w, a(0, 1)) == parse_word("0020010011001"));
}

TEST_CASE("reverse") {
  CHECK(reverse(parse_word("001")) == parse_word("100"));
  CHECK(reverse(Word{}) == Word{});
  const Word w = psi(0, 2);
  CHECK(reverse(w) == rotate_right(w, std::size_t{1}));
}

TEST_CASE("lex_compare") {
  CHECK(lex_compare(parse_word("01"), parse_word("02")) == LexOrder::Less);
  CHECK(lex_compare(parse_word("01"), parse_word("010")) == LexOrder::XPrefixOfY);
  CHECK(lex_compare(parse_word("0102012"), parse_word("01020100")) == LexOrder::Greater);
  CHECK(lex_compare(parse_word("010"), parse_word("01")) == LexOrder::YPrefixOfX);
  CHECK(lex_compare(Word{}, Word{}) == LexOrder::Equal);
}

TEST_CASE("count_letter") {
  CHECK(count_letter(parse_word("001"), 0) == 2);
  CHECK(count_letter(psi(0, 2), 1) == 4);
  CHECK(count_letter(psi(0, 3), 3) == 1);
  CHECK(count_letter(Word{}, 0) == 0);
}

TEST_CASE("concat, prefix, suffix, removal") {
  const Word w = parse_word("0102");
  CHECK(parse_word("01") + parse_word("02") == w);
  CHECK(prefix(w, 2) == parse_word("01"));
  CHECK(suffix(w, 2) == parse_word("02"));
  CHECK(remove_prefix(parse_word("01"), w) == parse_word("02"));
  CHECK(remove_suffix(w, parse_word("02")) == parse_word("01"));
  CHECK_THROWS_AS(remove_prefix(parse_word("1"), w), std::invalid_argument);
  CHECK_THROWS_AS(remove_suffix(w, parse_word("1")), std::invalid_argument);
  CHECK(remove_prefix(Word{}, w) == w);
}

TEST_CASE("factor search") {
  const Word w = parse_word("0102010");
  CHECK(is_factor(parse_word("020"), w));
  CHECK(!is_factor(parse_word("00"), w));
  CHECK(find_factor(parse_word("2"), w) == 4);
  CHECK(find_factor(Word{}, w) == 1);
  CHECK(!find_factor(parse_word("3"), w).has_value());
}

TEST_CASE("rendering and parsing") {
  CHECK(to_string(parse_word("0102")) == "0102");
  CHECK(to_string(Word{}) == "");
  CHECK(to_string(Word{10, 0, 11}) == "10,0,11");
  CHECK(parse_word("10,0,11") == Word{10, 0, 11});
  CHECK(parse_word("") == Word{});
  CHECK_THROWS_AS(parse_word("1a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("3,,4"), std::invalid_argument);
}

TEST_CASE("1-based indexing round trip") {
  const Word w = parse_word("0102013");
  Word rebuilt;
  for (std::size_t pos = 1; pos <= w.size(); ++pos) rebuilt.push_back(w.letter_at(pos));
  CHECK(rebuilt == w);
  CHECK_THROWS_AS(w.letter_at(0), std::out_of_range);
  CHECK_THROWS_AS(w.letter_at(8), std::out_of_range);
}

TEST_CASE("rotation and reversal properties") {
  std::mt19937 rng(20240901);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t len = 1 + rng() % 24;
    const Word w = oracle::random_word(rng, len, 5);
    const std::size_t m = rng() % 100;
    CHECK(rotate_right(w, m) == rotate_right(w, m % w.size()));
    CHECK(reverse(reverse(w)) == w);
    Word spun = w;
    for (std::size_t i = 0; i < w.size(); ++i) spun = rotate_right(spun, std::size_t{1});
    CHECK(spun == w);
  }
}

TEST_CASE("lexicographic order is consistent with prefix extension") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    const Word x = oracle::random_word(rng, 1 + rng() % 10, 3);
    const Word y = oracle::random_word(rng, 1 + rng() % 10, 3);
    if (lex_compare(x, y) != LexOrder::Less) continue;
    const Word z = oracle::random_word(rng, rng() % 6, 3);
    CHECK(lex_compare(x + z, y) == LexOrder::Less);
  }
}
