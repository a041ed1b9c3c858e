#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stabpat/errors.hpp"
#include "stabpat/patterns.hpp"

using namespace stabpat;

TEST_CASE("pattern grammar")
{
  const auto p = parse_pattern("1-23");
  CHECK(p.length() == 3);
  CHECK(p.adjacency() == std::vector<bool>{false, true});
  CHECK_FALSE(p.is_classical());
  CHECK_FALSE(p.is_consecutive());
  CHECK(parse_pattern("1-2-3").is_classical());
  CHECK(parse_pattern("123").is_consecutive());
  CHECK(parse_pattern("123").is_monotone());
  CHECK_FALSE(parse_pattern("132").is_monotone());
  CHECK(format_pattern(parse_pattern("11-2")) == "11-2");
  CHECK(format_pattern(parse_pattern("1,10-2,3,4,5,6,7,8,9")) == "1,10-2,3,4,5,6,7,8,9");
  CHECK_THROWS_AS(parse_pattern(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("13"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("1--2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("-12"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("12-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("102"), std::invalid_argument);
}

TEST_CASE("worked occurrence counts")
{
  const auto w = parse_word("321432212");
  CHECK(count_occurrences(parse_pattern("1-2"), w) == 9);
  CHECK(count_occurrences(parse_pattern("1-2-3"), parse_word("211342")) == 3);
  CHECK(avoids(parse_pattern("132"), parse_word("211342")));
  CHECK(count_occurrences(parse_pattern("12"), parse_word("11213")) == 2);
  CHECK(count_occurrences(parse_pattern("11"), parse_word("11213")) == 1);
  CHECK(count_occurrences(parse_pattern("1-1"), parse_word("11213")) == 3);
}

TEST_CASE("every counting path agrees with the subset oracle")
{
  std::mt19937 rng(20240611);
  const std::vector<std::string> patterns{"1-2",  "2-1", "12",   "11",    "1-1-2", "112",
                                          "1-23", "132", "2-13", "11-2",  "1-12",  "2-1-3",
                                          "3142", "1-32", "1-2-1", "121", "21-3-1"};
  for (const auto& text : patterns) {
    const auto p = parse_pattern(text);
    const OccurrenceMatcher matcher(p);
    const auto rp = oracle::pattern(text);
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<int> len(0, 11), letter(1, 4);
      std::vector<Letter> letters(static_cast<std::size_t>(len(rng)));
      for (auto& l : letters)
        l = static_cast<Letter>(letter(rng));
      const Word w(letters);
      const auto expected = oracle::count(rp, w.letters());
      CAPTURE(text);
      CAPTURE(w.to_string());
      CHECK(matcher.count_small(w.view()) == expected);
      CHECK(matcher.count_by_memo(w.view()) == to_big(expected));
      CHECK(matcher.count(w.view()) == to_big(expected));
      if (!p.is_consecutive())
        CHECK(matcher.count_by_search(w.view()) == expected);
    }
  }
}

TEST_CASE("long words use the exact memoized count")
{
  // 40 copies of 1 followed by 40 copies of 2: C(40,1)*C(40,2) occurrences of 1-2-2.
  std::vector<Letter> letters(40, 1);
  letters.resize(80, 2);
  const Word w(letters);
  CHECK(count_occurrences(parse_pattern("1-2-2"), w) == 40 * 780);
  CHECK(OccurrenceMatcher(parse_pattern("1-2-2")).count_by_memo(w.view()) == 40 * 780);
}

TEST_CASE("distributions agree with the oracle and ignore thread count")
{
  for (const std::string text : {"1-2", "21", "1-23", "132", "11-2"}) {
    for (const auto& k : oracle::compositions(6, 3)) {
      const auto expected = oracle::distribution(k, text);
      const auto one = distribution(Multiset(k), parse_pattern(text), {kDefaultBudget, 1});
      const auto many = distribution(Multiset(k), parse_pattern(text), {kDefaultBudget, 6});
      CHECK(one == many);
      REQUIRE(one.counts.size() == expected.size());
      for (const auto& [s, n] : expected)
        CHECK(one.at(s) == to_big(n));
      CHECK(one.total() == count_words(Multiset(k)));
    }
  }
}

TEST_CASE("budget is enforced before enumeration")
{
  CHECK_THROWS_AS(distribution(Multiset{3, 3, 3}, parse_pattern("12"), {100, 1}),
                  BudgetExceeded);
  CHECK_NOTHROW(distribution(Multiset{3, 3, 3}, parse_pattern("12"), {1680, 1}));
}
