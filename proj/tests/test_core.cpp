#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "stabpat/core.hpp"

using namespace stabpat;

TEST_CASE("multiset construction drops zero multiplicities")
{
  const Multiset m{2, 0, 4, 2, 1};
  CHECK(m.letters() == 4);
  CHECK(m.size() == 9);
  CHECK(m.to_string() == "(2,4,2,1)");
  CHECK(m.multiplicity(2) == 4);
  CHECK_THROWS_AS(m.multiplicity(5), std::out_of_range);
  CHECK(m.sorted_key() == std::vector<std::uint32_t>{4, 2, 2, 1});
}

TEST_CASE("word counts match the multinomial")
{
  CHECK(count_words(Multiset{2, 4, 2, 1}) == 3780);
  CHECK(count_words(Multiset{1, 1, 1}) == 6);
  CHECK(count_words(Multiset{}) == 1);
  CHECK(count_words_u64(Multiset{3, 1, 1}) == 20);
}

TEST_CASE("enumeration agrees with the recursive oracle")
{
  for (std::uint32_t size = 1; size <= 6; ++size) {
    for (const auto& k : oracle::compositions(size, 3)) {
      const auto expected = oracle::words(k);
      const auto got = enumerate_words(Multiset(k));
      REQUIRE(got.size() == expected.size());
      for (std::size_t t = 0; t < got.size(); ++t)
        CHECK(got[t].letters() == expected[t]);
    }
  }
}

TEST_CASE("shards concatenate to the full lexicographic stream")
{
  const Multiset m{2, 3, 1, 2};
  std::vector<std::vector<Letter>> streamed;
  for (const auto& prefix : shard_prefixes(m, 17))
    for_each_word(m, prefix, [&](std::span<const Letter> w) {
      streamed.emplace_back(w.begin(), w.end());
    });
  const auto all = enumerate_words(m);
  REQUIRE(streamed.size() == all.size());
  for (std::size_t t = 0; t < all.size(); ++t)
    CHECK(streamed[t] == all[t].letters());
}

TEST_CASE("transpositions and sigma")
{
  const Multiset m{2, 4, 2, 1};
  CHECK(transpose_multiset(m, Transposition{1}) == Multiset{4, 2, 2, 1});
  CHECK(transpose_multiset(m, Transposition{3}) == Multiset{2, 4, 1, 2});
  CHECK_THROWS_AS(transpose_multiset(m, Transposition{4}), std::out_of_range);
  const std::vector<Letter> sigma{2, 1, 3};
  CHECK(apply_sigma(sigma, parse_word("1132")).to_string() == "2231");
}

TEST_CASE("orbit and canonical multisets")
{
  const auto orbit = multiplicity_rearrangements(Multiset{2, 1, 1});
  CHECK(orbit.size() == 3);
  CHECK(orbit.front() == Multiset{1, 1, 2});
  const auto parts = canonical_multisets(4, 4);
  REQUIRE(parts.size() == 5);
  CHECK(parts.front() == Multiset{4});
  CHECK(parts.back() == Multiset{1, 1, 1, 1});
  CHECK(canonical_multisets(4, 2).size() == 3);
}

TEST_CASE("text forms")
{
  CHECK(parse_multiset("(2,4,2,1)") == Multiset{2, 4, 2, 1});
  CHECK(parse_word("321432212").size() == 9);
  CHECK(parse_word("10,2,1").to_string() == "10,2,1");
  CHECK_THROWS(parse_word("302"));
  CHECK_THROWS(parse_multiset("(2,x)"));
  CHECK_THROWS(Word({1, 0}));
}

TEST_CASE("lexicographic successor stops after the last word")
{
  std::vector<Letter> w{2, 1, 1};
  CHECK_FALSE(next_word(w));
  CHECK(w == std::vector<Letter>{1, 1, 2});
  CHECK(next_word(w));
  CHECK(w == std::vector<Letter>{1, 2, 1});
}
