#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "stabpat/bijections.hpp"
#include "stabpat/patterns.hpp"

using namespace stabpat;

namespace {

std::uint64_t occurrences(const std::string& p, const Word& w)
{
  return oracle::count(oracle::pattern(p), w.letters());
}

// f maps M* into M_i* injectively and keeps every listed pattern count.
void check_bijection(Word (*f)(const Word&, std::size_t), const std::vector<std::string>& kept,
                     std::uint32_t max_size)
{
  for (std::uint32_t size = 2; size <= max_size; ++size) {
    for (const auto& k : oracle::compositions(size, 3)) {
      const Multiset m(k);
      for (std::size_t i = 1; i < m.letters(); ++i) {
        const auto target = transpose_multiset(m, Transposition{i});
        std::set<Word> images;
        for (const auto& w : enumerate_words(m)) {
          const Word image = f(w, i);
          CAPTURE(w.to_string());
          CHECK(Multiset(image.letter_counts()) == target);
          for (const auto& p : kept)
            CHECK(occurrences(p, image) == occurrences(p, w));
          images.insert(image);
        }
        CHECK(images.size() == count_words(target));
      }
    }
  }
}

} // namespace

TEST_CASE("worked examples")
{
  const auto w = parse_word("321432212");
  CHECK(tau(w, 1).to_string() == "312431121");
  CHECK(psi(w, 1).to_string() == "312431121");
  CHECK(theta(w, 1).to_string() == "321431112");
  CHECK(psi(parse_word("1132"), 1).to_string() == "1232");
  CHECK(phi(parse_word("1132"), 1).to_string() == "2231");
  CHECK(theta(parse_word("11213"), 1).to_string() == "22213");
  CHECK(phi(parse_word("12113"), 1).to_string() == "22123");
}

TEST_CASE("run decomposition")
{
  const auto d = decompose(parse_word("321432212"), 1);
  REQUIRE(d.rho() == 3);
  CHECK(d.gaps[0].to_string() == "3");
  CHECK(d.runs[0].to_string() == "21");
  CHECK(d.gaps[1].to_string() == "43");
  CHECK(d.runs[1].to_string() == "2212");
  CHECK(d.gaps[2].empty());
  CHECK(d.assemble().to_string() == "321432212");
  CHECK_THROWS_AS(decompose(parse_word("1"), 1), std::out_of_range);
}

TEST_CASE("theta follows its table on runs of length three")
{
  const std::vector<std::pair<std::string, std::string>> table{
      {"111", "222"}, {"222", "111"}, {"121", "122"}, {"212", "112"},
      {"221", "211"}, {"112", "212"}, {"122", "121"}, {"211", "221"}};
  for (const auto& [from, to] : table)
    CHECK(theta(parse_word("3" + from + "3"), 1).to_string() == "3" + to + "3");
}

TEST_CASE("psi keeps classical 12 and 21")
{
  check_bijection(&psi, {"1-2", "2-1"}, 7);
}

TEST_CASE("phi keeps consecutive 12 and 21")
{
  check_bijection(&phi, {"12", "21"}, 7);
}

TEST_CASE("theta keeps increasing consecutive patterns")
{
  check_bijection(&theta, {"123", "1234"}, 7);
}

TEST_CASE("theta and tau are involutions")
{
  for (const auto& w : enumerate_words(Multiset{2, 3, 2})) {
    CHECK(theta(theta(w, 1), 1) == w);
    CHECK(tau(tau(w, 2), 2) == w);
  }
}
