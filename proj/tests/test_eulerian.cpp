#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "stabpat/errors.hpp"
#include "stabpat/eulerian.hpp"

using namespace stabpat;

namespace {

std::vector<BigInt> row(std::initializer_list<int> v)
{
  std::vector<BigInt> out;
  for (int x : v)
    out.emplace_back(x);
  return out;
}

std::uint64_t oracle_ascent_count(const std::vector<std::uint32_t>& k, std::uint64_t s)
{
  std::uint64_t n = 0;
  for (const auto& w : oracle::words(k))
    n += oracle::ascents(w) == s;
  return n;
}

} // namespace

TEST_CASE("Eulerian rows")
{
  const auto e = eulerian_table(6);
  CHECK(e.rows[1] == row({1}));
  CHECK(e.rows[3] == row({1, 4, 1}));
  CHECK(e.rows[4] == row({1, 11, 11, 1}));
  for (unsigned m = 1; m <= 6; ++m) {
    BigInt sum = 0;
    for (unsigned s = 0; s < m; ++s) {
      sum += e.at(m, s);
      CHECK(e.at(m, s) == e.at(m, m - 1 - s));
      CHECK(e.at(m, s) ==
            to_big(oracle_ascent_count(std::vector<std::uint32_t>(m, 1), s)));
    }
    CHECK(sum == factorial(m));
  }
}

TEST_CASE("A table against enumeration")
{
  const auto t = a_table(8);
  for (unsigned m = 0; m <= 8; ++m)
    for (unsigned k = 0; k <= m / 2; ++k) {
      std::vector<std::uint32_t> key(k, 2);
      key.resize(m - k, 1);
      BigInt sum = 0;
      for (unsigned s = 0; s <= m; ++s) {
        CHECK(t.at(m, k, s) == to_big(oracle_ascent_count(key, s)));
        sum += t.at(m, k, s);
      }
      CHECK(t.at(m, k, 0) == 1);
      CHECK(sum == factorial(m) / (BigInt(1) << k));
      CHECK(interior_log_concave(t.cells[m][k]));
    }
  CHECK(t.at(4, 3, 0) == 0);
}

TEST_CASE("A_K by enumeration and the insertion recurrence")
{
  CHECK(a_bruteforce({1, 2}, 1) == 2);
  CHECK(a_bruteforce({4}, 0) == 1);
  CHECK(a_recurrence_check({1, 1}, 1) == 1);
  CHECK(a_recurrence_check({1, 2}, 1) == 2);
  CHECK(a_recurrence_check({1, 1, 1}, 1) == 4);
  for (std::uint64_t s = 1; s <= 5; ++s)
    CHECK(a_recurrence_check({3, 1, 2}, s) == a_bruteforce({3, 1, 2}, s));
  CHECK_THROWS_AS(a_recurrence_check({2, 2}, 1), std::invalid_argument);
  CHECK_THROWS_AS(a_recurrence_check({1, 2}, 0), std::invalid_argument);
}

TEST_CASE("series arithmetic")
{
  const Exponents caps{6};
  const auto x = TruncatedSeries::variable(caps, 0);
  const auto e = x.exp();
  for (unsigned n = 0; n <= 6; ++n) {
    const Exponents at{n};
    CHECK(e.coefficient(at) == Rational(1, factorial(n)));
  }
  const auto one = TruncatedSeries::constant(caps, 1);
  const auto g = (one - x).inverse();
  for (unsigned n = 0; n <= 6; ++n) {
    const Exponents at{n};
    CHECK(g.coefficient(at) == 1);
  }
  CHECK((g * (one - x)) == one);
  CHECK_THROWS_AS(one.exp(), std::invalid_argument);
  CHECK_THROWS_AS(x.inverse(), std::invalid_argument);

  // exp(x + y) = exp(x) exp(y) in two variables.
  const Exponents caps2{4, 3};
  const auto a = TruncatedSeries::variable(caps2, 0);
  const auto b = TruncatedSeries::variable(caps2, 1);
  CHECK((a + b).exp() == a.exp() * b.exp());
  CHECK(a.exp().derivative(0).truncated({3, 3}) == a.exp().truncated({3, 3}));
}

TEST_CASE("MacMahon and G21 coefficients against enumeration")
{
  CHECK(macmahon_coefficient(Multiset{1, 1}, 1) == 1);
  CHECK(macmahon_coefficient(Multiset{2, 1}, 0) == 1);
  CHECK(macmahon_coefficient(Multiset{1, 1, 1}, 1) == 4);
  CHECK(gf21_coefficient(Multiset{1, 1}, 0) == 1);
  CHECK(gf21_coefficient(Multiset{1, 1}, 1) == 1);
  for (std::uint32_t size = 1; size <= 6; ++size)
    for (const auto& k : oracle::compositions(size, 3)) {
      const Multiset m(k);
      const auto up = oracle::distribution(k, "12");
      const auto down = oracle::distribution(k, "21");
      const auto mac = macmahon_distribution(m);
      const auto g21 = gf21_distribution(m);
      for (std::uint64_t s = 0; s <= size; ++s) {
        CHECK((mac.count(s) ? mac.at(s) : BigInt(0)) == to_big(up.count(s) ? up.at(s) : 0));
        CHECK((g21.count(s) ? g21.at(s) : BigInt(0)) ==
              to_big(down.count(s) ? down.at(s) : 0));
      }
    }
}

TEST_CASE("PDE and EGF identities")
{
  CHECK(verify_pde(0, 0, 0).holds);
  CHECK(verify_pde(5, 2, 5).holds);
  CHECK(verify_eulerian_egf(8, 8).holds);
  CHECK_THROWS_AS(verify_pde(4, 2, 4, a_table(6)), std::invalid_argument);

  // A corrupted table is caught and the first bad exponent reported.
  auto t = a_table(8);
  t.cells[5][1][2] += 1;
  const auto c = verify_pde(4, 2, 4, t);
  CHECK_FALSE(c.holds);
  REQUIRE(c.first_failure);
}
