#include "stabpat/eulerian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "stabpat/errors.hpp"
#include "stabpat/patterns.hpp"

namespace stabpat {

BigInt EulerianTable::at(unsigned m, unsigned s) const
{
  if (m >= rows.size() || s >= rows[m].size())
    return 0;
  return rows[m][s];
}

EulerianTable eulerian_table(unsigned m_max)
{
  EulerianTable t;
  t.m_max = m_max;
  t.rows.push_back({BigInt(1)});
  for (unsigned m = 1; m <= m_max; ++m) {
    std::vector<BigInt> row(m);
    for (unsigned s = 0; s < m; ++s) {
      row[s] = (s + 1) * t.at(m - 1, s);
      if (s > 0)
        row[s] += (m - s) * t.at(m - 1, s - 1);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

BigInt ATable::at(unsigned m, unsigned k, unsigned s) const
{
  if (m >= cells.size() || k >= cells[m].size() || s >= cells[m][k].size())
    return 0;
  return cells[m][k][s];
}

ATable a_table(unsigned m_max)
{
  const auto e = eulerian_table(m_max);
  ATable t;
  t.m_max = m_max;
  t.cells.resize(m_max + 1);
  for (unsigned m = 0; m <= m_max; ++m) {
    const unsigned width = std::max(m, 1u);
    t.cells[m].assign(m / 2 + 1, std::vector<BigInt>(width, BigInt(0)));
    for (unsigned s = 0; s < width; ++s)
      t.cells[m][0][s] = e.at(m, s);
    for (unsigned k = 1; k <= m / 2; ++k) {
      t.cells[m][k][0] = 1;
      for (unsigned s = 1; s < width; ++s) {
        BigInt numerator = t.at(m, k - 1, s) + t.at(m - 1, k - 1, s) -
                           t.at(m - 1, k - 1, s - 1);
        if (!mpz_even_p(numerator.get_mpz_t()))
          throw IntegrityError("odd numerator at A(" + std::to_string(m) + "," +
                               std::to_string(k) + "," + std::to_string(s) + ")");
        t.cells[m][k][s] = numerator / 2;
      }
    }
  }
  return t;
}

Multiset multiset_from_key(std::vector<std::uint32_t> key)
{
  std::sort(key.begin(), key.end(), std::greater<>());
  return Multiset(std::move(key));
}

BigInt a_bruteforce(const std::vector<std::uint32_t>& key, std::uint64_t s,
                    const RunOptions& options)
{
  const auto m = multiset_from_key(key);
  if (m.empty())
    return s == 0 ? 1 : 0;
  return distribution(m, parse_pattern("12"), options).at(s);
}

BigInt a_recurrence_check(const std::vector<std::uint32_t>& key, std::uint64_t s,
                          const RunOptions& options)
{
  auto it = std::find(key.begin(), key.end(), 1u);
  if (it == key.end())
    throw std::invalid_argument("K must contain a part equal to 1");
  if (s < 1)
    throw std::invalid_argument("s must be at least 1");
  std::vector<std::uint32_t> reduced = key;
  reduced.erase(reduced.begin() + (it - key.begin()));
  const std::uint64_t total = std::accumulate(key.begin(), key.end(), std::uint64_t{0});
  const BigInt first = to_big(s + 1) * a_bruteforce(reduced, s, options);
  BigInt second = 0;
  if (total > s)
    second = to_big(total - s) * a_bruteforce(reduced, s - 1, options);
  return first + second;
}

namespace {

void check_series_budget(const Exponents& caps, const RunOptions& options)
{
  BigInt box = 1;
  for (auto c : caps)
    box *= c + 1;
  if (box > to_big(options.budget))
    throw BudgetExceeded("series box of " + to_decimal(box) +
                         " coefficients exceeds the budget");
}

std::map<std::uint64_t, BigInt> marked_coefficients(const Multiset& m,
                                                    const std::function<BigInt(Exponents)>& get)
{
  std::map<std::uint64_t, BigInt> out;
  Exponents e(m.letters() + 1);
  for (std::size_t v = 0; v < m.letters(); ++v)
    e[v + 1] = m.multiplicities()[v];
  for (std::uint64_t s = 0; s <= m.size(); ++s) {
    e[0] = static_cast<unsigned>(s);
    auto c = get(e);
    if (c != 0)
      out[s] = c;
  }
  return out;
}

Exponents marked_caps(const Multiset& m)
{
  Exponents caps(m.letters() + 1);
  caps[0] = static_cast<unsigned>(m.size());
  for (std::size_t v = 0; v < m.letters(); ++v)
    caps[v + 1] = m.multiplicities()[v];
  return caps;
}

} // namespace

std::map<std::uint64_t, BigInt> macmahon_distribution(const Multiset& m,
                                                      const RunOptions& options)
{
  const auto caps = marked_caps(m);
  check_series_budget(caps, options);
  const std::size_t n = m.letters();
  auto product = SparsePolynomial::one(caps);
  for (std::size_t i = 1; i <= n; ++i) {
    SparsePolynomial factor(caps);
    for (std::size_t j = 1; j <= n; ++j) {
      Exponents e(n + 1, 0);
      e[j] = 1;
      if (j > i)
        e[0] = 1;
      factor.add_term(e, 1);
    }
    product = product * factor.power(m.multiplicities()[i - 1]);
  }
  return marked_coefficients(m, [&](Exponents e) { return product.coefficient(e); });
}

BigInt macmahon_coefficient(const Multiset& m, std::uint64_t s, const RunOptions& options)
{
  const auto d = macmahon_distribution(m, options);
  auto it = d.find(s);
  return it == d.end() ? BigInt(0) : it->second;
}

std::map<std::uint64_t, BigInt> gf21_distribution(const Multiset& m,
                                                  const RunOptions& options)
{
  const auto caps = marked_caps(m);
  check_series_budget(caps, options);
  const std::size_t n = m.letters();

  // e_j(x_1..x_n) by the subset recurrence, as series in (x0, x_1..x_n).
  std::vector<TruncatedSeries> elementary(n + 1, TruncatedSeries(caps));
  elementary[0] = TruncatedSeries::constant(caps, 1);
  for (std::size_t v = 1; v <= n; ++v) {
    const auto x = TruncatedSeries::variable(caps, v);
    for (std::size_t j = v; j >= 1; --j)
      elementary[j] += elementary[j - 1] * x;
  }
  const auto one_minus_marker =
      TruncatedSeries::constant(caps, 1) - TruncatedSeries::variable(caps, 0);
  auto denominator = TruncatedSeries::constant(caps, 1);
  auto weight = TruncatedSeries::constant(caps, 1); // (1-x0)^{j-1}
  for (std::size_t j = 1; j <= n; ++j) {
    auto term = weight * elementary[j];
    if (j % 2 == 1)
      denominator -= term;
    else
      denominator += term;
    weight = weight * one_minus_marker;
  }
  const auto g = denominator.inverse();
  return marked_coefficients(m, [&](Exponents e) {
    const Rational c = g.coefficient(e);
    if (c.get_den() != 1)
      throw IntegrityError("non-integral coefficient in the 21 generating function");
    return BigInt(c.get_num());
  });
}

BigInt gf21_coefficient(const Multiset& m, std::uint64_t s, const RunOptions& options)
{
  const auto d = gf21_distribution(m, options);
  auto it = d.find(s);
  return it == d.end() ? BigInt(0) : it->second;
}

namespace {

// (1-z) e^{x(1-z)} / (1 - z e^{x(1-z)}) over variables (x, y, z); x is var 0
// and z is var `z_var`.
TruncatedSeries eulerian_egf(const Exponents& caps, std::size_t z_var)
{
  const auto one = TruncatedSeries::constant(caps, 1);
  const auto x = TruncatedSeries::variable(caps, 0);
  const auto z = TruncatedSeries::variable(caps, z_var);
  const auto one_minus_z = one - z;
  const auto e = (x * one_minus_z).exp();
  return one_minus_z * e * (one - z * e).inverse();
}

SeriesCheck compare(const TruncatedSeries& lhs, const TruncatedSeries& rhs)
{
  SeriesCheck out;
  out.degrees = lhs.caps();
  if (auto diff = lhs.first_difference(rhs)) {
    out.holds = false;
    out.first_failure = diff;
    out.lhs = lhs.coefficient(*diff);
    out.rhs = rhs.coefficient(*diff);
  }
  return out;
}

} // namespace

SeriesCheck verify_pde(unsigned x_deg, unsigned y_deg, unsigned z_deg)
{
  return verify_pde(x_deg, y_deg, z_deg, a_table(x_deg + 2 * y_deg));
}

SeriesCheck verify_pde(unsigned x_deg, unsigned y_deg, unsigned z_deg, const ATable& table)
{
  if (table.m_max < x_deg + 2 * y_deg)
    throw std::invalid_argument("A-table depth " + std::to_string(table.m_max) +
                                " is below the required " +
                                std::to_string(x_deg + 2 * y_deg));
  // Two extra powers of x so the second derivative is exact on the target box.
  const Exponents wide{x_deg + 2, y_deg, z_deg};
  const Exponents target{x_deg, y_deg, z_deg};
  TruncatedSeries a(wide);
  for (unsigned xa = 0; xa <= x_deg + 2; ++xa)
    for (unsigned k = 0; k <= y_deg; ++k) {
      const unsigned m = xa + 2 * k;
      if (m > table.m_max)
        continue;
      const BigInt fact = factorial(xa);
      for (unsigned s = 0; s <= z_deg; ++s) {
        const Exponents e{xa, k, s};
        Rational c(table.at(m, k, s), fact);
        c.canonicalize();
        a.set(e, c);
      }
    }

  const auto one = TruncatedSeries::constant(wide, 1);
  const auto z = TruncatedSeries::variable(wide, 2);
  const Rational half(1, 2);
  const auto a_x = a.derivative(0);
  const auto a_xx = a_x.derivative(0);
  auto rhs = a_xx.shifted(1) * half + ((one - z) * a_x).shifted(1) * half +
             eulerian_egf(wide, 2);
  return compare(a.truncated(target), rhs.truncated(target));
}

SeriesCheck verify_eulerian_egf(unsigned x_deg, unsigned z_deg)
{
  const auto e = eulerian_table(x_deg);
  const Exponents caps{x_deg, z_deg};
  TruncatedSeries lhs(caps);
  for (unsigned m = 0; m <= x_deg; ++m) {
    const BigInt fact = factorial(m);
    for (unsigned s = 0; s <= z_deg; ++s) {
      const Exponents ex{m, s};
      Rational c(e.at(m, s), fact);
      c.canonicalize();
      lhs.set(ex, c);
    }
  }
  return compare(lhs, eulerian_egf(caps, 1));
}

bool interior_log_concave(const std::vector<BigInt>& row)
{
  for (std::size_t s = 1; s + 1 < row.size(); ++s)
    if (row[s] * row[s] < row[s - 1] * row[s + 1])
      return false;
  return true;
}

} // namespace stabpat
