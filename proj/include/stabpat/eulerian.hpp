#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabpat/core.hpp"
#include "stabpat/numeric.hpp"
#include "stabpat/series.hpp"

namespace stabpat {

// E_{m,s} for 0 <= s < m <= m_max, plus E_{0,0} = 1.
struct EulerianTable {
  unsigned m_max = 0;
  std::vector<std::vector<BigInt>> rows;

  // Zero outside the triangle.
  BigInt at(unsigned m, unsigned s) const;
};

EulerianTable eulerian_table(unsigned m_max);

// A_{m,k,s}: permutations with exactly s ascents of the multiset with k
// letters doubled and m-2k single letters.
struct ATable {
  unsigned m_max = 0;
  // cells[m][k][s], k <= m/2, s < max(m, 1).
  std::vector<std::vector<std::vector<BigInt>>> cells;

  // Zero outside the computed range (k > m/2, s beyond the row).
  BigInt at(unsigned m, unsigned k, unsigned s) const;
};

// Filled by the halved recurrence from the k = 0 Eulerian rows. Throws
// IntegrityError if a numerator is odd.
ATable a_table(unsigned m_max);

// The multiset with multiplicities K sorted descending.
Multiset multiset_from_key(std::vector<std::uint32_t> key);

// |M*(12;s)| over the multiset with multiplicity multiset K, by enumeration.
BigInt a_bruteforce(const std::vector<std::uint32_t>& key, std::uint64_t s,
                    const RunOptions& options = {});

// (s+1) A_{K',s} + (sum K - s) A_{K',s-1}, K' = K minus one part equal to 1,
// with both terms enumerated. Requires 1 in K and s >= 1.
BigInt a_recurrence_check(const std::vector<std::uint32_t>& key, std::uint64_t s,
                          const RunOptions& options = {});

// Descents-of-type-12 distribution from the product
// prod_i (x_1 + ... + x_i + x0 (x_{i+1} + ... + x_n))^{k_i}.
std::map<std::uint64_t, BigInt> macmahon_distribution(const Multiset& m,
                                                      const RunOptions& options = {});
BigInt macmahon_coefficient(const Multiset& m, std::uint64_t s,
                            const RunOptions& options = {});

// Coefficients of 1 / (1 + sum_j (-1)^j (1-x0)^{j-1} e_j(x_1..x_n)), with x0
// marking occurrences of 21.
std::map<std::uint64_t, BigInt> gf21_distribution(const Multiset& m,
                                                  const RunOptions& options = {});
BigInt gf21_coefficient(const Multiset& m, std::uint64_t s, const RunOptions& options = {});

struct SeriesCheck {
  bool holds = true;
  Exponents degrees;                    // truncation that was checked
  std::optional<Exponents> first_failure;
  Rational lhs;                         // at first_failure
  Rational rhs;
};

// A(x,y,z) = (y/2) A_xx + (y/2)(1-z) A_x + (1-z)e^{x(1-z)} / (1 - z e^{x(1-z)})
// coefficientwise for x^a y^k z^s with a <= x_deg, k <= y_deg, s <= z_deg,
// where A = sum A_{a+2k,k,s}/a! x^a y^k z^s.
SeriesCheck verify_pde(unsigned x_deg, unsigned y_deg, unsigned z_deg);
// Same with a given table; std::invalid_argument if it is shallower than
// x_deg + 2 y_deg.
SeriesCheck verify_pde(unsigned x_deg, unsigned y_deg, unsigned z_deg, const ATable& table);

// sum E_{m,s}/m! x^m z^s = (1-z)e^{x(1-z)} / (1 - z e^{x(1-z)}).
SeriesCheck verify_eulerian_egf(unsigned x_deg, unsigned z_deg);

// A_s^2 >= A_{s-1} A_{s+1} for every interior s.
bool interior_log_concave(const std::vector<BigInt>& row);

} // namespace stabpat
