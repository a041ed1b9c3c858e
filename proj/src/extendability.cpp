#include "stabpat/extendability.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "stabpat/errors.hpp"

namespace stabpat {

namespace {

void require_consecutive_distinct(const Pattern& p)
{
  if (!p.is_consecutive() || !p.has_distinct_letters())
    throw std::invalid_argument("pattern " + format_pattern(p) +
                                " must be consecutive with distinct letters");
}

void require_index(const Pattern& p, std::size_t i)
{
  if (i < 2 || i > p.length())
    throw std::invalid_argument("index " + std::to_string(i) +
                                " outside 2.." + std::to_string(p.length()));
}

void require_extendable(const Pattern& p, std::size_t i)
{
  if (!is_extendable(p, i))
    throw std::invalid_argument("index " + std::to_string(i) +
                                " is not extendable for " + format_pattern(p));
}

// Letter p_pos, 1-based.
std::int64_t at(const Pattern& p, std::size_t pos)
{
  return static_cast<std::int64_t>(p[pos - 1]);
}

} // namespace

bool is_extendable(const Pattern& p, std::size_t i)
{
  require_consecutive_distinct(p);
  require_index(p, i);
  const std::size_t overlap = p.length() - i + 1;
  for (std::size_t a = 0; a < overlap; ++a)
    for (std::size_t b = a + 1; b < overlap; ++b)
      if ((p[a] < p[b]) != (p[i - 1 + a] < p[i - 1 + b]))
        return false;
  return true;
}

std::vector<std::size_t> extendable_indices(const Pattern& p)
{
  require_consecutive_distinct(p);
  std::vector<std::size_t> out;
  for (std::size_t i = 2; i <= p.length(); ++i)
    if (is_extendable(p, i))
      out.push_back(i);
  return out;
}

std::size_t minimal_extendable_index(const Pattern& p)
{
  const auto indices = extendable_indices(p);
  if (indices.empty())
    throw std::invalid_argument("pattern " + format_pattern(p) +
                                " has no extendable index");
  return indices.front();
}

GapVectors gap_vectors(const Pattern& p, std::size_t i)
{
  require_extendable(p, i);
  const std::size_t len = p.length();
  const std::size_t overlap = len - i + 1;
  const std::size_t bands = overlap + 1;
  const auto top = static_cast<std::int64_t>(len);

  GapVectors g;
  g.order.resize(overlap);
  std::iota(g.order.begin(), g.order.end(), 1);
  std::sort(g.order.begin(), g.order.end(),
            [&](std::size_t a, std::size_t b) { return p[a - 1] < p[b - 1]; });

  auto band_sizes = [&](std::size_t shift) {
    std::vector<std::int64_t> sizes(bands);
    sizes[0] = at(p, g.order[0] + shift) - 1;
    for (std::size_t j = 1; j < overlap; ++j)
      sizes[j] = at(p, g.order[j] + shift) - at(p, g.order[j - 1] + shift) - 1;
    sizes[overlap] = top - at(p, g.order[overlap - 1] + shift);
    return sizes;
  };
  g.suffix_band = band_sizes(0);
  g.prefix_band = band_sizes(i - 1);

  g.shared.resize(bands);
  g.unshared.resize(bands);
  for (std::size_t j = 0; j < bands; ++j) {
    if (g.prefix_band[j] < 0)
      throw IntegrityError("negative band size for an extendable index");
    g.shared[j] = std::min(g.suffix_band[j], g.prefix_band[j]);
    g.unshared[j] = std::abs(g.suffix_band[j] - g.prefix_band[j]);
  }
  return g;
}

Multiset extended_multiset(const Pattern& p, std::size_t i)
{
  const auto g = gap_vectors(p, i);
  const std::size_t bands = g.shared.size();
  std::vector<std::uint32_t> k;
  for (std::size_t j = 0; j < bands; ++j) {
    k.insert(k.end(), static_cast<std::size_t>(g.shared[j]), 2u);
    // Every band but the last is followed by its overlap letter.
    const auto singles = g.unshared[j] + (j + 1 < bands ? 1 : 0);
    k.insert(k.end(), static_cast<std::size_t>(singles), 1u);
  }
  return Multiset(std::move(k));
}

Word extended_permutation(const Pattern& p, std::size_t i)
{
  const auto g = gap_vectors(p, i);
  const std::size_t len = p.length();
  const std::size_t total = len + i - 1;
  const std::size_t overlap = len - i + 1;
  const std::size_t bands = overlap + 1;

  // Pattern values of the overlap in each occurrence, ascending.
  std::vector<std::uint32_t> second_cuts(overlap);
  std::vector<std::uint32_t> first_cuts(overlap);
  for (std::size_t t = 0; t < overlap; ++t) {
    second_cuts[t] = p[g.order[t] - 1];
    first_cuts[t] = p[g.order[t] + i - 2];
  }
  auto band_of = [](const std::vector<std::uint32_t>& cuts, std::uint32_t v) {
    return static_cast<std::size_t>(std::lower_bound(cuts.begin(), cuts.end(), v) -
                                    cuts.begin());
  };

  // (pattern value, word position), per band and side. Positions 0-based.
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> prefix(bands),
      suffix(bands);
  for (std::size_t x = 0; x + 1 < i; ++x)
    prefix[band_of(first_cuts, p[x])].emplace_back(p[x], x);
  for (std::size_t x = len; x < total; ++x) {
    const std::uint32_t v = p[x - (i - 1)];
    suffix[band_of(second_cuts, v)].emplace_back(v, x);
  }

  std::vector<Letter> word(total, 0);
  Letter base = 1;
  for (std::size_t j = 0; j < bands; ++j) {
    std::sort(prefix[j].begin(), prefix[j].end());
    std::sort(suffix[j].begin(), suffix[j].end());
    for (std::size_t t = 0; t < prefix[j].size(); ++t)
      word[prefix[j][t].second] = base + t;
    for (std::size_t t = 0; t < suffix[j].size(); ++t)
      word[suffix[j][t].second] = base + t;
    base += std::max(prefix[j].size(), suffix[j].size());
    if (j < overlap) {
      word[g.order[j] + i - 2] = base;
      ++base;
    }
  }

  Word out(std::move(word));
  const OccurrenceMatcher matcher(p);
  const auto letters = out.view();
  if (matcher.count_small(letters.first(len)) != 1 ||
      matcher.count_small(letters.last(len)) != 1)
    throw IntegrityError("extended permutation " + out.to_string() +
                         " does not begin and end with occurrences of " +
                         format_pattern(p));
  if (Multiset(out.letter_counts()) != extended_multiset(p, i) ||
      std::find(out.begin(), out.end(), Letter{0}) != out.end())
    throw IntegrityError("extended permutation " + out.to_string() +
                         " has the wrong letter multiset");
  return out;
}

ExtendabilityReport extend(const Pattern& p, std::size_t i)
{
  return {p, i, gap_vectors(p, i), extended_permutation(p, i), extended_multiset(p, i)};
}

WitnessPair classical_instability_witness(const Pattern& p, const RunOptions& options)
{
  if (!p.is_classical() || !p.has_distinct_letters())
    throw std::invalid_argument("pattern " + format_pattern(p) +
                                " must be classical with distinct letters");
  const std::size_t len = p.length();
  if (len < 3)
    throw std::invalid_argument("classical patterns of length " +
                                std::to_string(len) + " are stable; no witness exists");

  std::vector<std::uint32_t> k(len, 1);
  k[p[0] - 1] = 2;
  k[p[len - 1] - 1] = 3;
  const Multiset base(k);
  std::swap(k[p[1] - 1], k[p[len - 1] - 1]);
  const Multiset swapped(k);

  WitnessPair w;
  w.pattern = p;
  w.s = 1;
  w.base = base;
  w.swapped = swapped;
  w.base_count = distribution(base, p, options).at(1);
  w.swapped_count = distribution(swapped, p, options).at(1);
  w.construction = "classical-single-occurrence";
  w.swapped_letters = {p[1], p[len - 1]};

  const auto l = static_cast<long>(len);
  const BigInt expected_base = l * (l * l - 5) / 2;
  const BigInt expected_swapped = l * (l * l - 3) / 2;
  if (w.base_count != expected_base || w.swapped_count != expected_swapped)
    throw IntegrityError("classical witness for " + format_pattern(p) + " counted " +
                         to_decimal(w.base_count) + " vs " + to_decimal(w.swapped_count) +
                         ", expected " + to_decimal(expected_base) + " vs " +
                         to_decimal(expected_swapped));
  return w;
}

std::optional<WitnessPair> consecutive_instability_witness(const Pattern& p,
                                                           const RunOptions& options)
{
  require_consecutive_distinct(p);
  const std::size_t len = p.length();
  const std::size_t i = minimal_extendable_index(p);
  const auto g = gap_vectors(p, i);
  const Multiset base = extended_multiset(p, i);
  const std::size_t bands = g.shared.size();

  std::vector<std::size_t> positive; // 1-based bands with shared values
  for (std::size_t j = 1; j <= bands; ++j)
    if (g.shared[j - 1] > 0)
      positive.push_back(j);
  if (positive.empty())
    return std::nullopt;

  auto unshared_before = [&](std::size_t band) {
    std::int64_t sum = 0;
    for (std::size_t j = 1; j < band; ++j)
      sum += g.unshared[j - 1];
    return static_cast<std::size_t>(sum);
  };
  const auto all_unshared = unshared_before(bands + 1);

  WitnessPair w;
  w.pattern = p;
  w.s = 2;
  w.base = base;
  std::size_t letters = 0;
  std::size_t swap_a = 0;
  std::size_t swap_b = 0;
  if (positive.size() == 1) {
    const std::size_t j0 = positive.front();
    letters = len - i + 1 + static_cast<std::size_t>(g.shared[j0 - 1]) + all_unshared;
    const std::size_t first = j0 - 1 + unshared_before(j0);
    w.first_offset = first;
    if (j0 < bands) {
      swap_a = first + 1;
      swap_b = letters;
    } else {
      swap_a = 1;
      swap_b = first + 1;
    }
    w.construction = j0 < bands ? "single-shared-band" : "single-shared-band-top";
  } else {
    const std::size_t j1 = positive[0];
    const std::size_t j2 = positive[1];
    std::size_t shared_total = 0;
    for (auto s : g.shared)
      shared_total += static_cast<std::size_t>(s);
    letters = len - i + 1 + shared_total + all_unshared;
    const auto shared_j1 = static_cast<std::size_t>(g.shared[j1 - 1]);
    const std::size_t first = j1 - 1 + unshared_before(j1);
    w.first_offset = first;
    w.second_offset = j2 - 1 + shared_j1 + unshared_before(j2);
    w.smaller_letters = j2 - 2 + 2 * shared_j1 + unshared_before(j2);
    swap_a = first + 1;
    swap_b = letters;
    w.construction = "two-shared-bands";
  }
  w.letter_count = letters;
  if (letters != base.letters())
    throw IntegrityError("extended multiset of " + format_pattern(p) + " has " +
                         std::to_string(base.letters()) + " letters, expected " +
                         std::to_string(letters));

  auto k = base.multiplicities();
  std::swap(k[swap_a - 1], k[swap_b - 1]);
  w.swapped = Multiset(k);
  w.swapped_letters = {swap_a, swap_b};
  w.base_count = distribution(base, p, options).at(2);
  w.swapped_count = distribution(w.swapped, p, options).at(2);
  if (!(w.swapped_count == 0 && w.base_count > 0))
    throw IntegrityError("witness for " + format_pattern(p) + " failed: |M*(p;2)| = " +
                         to_decimal(w.base_count) + " for " + base.to_string() +
                         ", |Mbar*(p;2)| = " + to_decimal(w.swapped_count) + " for " +
                         w.swapped.to_string());
  return w;
}

} // namespace stabpat
