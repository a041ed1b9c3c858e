#include "stabpat/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "stabpat/errors.hpp"
#include "stabpat/parallel.hpp"

namespace stabpat {

Pattern::Pattern(std::vector<std::uint32_t> letters, std::vector<bool> adjacent)
    : letters_(std::move(letters)), adjacent_(std::move(adjacent))
{
  if (letters_.empty())
    throw std::invalid_argument("pattern must have at least one letter");
  if (adjacent_.size() + 1 != letters_.size())
    throw std::invalid_argument("pattern needs one adjacency flag per gap");
  alphabet_ = *std::max_element(letters_.begin(), letters_.end());
  std::vector<bool> present(alphabet_ + 1, false);
  for (auto l : letters_) {
    if (l == 0)
      throw std::invalid_argument("pattern letters must be positive");
    present[l] = true;
  }
  for (std::uint32_t v = 1; v <= alphabet_; ++v)
    if (!present[v])
      throw std::invalid_argument("pattern alphabet has a gap: letter " +
                                  std::to_string(v) + " is missing");
}

Pattern Pattern::classical(std::vector<std::uint32_t> letters)
{
  std::vector<bool> flags(letters.empty() ? 0 : letters.size() - 1, false);
  return Pattern(std::move(letters), std::move(flags));
}

Pattern Pattern::consecutive(std::vector<std::uint32_t> letters)
{
  std::vector<bool> flags(letters.empty() ? 0 : letters.size() - 1, true);
  return Pattern(std::move(letters), std::move(flags));
}

bool Pattern::is_classical() const
{
  return std::none_of(adjacent_.begin(), adjacent_.end(), [](bool f) { return f; });
}

bool Pattern::is_consecutive() const
{
  return std::all_of(adjacent_.begin(), adjacent_.end(), [](bool f) { return f; });
}

bool Pattern::is_monotone() const
{
  const auto n = letters_.size();
  bool up = true;
  bool down = true;
  for (std::size_t j = 0; j < n; ++j) {
    up = up && letters_[j] == j + 1;
    down = down && letters_[j] == n - j;
  }
  return up || down;
}

Pattern parse_pattern(std::string_view text)
{
  if (text.empty())
    throw std::invalid_argument("empty pattern");
  const bool comma_form = text.find(',') != std::string_view::npos;

  std::vector<std::uint32_t> letters;
  std::vector<bool> adjacent;
  bool pending_separator = false; // a separator was read since the last letter
  bool pending_gap = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '-' || c == ',') {
      if (letters.empty() || pending_separator)
        throw std::invalid_argument("malformed separators in pattern '" +
                                    std::string(text) + "'");
      pending_separator = true;
      pending_gap = c == '-';
      ++pos;
      continue;
    }
    if (c < '0' || c > '9')
      throw std::invalid_argument(std::string("unexpected character '") + c +
                                  "' in pattern");
    std::uint32_t value = 0;
    if (comma_form) {
      if (!letters.empty() && !pending_separator)
        throw std::invalid_argument("malformed separators in pattern '" +
                                    std::string(text) + "'");
      const auto* first = text.data() + pos;
      const auto* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc())
        throw std::invalid_argument("letter out of range in pattern");
      pos += static_cast<std::size_t>(ptr - first);
    } else {
      value = static_cast<std::uint32_t>(c - '0');
      ++pos;
    }
    if (value == 0)
      throw std::invalid_argument("pattern letters must be positive");
    if (!letters.empty())
      adjacent.push_back(!pending_gap);
    letters.push_back(value);
    pending_separator = false;
    pending_gap = false;
  }
  if (pending_separator)
    throw std::invalid_argument("pattern ends with a separator");
  return Pattern(std::move(letters), std::move(adjacent));
}

std::string format_pattern(const Pattern& p)
{
  const bool compact = p.alphabet_size() <= 9;
  std::string out;
  for (std::size_t j = 0; j < p.length(); ++j) {
    if (j > 0) {
      if (!p.adjacency()[j - 1])
        out += '-';
      else if (!compact)
        out += ',';
    }
    out += std::to_string(p[j]);
  }
  return out;
}

OccurrenceMatcher::OccurrenceMatcher(const Pattern& p)
    : pattern_(p), constraints_(p.length()), consecutive_(p.is_consecutive())
{
  for (std::size_t j = 0; j < p.length(); ++j) {
    auto& c = constraints_[j];
    for (std::size_t k = 0; k < j; ++k) {
      if (p[k] == p[j]) {
        c.equal = static_cast<int>(k);
      } else if (p[k] < p[j]) {
        if (c.below < 0 || p[k] > p[static_cast<std::size_t>(c.below)])
          c.below = static_cast<int>(k);
      } else if (c.above < 0 || p[k] < p[static_cast<std::size_t>(c.above)]) {
        c.above = static_cast<int>(k);
      }
    }
  }
}

std::uint64_t OccurrenceMatcher::count_windows(std::span<const Letter> word) const
{
  const std::size_t len = pattern_.length();
  if (word.size() < len)
    return 0;
  std::uint64_t total = 0;
  for (std::size_t start = 0; start + len <= word.size(); ++start) {
    const Letter* window = word.data() + start;
    std::size_t j = 0;
    while (j < len && admits(j, window[j], window))
      ++j;
    total += j == len;
  }
  return total;
}

std::uint64_t OccurrenceMatcher::count_by_search(std::span<const Letter> word) const
{
  const std::size_t len = pattern_.length();
  const std::size_t m = word.size();
  if (m < len)
    return 0;
  const auto& adjacent = pattern_.adjacency();

  // Iterative depth-first search: position j tries word indices
  // next[j]..stop[j]; an adjacency flag pins stop[j] to its first candidate.
  thread_local std::vector<std::size_t> next, stop;
  thread_local std::vector<Letter> bound;
  next.assign(len, 0);
  stop.assign(len, 0);
  bound.assign(len, 0);

  std::uint64_t total = 0;
  std::size_t j = 0;
  stop[0] = m - len;
  for (;;) {
    bool descended = false;
    while (next[j] <= stop[j]) {
      const std::size_t idx = next[j]++;
      if (!admits(j, word[idx], bound.data()))
        continue;
      if (j + 1 == len) {
        ++total;
        continue;
      }
      bound[j] = word[idx];
      ++j;
      next[j] = idx + 1;
      stop[j] = adjacent[j - 1] ? idx + 1 : m - len + j;
      descended = true;
      break;
    }
    if (descended)
      continue;
    if (j == 0)
      return total;
    --j;
  }
}

BigInt OccurrenceMatcher::count_by_memo(std::span<const Letter> word) const
{
  const std::size_t len = pattern_.length();
  const std::size_t m = word.size();
  if (m < len)
    return 0;
  const auto& adjacent = pattern_.adjacency();

  // live[j]: positions < j whose bound value is read by some position >= j.
  std::vector<std::vector<std::size_t>> live(len + 1);
  for (std::size_t j = 0; j <= len; ++j) {
    std::vector<bool> used(len, false);
    for (std::size_t t = j; t < len; ++t) {
      for (int ref : {constraints_[t].equal, constraints_[t].below,
                      constraints_[t].above})
        if (ref >= 0 && static_cast<std::size_t>(ref) < j)
          used[static_cast<std::size_t>(ref)] = true;
    }
    for (std::size_t k = 0; k < j; ++k)
      if (used[k])
        live[j].push_back(k);
  }

  std::map<std::vector<Letter>, BigInt> memo;
  std::vector<Letter> bound(len);

  // Completions once positions 0..j-1 are placed, the last at index `prev`.
  std::function<BigInt(std::size_t, std::size_t)> completions =
      [&](std::size_t j, std::size_t prev) -> BigInt {
    if (j == len)
      return 1;
    std::vector<Letter> key{j, prev};
    for (auto k : live[j])
      key.push_back(bound[k]);
    if (auto it = memo.find(key); it != memo.end())
      return it->second;

    BigInt total = 0;
    const std::size_t last = m - len + j;
    const std::size_t stop = adjacent[j - 1] ? prev + 1 : last;
    for (std::size_t idx = prev + 1; idx <= stop && idx <= last; ++idx) {
      if (!admits(j, word[idx], bound.data()))
        continue;
      bound[j] = word[idx];
      total += completions(j + 1, idx);
    }
    memo.emplace(std::move(key), total);
    return total;
  };

  BigInt total = 0;
  for (std::size_t idx = 0; idx + len <= m; ++idx) {
    bound[0] = word[idx];
    total += completions(1, idx);
  }
  return total;
}

std::uint64_t OccurrenceMatcher::count_small(std::span<const Letter> word) const
{
  if (consecutive_)
    return count_windows(word);
  return count_by_search(word);
}

BigInt OccurrenceMatcher::count(std::span<const Letter> word) const
{
  if (consecutive_)
    return to_big(count_windows(word));
  // Enumerating occurrences one by one is cheapest on short words; the memo
  // keeps long words polynomial.
  if (word.size() <= 24)
    return to_big(count_by_search(word));
  return count_by_memo(word);
}

BigInt count_occurrences(const Pattern& p, const Word& w)
{
  return OccurrenceMatcher(p).count(w.view());
}

bool avoids(const Pattern& p, const Word& w)
{
  return count_occurrences(p, w) == 0;
}

BigInt Distribution::at(std::uint64_t s) const
{
  auto it = counts.find(s);
  return it == counts.end() ? BigInt(0) : it->second;
}

BigInt Distribution::total() const
{
  BigInt sum = 0;
  for (const auto& [s, n] : counts)
    sum += n;
  return sum;
}

BigInt Distribution::total_occurrences() const
{
  BigInt sum = 0;
  for (const auto& [s, n] : counts)
    sum += to_big(s) * n;
  return sum;
}

namespace {

using Histogram = std::map<std::uint64_t, std::uint64_t>;

Histogram count_shard(const Multiset& m, const OccurrenceMatcher& matcher,
                      std::span<const Letter> prefix)
{
  // Dense tally for the common small counts, spilling into the map.
  constexpr std::uint64_t kDense = 4096;
  std::vector<std::uint64_t> dense;
  Histogram sparse;
  for_each_word(m, prefix, [&](std::span<const Letter> w) {
    const std::uint64_t s = matcher.count_small(w);
    if (s < kDense) {
      if (s >= dense.size())
        dense.resize(s + 1, 0);
      ++dense[s];
    } else {
      ++sparse[s];
    }
  });
  for (std::uint64_t s = 0; s < dense.size(); ++s)
    if (dense[s])
      sparse[s] += dense[s];
  return sparse;
}

} // namespace

Distribution distribution(const Multiset& m, const Pattern& p,
                          const RunOptions& options)
{
  const BigInt words = count_words(m);
  if (words > to_big(options.budget))
    throw BudgetExceeded("|M*| = " + to_decimal(words) + " for " + m.to_string() +
                         " exceeds the budget of " + std::to_string(options.budget) +
                         " words");
  // count_small is exact only below 64 letters; |M*| within budget with
  // m >= 64 means a tiny alphabet, handled exactly word by word.
  Distribution out{m, p, {}};
  const OccurrenceMatcher matcher(p);
  if (m.size() >= 64) {
    std::map<BigInt, BigInt> big;
    for_each_word(m, {}, [&](std::span<const Letter> w) { big[matcher.count(w)] += 1; });
    for (auto& [s, n] : big) {
      if (!s.fits_ulong_p())
        throw BudgetExceeded("occurrence count exceeds 64 bits");
      out.counts[s.get_ui()] = n;
    }
    return out;
  }

  const unsigned threads = std::max(1u, options.threads);
  const auto prefixes = shard_prefixes(m, threads == 1 ? 1 : 4 * threads);
  const auto shards = parallel_map(prefixes.size(), threads, [&](std::size_t t) {
    return count_shard(m, matcher, prefixes[t]);
  });
  for (const auto& shard : shards)
    for (const auto& [s, n] : shard)
      out.counts[s] += to_big(n);
  return out;
}

} // namespace stabpat
