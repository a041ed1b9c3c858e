#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stabpat/core.hpp"
#include "stabpat/numeric.hpp"

namespace stabpat {

// A pattern p_1...p_l over the alphabet 1..v (every value present) with one
// adjacency flag per gap: flag j set means the letters matched to p_j and
// p_{j+1} must sit next to each other in the host word. Classical patterns
// have no flags set, consecutive patterns have all of them set.
class Pattern {
public:
  Pattern() = default;
  Pattern(std::vector<std::uint32_t> letters, std::vector<bool> adjacent);

  static Pattern classical(std::vector<std::uint32_t> letters);
  static Pattern consecutive(std::vector<std::uint32_t> letters);

  std::size_t length() const { return letters_.size(); }
  std::uint32_t alphabet_size() const { return alphabet_; }
  std::uint32_t operator[](std::size_t pos) const { return letters_[pos]; }
  const std::vector<std::uint32_t>& letters() const { return letters_; }
  const std::vector<bool>& adjacency() const { return adjacent_; }

  bool is_classical() const;
  bool is_consecutive() const;
  bool has_distinct_letters() const { return alphabet_ == letters_.size(); }
  // 12...l or l...21 (length one counts as monotone).
  bool is_monotone() const;

  friend auto operator<=>(const Pattern&, const Pattern&) = default;

private:
  std::vector<std::uint32_t> letters_;
  std::vector<bool> adjacent_;
  std::uint32_t alphabet_ = 0;
};

// Grammar: letters are the digits 1-9, or integers separated by ',' when the
// text contains a comma. A '-' between two letters lifts the adjacency
// requirement; no separator (or ',') keeps it. "1-2-3" is classical 123,
// "123" consecutive, "1-23" the vincular 1(23), "11-2" is (11)2.
Pattern parse_pattern(std::string_view text);
std::string format_pattern(const Pattern& p);

// Compiled occurrence counter for one pattern. Each pattern position is
// checked only against its nearest constraining predecessors (an equal
// letter, or the closest smaller and larger letters placed before it), which
// by transitivity enforces order-isomorphism with equalities.
class OccurrenceMatcher {
public:
  explicit OccurrenceMatcher(const Pattern& p);

  const Pattern& pattern() const { return pattern_; }

  // Exact count for any word length.
  BigInt count(std::span<const Letter> word) const;

  // Fast path for words shorter than 64 letters, where the count is bounded
  // by C(63, l) < 2^64.
  std::uint64_t count_small(std::span<const Letter> word) const;

  // Depth-first enumeration of every occurrence, one at a time.
  std::uint64_t count_by_search(std::span<const Letter> word) const;

  // Memoized count over (position, last index, values bound so far); exact
  // and independent of how many occurrences there are.
  BigInt count_by_memo(std::span<const Letter> word) const;

private:
  struct Constraint {
    int equal = -1; // earlier pattern position holding the same value
    int below = -1; // earlier position with the largest smaller value
    int above = -1; // earlier position with the smallest larger value
  };

  bool admits(std::size_t pos, Letter value, const Letter* bound) const
  {
    const auto& c = constraints_[pos];
    if (c.equal >= 0)
      return value == bound[c.equal];
    if (c.below >= 0 && !(value > bound[c.below]))
      return false;
    if (c.above >= 0 && !(value < bound[c.above]))
      return false;
    return true;
  }

  std::uint64_t count_windows(std::span<const Letter> word) const;

  Pattern pattern_;
  std::vector<Constraint> constraints_;
  bool consecutive_ = false;
};

BigInt count_occurrences(const Pattern& p, const Word& w);
bool avoids(const Pattern& p, const Word& w);

// s -> |M*(p;s)|, zero entries omitted.
struct Distribution {
  Multiset multiset;
  Pattern pattern;
  std::map<std::uint64_t, BigInt> counts;

  // |M*(p;s)|, zero when absent.
  BigInt at(std::uint64_t s) const;
  BigInt total() const;
  // Sum over s of s * |M*(p;s)|: all occurrences over M*.
  BigInt total_occurrences() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

// Exhaustive enumeration of M*. Throws BudgetExceeded before enumerating
// when |M*| exceeds options.budget. Shards are merged in a fixed order, so
// the result does not depend on options.threads.
Distribution distribution(const Multiset& m, const Pattern& p,
                          const RunOptions& options = {});

} // namespace stabpat
