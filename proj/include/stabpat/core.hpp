#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stabpat/numeric.hpp"

namespace stabpat {

using Letter = std::uint64_t;

// Default ceiling on the number of words a single exhaustive computation may
// enumerate.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct RunOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
};

// M(k_1,...,k_n): k_i copies of letter i. Always canonical: every k_i >= 1.
class Multiset {
public:
  Multiset() = default;
  // Zero entries are dropped and the remaining letters compacted in order.
  explicit Multiset(std::vector<std::uint32_t> raw);
  Multiset(std::initializer_list<std::uint32_t> raw)
      : Multiset(std::vector<std::uint32_t>(raw))
  {
  }

  std::size_t letters() const { return mult_.size(); }
  std::uint64_t size() const { return size_; }
  bool empty() const { return mult_.empty(); }
  std::uint32_t multiplicity(Letter letter) const;
  const std::vector<std::uint32_t>& multiplicities() const { return mult_; }

  // Multiplicities sorted descending: the stability-canonical key of the
  // orbit this multiset belongs to.
  std::vector<std::uint32_t> sorted_key() const;

  std::string to_string() const;

  friend auto operator<=>(const Multiset&, const Multiset&) = default;

private:
  std::vector<std::uint32_t> mult_;
  std::uint64_t size_ = 0;
};

// A permutation of a multiset: a finite sequence of positive letters.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters)
      : Word(std::vector<Letter>(letters))
  {
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t pos) const { return letters_[pos]; }
  Letter max_letter() const;

  std::span<const Letter> view() const { return letters_; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // Occurrence counts of the letters 1..max_letter(), zero where absent.
  std::vector<std::uint32_t> letter_counts() const;

  std::string to_string() const;

  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

// The adjacent transposition (i, i+1); 1-based.
struct Transposition {
  std::size_t index = 1;
};

Multiset make_multiset(const std::vector<std::uint32_t>& raw);

// M_i = (i,i+1).M: k_i and k_{i+1} exchanged.
Multiset transpose_multiset(const Multiset& m, Transposition t);

// sigma(w_1)...sigma(w_m). `sigma` lists sigma(1),...,sigma(n).
Word apply_sigma(std::span<const Letter> sigma, const Word& w);

// |M*| = m! / (k_1! ... k_n!).
BigInt count_words(const Multiset& m);

// Same, as a machine integer; saturates at UINT64_MAX.
std::uint64_t count_words_u64(const Multiset& m);

// The word with all letters in weakly increasing order.
Word first_word(const Multiset& m);

// Lexicographic successor among permutations of the same multiset.
// Returns false (leaving `letters` sorted ascending) after the last word.
bool next_word(std::span<Letter> letters);

// Streams every word of M* that starts with `prefix`, in lexicographic
// order. The prefix must be drawable from M. The span passed to `visit`
// is only valid for the duration of the call.
void for_each_word(const Multiset& m, std::span<const Letter> prefix,
                   const std::function<void(std::span<const Letter>)>& visit);

std::vector<Word> enumerate_words(const Multiset& m);

// Prefixes splitting M* into disjoint lexicographically ordered shards;
// concatenating the shards in the returned order reproduces the full stream.
// Prefix length grows until there are at least `min_shards` shards or the
// prefix covers the whole word.
std::vector<std::vector<Letter>> shard_prefixes(const Multiset& m,
                                                std::size_t min_shards);

// The S_n-orbit of M under the multiplicity action, without duplicates,
// in lexicographic order of multiplicity vectors.
std::vector<Multiset> multiplicity_rearrangements(const Multiset& m);

// Sorted-descending multiplicity vectors of total size `size` with at most
// `max_letters` parts, in descending lexicographic order.
std::vector<Multiset> canonical_multisets(std::uint32_t size,
                                          std::size_t max_letters);

// Text forms: "(2,4,2,1)" for multisets; "321432212" or "3,2,1,4" for words.
Multiset parse_multiset(std::string_view text);
Word parse_word(std::string_view text);

} // namespace stabpat
