#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabpat/core.hpp"
#include "stabpat/numeric.hpp"
#include "stabpat/patterns.hpp"

namespace stabpat {

// Two occurrences of a consecutive pattern p = p_1...p_l overlapping in
// l-i+1 letters: the first occupies positions 1..l, the second i..l+i-1.
// The overlap letters cut the value axis into l-i+2 bands, j = 1..l-i+2.
struct GapVectors {
  // order[t] is the 1-based position in p_1..p_{l-i+1} holding the t-th
  // smallest overlap value.
  std::vector<std::size_t> order;
  // Letters of the second occurrence outside the overlap, per band.
  std::vector<std::int64_t> suffix_band;
  // Letters of the first occurrence outside the overlap, per band.
  std::vector<std::int64_t> prefix_band;
  // min(suffix_band, prefix_band): values both sides can share.
  std::vector<std::int64_t> shared;
  // |suffix_band - prefix_band|: values only one side uses.
  std::vector<std::int64_t> unshared;
};

struct ExtendabilityReport {
  Pattern pattern;
  std::size_t index = 0;
  GapVectors gaps;
  Word extended_permutation;
  Multiset extended_multiset;
};

// An instability witness: |M*(p;s)| != |Mbar*(p;s)| with Mbar a
// multiplicity rearrangement of M.
struct WitnessPair {
  Pattern pattern;
  std::uint64_t s = 0;
  Multiset base;
  Multiset swapped;
  BigInt base_count;
  BigInt swapped_count;
  // Which construction produced the pair.
  std::string construction;
  // Multiset letter indices used by the consecutive constructions (1-based):
  // number of letters, and the positions of the swapped multiplicities.
  std::optional<std::size_t> letter_count;
  std::optional<std::size_t> first_offset;
  std::optional<std::size_t> second_offset;
  std::optional<std::size_t> smaller_letters;
  std::pair<std::size_t, std::size_t> swapped_letters{0, 0};
};

// p_i..p_l order-isomorphic to p_1..p_{l-i+1}. Requires p consecutive with
// distinct letters and 2 <= i <= l.
bool is_extendable(const Pattern& p, std::size_t i);
std::vector<std::size_t> extendable_indices(const Pattern& p);
// Throws std::invalid_argument for patterns of length one.
std::size_t minimal_extendable_index(const Pattern& p);

GapVectors gap_vectors(const Pattern& p, std::size_t i);
Multiset extended_multiset(const Pattern& p, std::size_t i);

// Band by band, the t-th smallest first-occurrence letter and the t-th
// smallest second-occurrence letter receive the same value. The result is
// checked (both occurrences, letter multiset) before it is returned.
Word extended_permutation(const Pattern& p, std::size_t i);

ExtendabilityReport extend(const Pattern& p, std::size_t i);

// For a classical pattern with distinct letters and l >= 3: M with
// k_{p_1} = 2, k_{p_l} = 3 and every other multiplicity 1, Mbar with
// k_{p_2} and k_{p_l} exchanged, compared at s = 1. The brute-force counts
// are checked against l(l^2-5)/2 and l(l^2-3)/2.
WitnessPair classical_instability_witness(const Pattern& p,
                                          const RunOptions& options = {});

// For a consecutive pattern with distinct letters, built from the extended
// multiset at the minimal extendable index; nullopt when the extended
// permutation has no repeated letter. The pair is always recounted and an
// IntegrityError is thrown unless |Mbar*(p;2)| = 0 < |M*(p;2)|.
std::optional<WitnessPair>
consecutive_instability_witness(const Pattern& p, const RunOptions& options = {});

} // namespace stabpat
