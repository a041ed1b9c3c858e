#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabpat/core.hpp"
#include "stabpat/numeric.hpp"
#include "stabpat/patterns.hpp"

namespace stabpat {

struct StabilityWitness {
  Multiset rearranged;
  std::uint64_t s = 0;
  BigInt base_count;       // |M*(p;s)|
  BigInt rearranged_count; // |M'*(p;s)|
};

struct StabilityVerdict {
  Pattern pattern;
  Multiset multiset;                   // as given
  std::vector<std::uint32_t> canonical; // multiplicities sorted descending
  std::optional<std::uint64_t> only_s; // set for i-stability checks
  bool stable = true;                  // "stable on the orbit"
  std::optional<StabilityWitness> witness;
  std::uint64_t orbit_size = 0;
  std::uint64_t words_enumerated = 0;
};

// Compares the distribution of p over M* with that over every multiplicity
// rearrangement M'. The orbit is walked breadth-first from M through
// adjacent transpositions (every permutation of multiplicities is a product
// of them), trying i = n-1 down to 1, and the first M' that differs is
// reported at its smallest differing s. Throws BudgetExceeded when the
// whole orbit holds more than options.budget words.
StabilityVerdict is_stable_on(const Multiset& m, const Pattern& p,
                              const RunOptions& options = {});

// Same, comparing only |M*(p;s)|.
StabilityVerdict is_i_stable_on(const Multiset& m, const Pattern& p, std::uint64_t s,
                                const RunOptions& options = {});

// The orbit of M in breadth-first adjacent-transposition order, M first.
std::vector<Multiset> orbit_walk(const Multiset& m);

// Counts |M*(p;s)| by a path independent of distribution(): the memoized
// matcher over a materialized word list.
BigInt recount(const Multiset& m, const Pattern& p, std::uint64_t s);

struct PatternFamily {
  std::string description;
  std::vector<Pattern> patterns;
};

// All patterns of the given length range with distinct letters, in
// lexicographic order of their letters.
PatternFamily consecutive_family(std::size_t min_length, std::size_t max_length);
PatternFamily classical_family(std::size_t min_length, std::size_t max_length);

// "consecutive:3", "consecutive:3-4", "classical:3", "list:1-23;112;11-2",
// or one of the presets "known-stable" and "vincular-plateau".
PatternFamily parse_family(std::string_view spec);

struct ScanOptions {
  std::uint32_t max_size = 6;
  std::size_t max_letters = 4;
  std::optional<std::uint64_t> only_s; // restrict to i-stability
  RunOptions run;
};

struct PatternScan {
  Pattern pattern;
  bool unstable = false;
  std::optional<StabilityVerdict> counterexample;
  std::uint64_t cells_checked = 0;
  std::uint64_t cells_skipped = 0;
  std::uint64_t words_enumerated = 0;
  std::vector<std::vector<std::uint32_t>> skipped; // canonical keys

  std::string verdict() const
  {
    return unstable ? "unstable" : "no-counterexample";
  }
};

struct ScanReport {
  std::string family;
  ScanOptions options;
  std::vector<PatternScan> results;
};

// Visits, per pattern, canonical multisets by increasing size (descending
// multiplicity vectors within a size) and stops at the first unstable cell.
// Patterns are independent tasks spread over options.run.threads workers.
// Every witness is recounted independently before it is reported.
ScanReport scan(const PatternFamily& family, const ScanOptions& options);

// pattern,verdict,witness_multiset,rearranged_multiset,s,count_a,count_b
std::string scan_csv(const ScanReport& report);

} // namespace stabpat
