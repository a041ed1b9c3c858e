#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "stabpat/numeric.hpp"
#include "stabpat/patterns.hpp"

namespace stabpat {

// Patterns whose distributions are known to be invariant under rearranging
// multiplicities: 11, 1-2, 2-1 and the monotone consecutive patterns.
// Only these may share cache entries across an orbit.
bool order_insensitive(const Pattern& p);

struct CacheKey {
  // Sorted descending for order-insensitive patterns, as given otherwise.
  std::vector<std::uint32_t> multiplicities;
  std::string pattern;
  std::uint64_t s = 0;

  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

CacheKey make_cache_key(const Multiset& m, const Pattern& p, std::uint64_t s);

struct CacheEntry {
  CacheKey key;
  BigInt value;
  std::string provenance; // "bruteforce", "recurrence" or "macmahon"
};

// Append-only store holding one JSON object per line. Loading a line that
// does not parse, or two lines giving different values for one key, raises
// IntegrityError; so does storing a conflicting value.
class ResultCache {
public:
  explicit ResultCache(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }
  std::size_t size() const { return entries_.size(); }

  std::optional<BigInt> lookup(const Multiset& m, const Pattern& p, std::uint64_t s) const;
  void store(const CacheEntry& entry);

  // A full distribution, available only when the cached counts add up to |M*|.
  std::optional<Distribution> lookup_distribution(const Multiset& m, const Pattern& p) const;
  void store_distribution(const Distribution& d, const std::string& provenance);

  std::map<std::string, std::size_t> provenance_counts() const;
  void clear();

private:
  void insert(const CacheEntry& entry, bool append);

  std::filesystem::path path_;
  std::map<CacheKey, CacheEntry> entries_;
};

} // namespace stabpat
