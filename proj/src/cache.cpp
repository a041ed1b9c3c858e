#include "stabpat/cache.hpp"

#include <algorithm>
#include <fstream>
#include <functional>

#include "stabpat/errors.hpp"
#include "stabpat/json.hpp"

namespace stabpat {

bool order_insensitive(const Pattern& p)
{
  if (p.is_consecutive() && p.has_distinct_letters() && p.is_monotone())
    return true;
  const auto text = format_pattern(p);
  return text == "11" || text == "1-2" || text == "2-1";
}

CacheKey make_cache_key(const Multiset& m, const Pattern& p, std::uint64_t s)
{
  CacheKey key{m.multiplicities(), format_pattern(p), s};
  if (order_insensitive(p))
    std::sort(key.multiplicities.begin(), key.multiplicities.end(), std::greater<>());
  return key;
}

namespace {

std::string serialize(const CacheEntry& e)
{
  const Json line{{"multiset", e.key.multiplicities},
                  {"pattern", e.key.pattern},
                  {"s", e.key.s},
                  {"value", to_decimal(e.value)},
                  {"provenance", e.provenance}};
  return line.dump();
}

CacheEntry parse_line(const std::string& line)
{
  const auto j = Json::parse(line);
  CacheEntry e;
  e.key.multiplicities = j.at("multiset").get<std::vector<std::uint32_t>>();
  e.key.pattern = j.at("pattern").get<std::string>();
  e.key.s = j.at("s").get<std::uint64_t>();
  const auto value = j.at("value").get<std::string>();
  if (value.empty() || !std::all_of(value.begin(), value.end(),
                                    [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("value is not a decimal count");
  e.value = from_decimal(value);
  e.provenance = j.at("provenance").get<std::string>();
  if (e.provenance != "bruteforce" && e.provenance != "recurrence" &&
      e.provenance != "macmahon")
    throw std::invalid_argument("unknown provenance '" + e.provenance + "'");
  // Re-derive the key so a line cannot smuggle in an ordered key for an
  // order-insensitive pattern or the reverse.
  const auto p = parse_pattern(e.key.pattern);
  if (e.key != make_cache_key(Multiset(e.key.multiplicities), p, e.key.s))
    throw std::invalid_argument("key is not in canonical form");
  return e;
}

} // namespace

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path))
{
  std::ifstream in(path_);
  if (!in)
    return;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty())
      continue;
    CacheEntry e;
    try {
      e = parse_line(line);
    } catch (const std::exception& ex) {
      throw IntegrityError("corrupt cache line " + std::to_string(number) + " in " +
                           path_.string() + ": " + ex.what());
    }
    insert(e, false);
  }
}

void ResultCache::insert(const CacheEntry& entry, bool append)
{
  auto [it, fresh] = entries_.emplace(entry.key, entry);
  if (!fresh) {
    if (it->second.value != entry.value)
      throw IntegrityError("cache conflict for pattern " + entry.key.pattern + " at s=" +
                           std::to_string(entry.key.s) + ": " +
                           to_decimal(it->second.value) + " vs " + to_decimal(entry.value));
    return;
  }
  if (append) {
    std::ofstream out(path_, std::ios::app);
    if (!out)
      throw std::runtime_error("cannot write cache file " + path_.string());
    out << serialize(entry) << '\n';
  }
}

std::optional<BigInt> ResultCache::lookup(const Multiset& m, const Pattern& p,
                                          std::uint64_t s) const
{
  auto it = entries_.find(make_cache_key(m, p, s));
  if (it == entries_.end())
    return std::nullopt;
  return it->second.value;
}

void ResultCache::store(const CacheEntry& entry)
{
  insert(entry, true);
}

std::optional<Distribution> ResultCache::lookup_distribution(const Multiset& m,
                                                             const Pattern& p) const
{
  const auto first = make_cache_key(m, p, 0);
  Distribution d{m, p, {}};
  for (auto it = entries_.lower_bound(first); it != entries_.end(); ++it) {
    const auto& key = it->first;
    if (key.multiplicities != first.multiplicities || key.pattern != first.pattern)
      break;
    if (it->second.value != 0)
      d.counts[key.s] = it->second.value;
  }
  if (d.total() != count_words(m))
    return std::nullopt;
  return d;
}

void ResultCache::store_distribution(const Distribution& d, const std::string& provenance)
{
  for (const auto& [s, n] : d.counts)
    store({make_cache_key(d.multiset, d.pattern, s), n, provenance});
}

std::map<std::string, std::size_t> ResultCache::provenance_counts() const
{
  std::map<std::string, std::size_t> out;
  for (const auto& [key, e] : entries_)
    ++out[e.provenance];
  return out;
}

void ResultCache::clear()
{
  entries_.clear();
  std::ofstream out(path_, std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot write cache file " + path_.string());
}

} // namespace stabpat
