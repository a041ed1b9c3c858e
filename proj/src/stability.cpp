#include "stabpat/stability.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <stdexcept>

#include "stabpat/errors.hpp"
#include "stabpat/parallel.hpp"

namespace stabpat {

std::vector<Multiset> orbit_walk(const Multiset& m)
{
  std::vector<Multiset> order{m};
  std::set<Multiset> seen{m};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Multiset current = order[head];
    for (std::size_t i = current.letters(); i-- > 1;) {
      auto next = transpose_multiset(current, Transposition{i});
      if (seen.insert(next).second)
        order.push_back(std::move(next));
    }
  }
  return order;
}

BigInt recount(const Multiset& m, const Pattern& p, std::uint64_t s)
{
  const OccurrenceMatcher matcher(p);
  const BigInt target = to_big(s);
  BigInt n = 0;
  for (const auto& w : enumerate_words(m))
    if (matcher.count_by_memo(w.view()) == target)
      ++n;
  return n;
}

namespace {

StabilityVerdict check_orbit(const Multiset& m, const Pattern& p,
                             std::optional<std::uint64_t> only_s,
                             const RunOptions& options)
{
  StabilityVerdict v;
  v.pattern = p;
  v.multiset = m;
  v.canonical = m.sorted_key();
  v.only_s = only_s;

  const auto orbit = orbit_walk(m);
  v.orbit_size = orbit.size();
  const BigInt words = count_words(m);
  if (words * static_cast<unsigned long>(orbit.size()) > to_big(options.budget))
    throw BudgetExceeded("orbit of " + m.to_string() + " holds " +
                         to_decimal(words * static_cast<unsigned long>(orbit.size())) +
                         " words, over the budget of " + std::to_string(options.budget));
  const std::uint64_t per_member = count_words_u64(m);

  const Distribution base = distribution(m, p, options);
  v.words_enumerated = per_member;
  for (std::size_t t = 1; t < orbit.size(); ++t) {
    const Distribution other = distribution(orbit[t], p, options);
    v.words_enumerated += per_member;

    std::optional<std::uint64_t> differs;
    if (only_s) {
      if (base.at(*only_s) != other.at(*only_s))
        differs = *only_s;
    } else {
      std::set<std::uint64_t> keys;
      for (const auto& [s, n] : base.counts)
        keys.insert(s);
      for (const auto& [s, n] : other.counts)
        keys.insert(s);
      for (auto s : keys) {
        if (base.at(s) != other.at(s)) {
          differs = s;
          break;
        }
      }
    }
    if (differs) {
      v.stable = false;
      v.witness = StabilityWitness{orbit[t], *differs, base.at(*differs),
                                   other.at(*differs)};
      break;
    }
  }
  return v;
}

std::size_t parse_size(std::string_view token)
{
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
    throw std::invalid_argument("malformed length '" + std::string(token) + "'");
  return value;
}

std::pair<std::size_t, std::size_t> parse_range(std::string_view text)
{
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    const auto n = parse_size(text);
    return {n, n};
  }
  return {parse_size(text.substr(0, dash)), parse_size(text.substr(dash + 1))};
}

PatternFamily permutation_family(std::size_t min_length, std::size_t max_length,
                                 bool consecutive, const std::string& name)
{
  if (min_length < 1 || min_length > max_length || max_length > 9)
    throw std::invalid_argument("pattern lengths must satisfy 1 <= min <= max <= 9");
  PatternFamily family;
  family.description = name + ":" + std::to_string(min_length) +
                       (min_length == max_length ? "" : "-" + std::to_string(max_length));
  for (std::size_t len = min_length; len <= max_length; ++len) {
    std::vector<std::uint32_t> letters(len);
    for (std::size_t j = 0; j < len; ++j)
      letters[j] = static_cast<std::uint32_t>(j + 1);
    do {
      family.patterns.push_back(consecutive ? Pattern::consecutive(letters)
                                            : Pattern::classical(letters));
    } while (std::next_permutation(letters.begin(), letters.end()));
  }
  return family;
}

PatternFamily list_family(const std::string& description,
                          const std::vector<std::string_view>& texts)
{
  PatternFamily family;
  family.description = description;
  for (auto t : texts)
    family.patterns.push_back(parse_pattern(t));
  return family;
}

} // namespace

StabilityVerdict is_stable_on(const Multiset& m, const Pattern& p,
                              const RunOptions& options)
{
  return check_orbit(m, p, std::nullopt, options);
}

StabilityVerdict is_i_stable_on(const Multiset& m, const Pattern& p, std::uint64_t s,
                                const RunOptions& options)
{
  return check_orbit(m, p, s, options);
}

PatternFamily consecutive_family(std::size_t min_length, std::size_t max_length)
{
  return permutation_family(min_length, max_length, true, "consecutive");
}

PatternFamily classical_family(std::size_t min_length, std::size_t max_length)
{
  return permutation_family(min_length, max_length, false, "classical");
}

PatternFamily parse_family(std::string_view spec)
{
  if (spec == "known-stable")
    return list_family("known-stable", {"1", "11", "1-2", "2-1", "12", "21", "123",
                                        "321", "1234", "4321"});
  if (spec == "vincular-plateau")
    return list_family("vincular-plateau",
                       {"1-23", "1-32", "2-13", "1-1-2", "112", "1-12", "11-2"});
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("unknown pattern family '" + std::string(spec) + "'");
  const auto kind = spec.substr(0, colon);
  const auto rest = spec.substr(colon + 1);
  if (kind == "consecutive" || kind == "classical") {
    const auto [lo, hi] = parse_range(rest);
    return kind == "consecutive" ? consecutive_family(lo, hi) : classical_family(lo, hi);
  }
  if (kind == "list") {
    std::vector<std::string_view> texts;
    std::size_t start = 0;
    for (;;) {
      const auto pos = rest.find(';', start);
      texts.push_back(rest.substr(start, pos - start));
      if (pos == std::string_view::npos)
        break;
      start = pos + 1;
    }
    return list_family(std::string(spec), texts);
  }
  throw std::invalid_argument("unknown pattern family '" + std::string(spec) + "'");
}

ScanReport scan(const PatternFamily& family, const ScanOptions& options)
{
  ScanReport report;
  report.family = family.description;
  report.options = options;

  // Cells run single-threaded inside each pattern task.
  RunOptions cell_options = options.run;
  cell_options.threads = 1;

  report.results = parallel_map(
      family.patterns.size(), options.run.threads, [&](std::size_t t) {
        const Pattern& p = family.patterns[t];
        PatternScan out;
        out.pattern = p;
        for (std::uint32_t size = 1; size <= options.max_size && !out.unstable; ++size) {
          for (const auto& m : canonical_multisets(size, options.max_letters)) {
            StabilityVerdict v;
            try {
              v = options.only_s ? is_i_stable_on(m, p, *options.only_s, cell_options)
                                 : is_stable_on(m, p, cell_options);
            } catch (const BudgetExceeded&) {
              ++out.cells_skipped;
              out.skipped.push_back(m.multiplicities());
              continue;
            }
            ++out.cells_checked;
            out.words_enumerated += v.words_enumerated;
            if (!v.stable) {
              const auto& w = *v.witness;
              if (recount(m, p, w.s) != w.base_count ||
                  recount(w.rearranged, p, w.s) != w.rearranged_count)
                throw IntegrityError("witness for " + format_pattern(p) + " on " +
                                     m.to_string() + " failed its recount");
              out.unstable = true;
              out.counterexample = std::move(v);
              break;
            }
          }
        }
        return out;
      });
  return report;
}

std::string scan_csv(const ScanReport& report)
{
  std::string out = "pattern,verdict,witness_multiset,rearranged_multiset,s,count_a,count_b\n";
  auto quoted = [](const std::string& s) { return "\"" + s + "\""; };
  for (const auto& r : report.results) {
    out += format_pattern(r.pattern) + "," + r.verdict() + ",";
    if (r.counterexample && r.counterexample->witness) {
      const auto& v = *r.counterexample;
      const auto& w = *v.witness;
      out += quoted(v.multiset.to_string()) + "," + quoted(w.rearranged.to_string()) + "," +
             std::to_string(w.s) + "," + to_decimal(w.base_count) + "," +
             to_decimal(w.rearranged_count);
    } else {
      out += ",,,,";
    }
    out += "\n";
  }
  return out;
}

} // namespace stabpat
