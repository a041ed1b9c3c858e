#pragma once

// Brute-force reference implementations. They share no code with the
// library: occurrences are found by trying every index subset and comparing
// every pair of letters, and words are generated by plain recursion.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using Letters = std::vector<std::uint64_t>;

struct RefPattern {
  std::vector<std::uint64_t> letters;
  std::vector<bool> adjacent; // one flag per gap
};

// "1-23" style; digits only.
inline RefPattern pattern(const std::string& text)
{
  RefPattern p;
  bool gap = false;
  for (char c : text) {
    if (c == '-') {
      gap = true;
      continue;
    }
    if (!p.letters.empty())
      p.adjacent.push_back(!gap);
    p.letters.push_back(static_cast<std::uint64_t>(c - '0'));
    gap = false;
  }
  return p;
}

inline Letters word(const std::string& text)
{
  Letters w;
  for (char c : text)
    w.push_back(static_cast<std::uint64_t>(c - '0'));
  return w;
}

inline int sign(std::uint64_t a, std::uint64_t b) { return (a > b) - (a < b); }

inline bool matches(const RefPattern& p, const Letters& w, const std::vector<std::size_t>& at)
{
  for (std::size_t j = 0; j + 1 < at.size(); ++j)
    if (p.adjacent[j] && at[j + 1] != at[j] + 1)
      return false;
  for (std::size_t a = 0; a < at.size(); ++a)
    for (std::size_t b = a + 1; b < at.size(); ++b)
      if (sign(w[at[a]], w[at[b]]) != sign(p.letters[a], p.letters[b]))
        return false;
  return true;
}

inline void choose(const RefPattern& p, const Letters& w, std::vector<std::size_t>& at,
                   std::size_t from, std::uint64_t& total)
{
  if (at.size() == p.letters.size()) {
    total += matches(p, w, at);
    return;
  }
  for (std::size_t i = from; i < w.size(); ++i) {
    at.push_back(i);
    choose(p, w, at, i + 1, total);
    at.pop_back();
  }
}

inline std::uint64_t count(const RefPattern& p, const Letters& w)
{
  std::vector<std::size_t> at;
  std::uint64_t total = 0;
  choose(p, w, at, 0, total);
  return total;
}

inline void generate(std::vector<std::uint32_t>& left, Letters& current,
                     std::vector<Letters>& out)
{
  bool any = false;
  for (std::size_t v = 0; v < left.size(); ++v) {
    if (left[v] == 0)
      continue;
    any = true;
    --left[v];
    current.push_back(v + 1);
    generate(left, current, out);
    current.pop_back();
    ++left[v];
  }
  if (!any)
    out.push_back(current);
}

// All words with k[v] copies of letter v+1, in lexicographic order.
inline std::vector<Letters> words(std::vector<std::uint32_t> k)
{
  std::vector<Letters> out;
  Letters current;
  generate(k, current, out);
  return out;
}

inline std::map<std::uint64_t, std::uint64_t> distribution(const std::vector<std::uint32_t>& k,
                                                           const std::string& p)
{
  std::map<std::uint64_t, std::uint64_t> out;
  const auto rp = pattern(p);
  for (const auto& w : words(k))
    ++out[count(rp, w)];
  return out;
}

// Every vector of positive multiplicities with the given total and at most
// `letters` entries, in lexicographic order.
inline std::vector<std::vector<std::uint32_t>> compositions(std::uint32_t total,
                                                            std::size_t letters)
{
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (cur.size() == letters)
      return;
    for (std::uint32_t k = 1; k <= left; ++k) {
      cur.push_back(k);
      self(self, left - k);
      cur.pop_back();
    }
  };
  rec(rec, total);
  return out;
}

inline std::uint64_t ascents(const Letters& w)
{
  std::uint64_t n = 0;
  for (std::size_t j = 0; j + 1 < w.size(); ++j)
    n += w[j] < w[j + 1];
  return n;
}

inline std::uint64_t descents(const Letters& w)
{
  std::uint64_t n = 0;
  for (std::size_t j = 0; j + 1 < w.size(); ++j)
    n += w[j] > w[j + 1];
  return n;
}

} // namespace oracle
