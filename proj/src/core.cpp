#include "stabpat/core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <stdexcept>

namespace stabpat {

BigInt factorial(unsigned n)
{
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Multiset::Multiset(std::vector<std::uint32_t> raw)
{
  std::erase(raw, 0u);
  mult_ = std::move(raw);
  for (auto k : mult_)
    size_ += k;
}

std::uint32_t Multiset::multiplicity(Letter letter) const
{
  if (letter == 0 || letter > mult_.size())
    throw std::out_of_range("letter " + std::to_string(letter) +
                            " is outside multiset " + to_string());
  return mult_[letter - 1];
}

std::vector<std::uint32_t> Multiset::sorted_key() const
{
  auto key = mult_;
  std::sort(key.begin(), key.end(), std::greater<>());
  return key;
}

std::string Multiset::to_string() const
{
  std::string out = "(";
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(mult_[i]);
  }
  return out + ")";
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters))
{
  for (auto l : letters_)
    if (l == 0)
      throw std::invalid_argument("word letters must be positive");
}

Letter Word::max_letter() const
{
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

std::vector<std::uint32_t> Word::letter_counts() const
{
  std::vector<std::uint32_t> counts(max_letter(), 0);
  for (auto l : letters_)
    ++counts[l - 1];
  return counts;
}

std::string Word::to_string() const
{
  const bool compact = max_letter() <= 9;
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!compact && i)
      out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

Multiset make_multiset(const std::vector<std::uint32_t>& raw)
{
  return Multiset(raw);
}

Multiset transpose_multiset(const Multiset& m, Transposition t)
{
  if (t.index < 1 || t.index + 1 > m.letters())
    throw std::out_of_range("transposition index " + std::to_string(t.index) +
                            " out of range for " + m.to_string());
  auto k = m.multiplicities();
  std::swap(k[t.index - 1], k[t.index]);
  return Multiset(std::move(k));
}

Word apply_sigma(std::span<const Letter> sigma, const Word& w)
{
  std::vector<bool> seen(sigma.size() + 1, false);
  for (auto image : sigma) {
    if (image == 0 || image > sigma.size() || seen[image])
      throw std::invalid_argument("sigma is not a permutation of 1..n");
    seen[image] = true;
  }
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto l : w) {
    if (l > sigma.size())
      throw std::out_of_range("letter " + std::to_string(l) +
                              " outside the domain of sigma");
    out.push_back(sigma[l - 1]);
  }
  return Word(std::move(out));
}

BigInt count_words(const Multiset& m)
{
  BigInt out = factorial(static_cast<unsigned>(m.size()));
  for (auto k : m.multiplicities())
    out /= factorial(k);
  return out;
}

std::uint64_t count_words_u64(const Multiset& m)
{
  const BigInt n = count_words(m);
  if (n > BigInt(std::numeric_limits<unsigned long>::max()))
    return std::numeric_limits<std::uint64_t>::max();
  return n.get_ui();
}

Word first_word(const Multiset& m)
{
  std::vector<Letter> letters;
  letters.reserve(m.size());
  for (std::size_t i = 0; i < m.letters(); ++i)
    letters.insert(letters.end(), m.multiplicities()[i], i + 1);
  return Word(std::move(letters));
}

bool next_word(std::span<Letter> letters)
{
  return std::next_permutation(letters.begin(), letters.end());
}

namespace {

// Remaining letters of M after removing `prefix`, sorted ascending.
std::vector<Letter> remainder_after(const Multiset& m,
                                    std::span<const Letter> prefix)
{
  auto k = m.multiplicities();
  for (auto l : prefix) {
    if (l == 0 || l > k.size() || k[l - 1] == 0)
      throw std::invalid_argument("prefix is not drawable from " + m.to_string());
    --k[l - 1];
  }
  std::vector<Letter> rest;
  for (std::size_t i = 0; i < k.size(); ++i)
    rest.insert(rest.end(), k[i], i + 1);
  return rest;
}

} // namespace

void for_each_word(const Multiset& m, std::span<const Letter> prefix,
                   const std::function<void(std::span<const Letter>)>& visit)
{
  std::vector<Letter> word(prefix.begin(), prefix.end());
  const auto rest = remainder_after(m, prefix);
  word.insert(word.end(), rest.begin(), rest.end());
  std::span<Letter> tail(word.data() + prefix.size(), rest.size());
  do {
    visit(word);
  } while (next_word(tail));
}

std::vector<Word> enumerate_words(const Multiset& m)
{
  std::vector<Word> out;
  for_each_word(m, {}, [&](std::span<const Letter> w) {
    out.emplace_back(std::vector<Letter>(w.begin(), w.end()));
  });
  return out;
}

std::vector<std::vector<Letter>> shard_prefixes(const Multiset& m,
                                                std::size_t min_shards)
{
  std::vector<std::vector<Letter>> shards{{}};
  while (shards.size() < min_shards && shards.front().size() < m.size()) {
    std::vector<std::vector<Letter>> longer;
    for (const auto& prefix : shards) {
      auto k = m.multiplicities();
      for (auto l : prefix)
        --k[l - 1];
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] == 0)
          continue;
        auto extended = prefix;
        extended.push_back(i + 1);
        longer.push_back(std::move(extended));
      }
    }
    shards = std::move(longer);
  }
  return shards;
}

std::vector<Multiset> multiplicity_rearrangements(const Multiset& m)
{
  auto k = m.multiplicities();
  std::sort(k.begin(), k.end());
  std::vector<Multiset> out;
  do {
    out.emplace_back(k);
  } while (std::next_permutation(k.begin(), k.end()));
  return out;
}

namespace {

void partitions(std::uint32_t remaining, std::uint32_t max_part,
                std::size_t slots, std::vector<std::uint32_t>& current,
                std::vector<Multiset>& out)
{
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (slots == 0)
    return;
  for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(remaining - part, part, slots - 1, current, out);
    current.pop_back();
  }
}

std::uint64_t parse_uint(std::string_view token, std::string_view what)
{
  std::uint64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last)
    throw std::invalid_argument("malformed " + std::string(what) + ": '" +
                                std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos)
      return parts;
    start = pos + 1;
  }
}

} // namespace

std::vector<Multiset> canonical_multisets(std::uint32_t size,
                                          std::size_t max_letters)
{
  std::vector<Multiset> out;
  std::vector<std::uint32_t> current;
  partitions(size, size, max_letters, current, out);
  return out;
}

Multiset parse_multiset(std::string_view text)
{
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')')
      throw std::invalid_argument("unbalanced parentheses in multiset");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<std::uint32_t> raw;
  if (!text.empty()) {
    for (auto token : split(text, ',')) {
      const auto value = parse_uint(token, "multiplicity");
      if (value > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("multiplicity too large");
      raw.push_back(static_cast<std::uint32_t>(value));
    }
  }
  return make_multiset(raw);
}

Word parse_word(std::string_view text)
{
  std::vector<Letter> letters;
  if (text.find(',') != std::string_view::npos) {
    for (auto token : split(text, ','))
      letters.push_back(parse_uint(token, "letter"));
  } else {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument(std::string("malformed letter '") + c + "'");
      letters.push_back(static_cast<Letter>(c - '0'));
    }
  }
  for (auto l : letters)
    if (l == 0)
      throw std::invalid_argument("word letters must be positive");
  return Word(std::move(letters));
}

} // namespace stabpat
