#include "stabpat/bijections.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace stabpat {

namespace {

// 1 <= i <= n-1, with n the largest letter of the word.
void check_index(const Word& w, std::size_t i)
{
  if (i < 1 || i + 1 > w.max_letter())
    throw std::out_of_range("transposition index " + std::to_string(i) +
                            " out of range for word " + w.to_string());
}

Letter swap_letter(Letter l, std::size_t i)
{
  if (l == i)
    return i + 1;
  if (l == i + 1)
    return i;
  return l;
}

Word swap_all(const Word& run, std::size_t i)
{
  std::vector<Letter> out(run.begin(), run.end());
  for (auto& l : out)
    l = swap_letter(l, i);
  return Word(std::move(out));
}

// Length-3 runs, bit b set when position b (from the left) holds i+1.
// Encoded so that the table reads like i i i -> (i+1)(i+1)(i+1), etc.
constexpr unsigned code3(char a, char b, char c)
{
  return (a == 'J' ? 4u : 0u) | (b == 'J' ? 2u : 0u) | (c == 'J' ? 1u : 0u);
}

constexpr std::array<unsigned, 8> kTheta3 = [] {
  std::array<unsigned, 8> t{};
  // I = i, J = i+1.
  t[code3('I', 'I', 'I')] = code3('J', 'J', 'J');
  t[code3('J', 'J', 'J')] = code3('I', 'I', 'I');
  t[code3('I', 'J', 'I')] = code3('I', 'J', 'J');
  t[code3('J', 'I', 'J')] = code3('I', 'I', 'J');
  t[code3('J', 'J', 'I')] = code3('J', 'I', 'I');
  t[code3('I', 'I', 'J')] = code3('J', 'I', 'J');
  t[code3('I', 'J', 'J')] = code3('I', 'J', 'I');
  t[code3('J', 'I', 'I')] = code3('J', 'J', 'I');
  return t;
}();

Word theta_run(const Word& run, std::size_t i)
{
  const std::size_t len = run.size();
  if (len == 3) {
    const unsigned code = (run[0] == i + 1 ? 4u : 0u) | (run[1] == i + 1 ? 2u : 0u) |
                          (run[2] == i + 1 ? 1u : 0u);
    const unsigned image = kTheta3[code];
    return Word({(image & 4u) ? i + 1 : i, (image & 2u) ? i + 1 : i,
                 (image & 1u) ? i + 1 : i});
  }
  std::vector<Letter> out(run.begin(), run.end());
  std::vector<bool> fixed(len, false);
  if (len >= 2) {
    if (run[0] != run[1])
      fixed[0] = fixed[1] = true;
    if (run[len - 2] != run[len - 1])
      fixed[len - 2] = fixed[len - 1] = true;
  }
  for (std::size_t pos = 0; pos < len; ++pos)
    if (!fixed[pos])
      out[pos] = swap_letter(out[pos], i);
  return Word(std::move(out));
}

} // namespace

Word RunDecomposition::assemble() const { return assemble(runs); }

Word RunDecomposition::assemble(const std::vector<Word>& replacement) const
{
  if (replacement.size() != runs.size())
    throw std::invalid_argument("run count mismatch");
  std::vector<Letter> out;
  for (std::size_t j = 0; j < gaps.size(); ++j) {
    out.insert(out.end(), gaps[j].begin(), gaps[j].end());
    if (j < runs.size()) {
      if (replacement[j].size() != runs[j].size())
        throw std::invalid_argument("run length mismatch");
      out.insert(out.end(), replacement[j].begin(), replacement[j].end());
    }
  }
  return Word(std::move(out));
}

Word reverse(const Word& w)
{
  return Word(std::vector<Letter>(w.letters().rbegin(), w.letters().rend()));
}

Word tau(const Word& w, std::size_t i)
{
  check_index(w, i);
  return swap_all(w, i);
}

RunDecomposition decompose(const Word& w, std::size_t i)
{
  check_index(w, i);
  RunDecomposition out;
  out.index = i;
  auto in_run = [i](Letter l) { return l == i || l == i + 1; };
  std::vector<Letter> current;
  bool current_is_run = false;
  for (auto l : w) {
    if (in_run(l) != current_is_run) {
      if (current_is_run)
        out.runs.emplace_back(std::move(current));
      else
        out.gaps.emplace_back(std::move(current));
      current.clear();
      current_is_run = !current_is_run;
    }
    current.push_back(l);
  }
  if (current_is_run) {
    out.runs.emplace_back(std::move(current));
    out.gaps.emplace_back();
  } else {
    out.gaps.emplace_back(std::move(current));
  }
  return out;
}

Word psi(const Word& w, std::size_t i)
{
  const auto d = decompose(w, i);
  std::vector<Letter> joined;
  for (const auto& run : d.runs)
    joined.insert(joined.end(), run.begin(), run.end());
  std::reverse(joined.begin(), joined.end());
  std::vector<Word> cut;
  auto it = joined.begin();
  for (const auto& run : d.runs) {
    cut.emplace_back(std::vector<Letter>(it, it + static_cast<std::ptrdiff_t>(run.size())));
    it += static_cast<std::ptrdiff_t>(run.size());
  }
  return tau(d.assemble(cut), i);
}

Word phi(const Word& w, std::size_t i)
{
  const auto d = decompose(w, i);
  std::vector<Word> reversed;
  for (const auto& run : d.runs)
    reversed.push_back(reverse(run));
  return tau(d.assemble(reversed), i);
}

Word theta(const Word& w, std::size_t i)
{
  const auto d = decompose(w, i);
  std::vector<Word> mapped;
  for (const auto& run : d.runs)
    mapped.push_back(theta_run(run, i));
  return d.assemble(mapped);
}

} // namespace stabpat
