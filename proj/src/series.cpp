#include "stabpat/series.hpp"

#include <numeric>
#include <stdexcept>

#include "stabpat/errors.hpp"

namespace stabpat {

TruncatedSeries::TruncatedSeries(Exponents caps) : caps_(std::move(caps))
{
  strides_.resize(caps_.size());
  std::size_t size = 1;
  for (std::size_t v = caps_.size(); v-- > 0;) {
    strides_[v] = size;
    size *= caps_[v] + 1;
  }
  coeffs_.assign(size, Rational(0));
}

TruncatedSeries TruncatedSeries::constant(Exponents caps, const Rational& value)
{
  TruncatedSeries out(std::move(caps));
  out.coeffs_[0] = value;
  return out;
}

TruncatedSeries TruncatedSeries::variable(Exponents caps, std::size_t var)
{
  TruncatedSeries out(std::move(caps));
  if (var >= out.arity())
    throw std::out_of_range("series variable out of range");
  if (out.caps_[var] >= 1)
    out.coeffs_[out.strides_[var]] = 1;
  return out;
}

bool TruncatedSeries::inside(std::span<const unsigned> e) const
{
  if (e.size() != caps_.size())
    throw std::invalid_argument("exponent arity does not match the series");
  for (std::size_t v = 0; v < e.size(); ++v)
    if (e[v] > caps_[v])
      return false;
  return true;
}

std::size_t TruncatedSeries::index_of(std::span<const unsigned> e) const
{
  std::size_t idx = 0;
  for (std::size_t v = 0; v < e.size(); ++v)
    idx += e[v] * strides_[v];
  return idx;
}

Exponents TruncatedSeries::exponents_of(std::size_t index) const
{
  Exponents e(caps_.size());
  for (std::size_t v = 0; v < caps_.size(); ++v) {
    e[v] = static_cast<unsigned>(index / strides_[v]);
    index %= strides_[v];
  }
  return e;
}

Rational TruncatedSeries::coefficient(std::span<const unsigned> e) const
{
  return inside(e) ? coeffs_[index_of(e)] : Rational(0);
}

void TruncatedSeries::set(std::span<const unsigned> e, const Rational& value)
{
  if (!inside(e))
    throw std::out_of_range("exponent outside the truncation box");
  coeffs_[index_of(e)] = value;
}

void TruncatedSeries::require_same_box(const TruncatedSeries& other) const
{
  if (caps_ != other.caps_)
    throw std::invalid_argument("series have different truncation boxes");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other)
{
  require_same_box(other);
  for (std::size_t t = 0; t < coeffs_.size(); ++t)
    coeffs_[t] += other.coeffs_[t];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other)
{
  require_same_box(other);
  for (std::size_t t = 0; t < coeffs_.size(); ++t)
    coeffs_[t] -= other.coeffs_[t];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar)
{
  for (auto& c : coeffs_)
    c *= scalar;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
  a.require_same_box(b);
  TruncatedSeries out(a.caps_);
  const std::size_t n = a.arity();
  std::vector<Exponents> exps(a.terms());
  for (std::size_t t = 0; t < a.terms(); ++t)
    exps[t] = a.exponents_of(t);
  for (std::size_t i = 0; i < a.terms(); ++i) {
    if (sgn(a.coeffs_[i]) == 0)
      continue;
    for (std::size_t j = 0; j < b.terms(); ++j) {
      if (sgn(b.coeffs_[j]) == 0)
        continue;
      bool fits = true;
      for (std::size_t v = 0; v < n && fits; ++v)
        fits = exps[i][v] + exps[j][v] <= a.caps_[v];
      if (fits)
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::derivative(std::size_t var) const
{
  TruncatedSeries out(caps_);
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    auto e = exponents_of(t);
    if (e[var] == 0 || sgn(coeffs_[t]) == 0)
      continue;
    const unsigned power = e[var];
    --e[var];
    out.coeffs_[index_of(e)] = coeffs_[t] * power;
  }
  return out;
}

TruncatedSeries TruncatedSeries::shifted(std::size_t var, unsigned power) const
{
  TruncatedSeries out(caps_);
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    auto e = exponents_of(t);
    e[var] += power;
    if (e[var] <= caps_[var])
      out.coeffs_[index_of(e)] = coeffs_[t];
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(Exponents caps) const
{
  TruncatedSeries out(std::move(caps));
  if (out.arity() != arity())
    throw std::invalid_argument("truncation changes the arity");
  for (std::size_t t = 0; t < out.terms(); ++t) {
    const auto e = out.exponents_of(t);
    out.coeffs_[t] = coefficient(e);
  }
  return out;
}

TruncatedSeries TruncatedSeries::exp() const
{
  if (sgn(coeffs_[0]) != 0)
    throw std::invalid_argument("exp needs a zero constant term");
  const std::size_t n = arity();
  std::vector<Exponents> exps(terms());
  std::vector<unsigned> degree(terms());
  for (std::size_t t = 0; t < terms(); ++t) {
    exps[t] = exponents_of(t);
    degree[t] = std::accumulate(exps[t].begin(), exps[t].end(), 0u);
  }
  // Every b <= a has a smaller index than a, so index order is a valid
  // evaluation order.
  TruncatedSeries g(caps_);
  g.coeffs_[0] = 1;
  for (std::size_t a = 1; a < terms(); ++a) {
    Rational sum = 0;
    for (std::size_t b = 1; b <= a; ++b) {
      if (sgn(coeffs_[b]) == 0)
        continue;
      bool below = true;
      for (std::size_t v = 0; v < n && below; ++v)
        below = exps[b][v] <= exps[a][v];
      if (below)
        sum += coeffs_[b] * degree[b] * g.coeffs_[a - b];
    }
    g.coeffs_[a] = sum / degree[a];
  }
  return g;
}

TruncatedSeries TruncatedSeries::inverse() const
{
  if (coeffs_[0] != 1)
    throw std::invalid_argument("inverse needs constant term 1");
  const std::size_t n = arity();
  std::vector<Exponents> exps(terms());
  for (std::size_t t = 0; t < terms(); ++t)
    exps[t] = exponents_of(t);
  // 1/(1 - u) = sum u^j with u = 1 - f, written as g_a = -sum_{b != 0} f_b g_{a-b}.
  TruncatedSeries g(caps_);
  g.coeffs_[0] = 1;
  for (std::size_t a = 1; a < terms(); ++a) {
    Rational sum = 0;
    for (std::size_t b = 1; b <= a; ++b) {
      if (sgn(coeffs_[b]) == 0)
        continue;
      bool below = true;
      for (std::size_t v = 0; v < n && below; ++v)
        below = exps[b][v] <= exps[a][v];
      if (below)
        sum += coeffs_[b] * g.coeffs_[a - b];
    }
    g.coeffs_[a] = -sum;
  }
  return g;
}

std::optional<Exponents> TruncatedSeries::first_difference(const TruncatedSeries& other) const
{
  require_same_box(other);
  for (std::size_t t = 0; t < terms(); ++t)
    if (coeffs_[t] != other.coeffs_[t])
      return exponents_of(t);
  return std::nullopt;
}

SparsePolynomial SparsePolynomial::one(Exponents caps)
{
  SparsePolynomial out(std::move(caps));
  out.add_term(Exponents(out.caps_.size(), 0), 1);
  return out;
}

BigInt SparsePolynomial::coefficient(const Exponents& e) const
{
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SparsePolynomial::add_term(const Exponents& e, const BigInt& c)
{
  if (e.size() != caps_.size())
    throw std::invalid_argument("exponent arity does not match the polynomial");
  for (std::size_t v = 0; v < e.size(); ++v)
    if (e[v] > caps_[v])
      return;
  auto& slot = terms_[e];
  slot += c;
  if (slot == 0)
    terms_.erase(e);
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const
{
  if (caps_ != other.caps_)
    throw std::invalid_argument("polynomials have different caps");
  SparsePolynomial out(caps_);
  Exponents e(caps_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      bool fits = true;
      for (std::size_t v = 0; v < e.size() && fits; ++v) {
        e[v] = ea[v] + eb[v];
        fits = e[v] <= caps_[v];
      }
      if (fits)
        out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePolynomial SparsePolynomial::power(unsigned k) const
{
  SparsePolynomial out = one(caps_);
  for (unsigned t = 0; t < k; ++t)
    out = out * *this;
  return out;
}

} // namespace stabpat
