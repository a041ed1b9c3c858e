#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "stabpat/numeric.hpp"

namespace stabpat {

using Exponents = std::vector<unsigned>;

// A formal power series in caps.size() variables with exact rational
// coefficients, kept for exponents e with e[v] <= caps[v]. The box is
// downward closed, so every operation below is exact on what it keeps.
class TruncatedSeries {
public:
  explicit TruncatedSeries(Exponents caps);

  static TruncatedSeries constant(Exponents caps, const Rational& value);
  static TruncatedSeries variable(Exponents caps, std::size_t var);

  const Exponents& caps() const { return caps_; }
  std::size_t arity() const { return caps_.size(); }
  std::size_t terms() const { return coeffs_.size(); }

  // Zero outside the box.
  Rational coefficient(std::span<const unsigned> e) const;
  void set(std::span<const unsigned> e, const Rational& value);

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& scalar);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b)
  {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b)
  {
    return a -= b;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  // d/dx_var. The top coefficient in x_var is lost, so the result is exact
  // only up to caps[var] - 1 in that variable.
  TruncatedSeries derivative(std::size_t var) const;

  // x_var^power * f, truncated.
  TruncatedSeries shifted(std::size_t var, unsigned power = 1) const;

  // Same series on a smaller box.
  TruncatedSeries truncated(Exponents caps) const;

  // exp(f); requires a zero constant term. Uses |a| g_a = sum |b| f_b g_{a-b},
  // which follows from applying the total-degree operator to g = exp(f).
  TruncatedSeries exp() const;

  // 1/f; requires constant term 1.
  TruncatedSeries inverse() const;

  // First exponent (in index order) where the two series differ.
  std::optional<Exponents> first_difference(const TruncatedSeries& other) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
  {
    return a.caps_ == b.caps_ && a.coeffs_ == b.coeffs_;
  }

  Exponents exponents_of(std::size_t index) const;

private:
  std::size_t index_of(std::span<const unsigned> e) const;
  bool inside(std::span<const unsigned> e) const;
  void require_same_box(const TruncatedSeries& other) const;

  Exponents caps_;
  std::vector<std::size_t> strides_;
  std::vector<Rational> coeffs_;
};

// Polynomial with integer coefficients keyed by exponent vector; products
// drop every monomial beyond the per-variable caps.
class SparsePolynomial {
public:
  explicit SparsePolynomial(Exponents caps) : caps_(std::move(caps)) {}

  static SparsePolynomial one(Exponents caps);

  const Exponents& caps() const { return caps_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }

  BigInt coefficient(const Exponents& e) const;
  // Adds c * x^e if e is within the caps.
  void add_term(const Exponents& e, const BigInt& c);

  SparsePolynomial operator*(const SparsePolynomial& other) const;
  SparsePolynomial power(unsigned k) const;

private:
  Exponents caps_;
  std::map<Exponents, BigInt> terms_;
};

} // namespace stabpat
