#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace stabpat {

// Exact arithmetic used on every counting path.
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

inline BigInt from_decimal(const std::string& text)
{
  return BigInt(text, 10);
}

inline BigInt to_big(std::uint64_t value)
{
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
  return out;
}

BigInt factorial(unsigned n);

} // namespace stabpat
