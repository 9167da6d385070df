#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace k3v {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Parses "p" or "p/q" with an optional leading sign on p. Throws
/// std::invalid_argument on anything else, including a zero denominator.
BigRational parse_rational(std::string_view text);

/// Canonical "p/q" text; the denominator is omitted when it is 1.
std::string to_string(const BigRational& value);

/// num/den in lowest terms (gmpxx's two-argument constructor does not reduce).
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const BigRational& value) { return value.get_den() == 1; }

BigInt floor_div(const BigRational& value);
BigInt ceil_div(const BigRational& value);

}  // namespace k3v
