#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace interp {

/// Exact rationals. mpq_class keeps gcd(num, den) = 1 and den > 0 as long
/// as values are produced by arithmetic or by parse_rat.
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" (q != 0). Surrounding blanks are ignored.
Rat parse_rat(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is 1.
std::string to_string(const Rat& q);

/// num/den in lowest terms; the two-argument mpq_class constructor does
/// not reduce.
inline Rat ratio(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

/// Multiplicative inverse; throws DomainError on zero.
Rat unit_inverse(const Rat& q);

Rat factorial(int n);
Rat binomial(int n, int k);

}  // namespace interp
