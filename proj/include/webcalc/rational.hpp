#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace webcalc {

// Exact rational scalar. mpq_class keeps values reduced with positive
// denominator once canonicalize() has run; every constructor path below
// canonicalizes, so a Rat in the wild is always in normal form.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat(const Int& num, const Int& den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Serialization: "p" when the denominator is 1, otherwise "p/q", q > 0.
std::string rat_str(const Rat& r);

// Parses "p" or "p/q" with optional leading '-'. Throws std::invalid_argument
// on malformed input or zero denominator.
Rat rat_parse(const std::string& s);

// Z2 parity: 0 = even, 1 = odd.
using Parity = int;

Int factorial(long n);

// Ordinary binomial coefficient; zero outside 0 <= k <= n.
Int binom(long n, long k);

// Generalized binomial: n(n-1)...(n-k+1)/k! for any integer n, k >= 0.
// Zero for k < 0. Always an integer.
Int gbinom(const Int& n, long k);
inline Int gbinom(long n, long k) { return gbinom(Int(n), k); }

}  // namespace webcalc
