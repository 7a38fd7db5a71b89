#pragma once

#include <gmpxx.h>

#include <string>

namespace conforma {

// Exact arbitrary-precision rationals. Everything in the library is computed
// over Q; there is no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rat rat_parse(const std::string& text);

std::string rat_str(const Rat& r);

Rat rat_factorial(unsigned n);

// Falling factorial m(m-1)...(m-j+1); defined for any integer m.
Rat rat_falling(long m, unsigned j);

// Generalized binomial coefficient: falling(m, j) / j!.
Rat rat_binom(long m, unsigned j);

}  // namespace conforma
