#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zastava {

// Exact rational scalar.  GMP keeps values canonical (den > 0, gcd = 1),
// which is also the serialization contract: "num/den", "/den" dropped when
// the denominator is 1.  No floating point anywhere in this library.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

// Parses "num" or "num/den"; canonicalizes, so "3/6" is accepted as "1/2".
inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline Rat pow_int(const Rat& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("pow_int: 0 to a negative power");
    return pow_int(Rat(1) / base, -exp);
  }
  Rat acc(1), b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline Rat inverse(const Rat& q) {
  if (q == 0) throw std::domain_error("inverse: division by zero");
  return Rat(1) / q;
}

}  // namespace zastava
