// Exact arithmetic aliases. All computation in the solver path is integer or
// rational; no floating point anywhere.

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dix {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& q) {
  Rat c(q);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Exact integer check; returns true and sets out when q is integral.
inline bool as_integer(const Rat& q, Int& out) {
  Rat c(q);
  c.canonicalize();
  if (c.get_den() != 1) return false;
  out = c.get_num();
  return true;
}

}  // namespace dix
