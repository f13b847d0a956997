/*
  This is rational.hpp: exact rational scalars and small helpers.

  All lattice pairings in the library are exact; Rat is an arbitrary
  precision rational (GMP).  Strings use the canonical form "p/r" with
  r > 0 and gcd(p,r) = 1; integers print without the denominator.
*/

#ifndef FLAGVAR_RATIONAL_HPP
#define FLAGVAR_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace flagvar {

using Rat = mpq_class;
using QVec = std::vector<Rat>;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/* gmpxx has no long long constructor; on this ABI long is as wide. */
inline Rat rat_ll(long long x) { return Rat(static_cast<long>(x)); }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/* Parse "p", "-p", "p/r" (r > 0 after canonicalization).  Throws
   std::invalid_argument on malformed input. */
Rat rat_parse(const std::string& s);

inline int sign(const Rat& r) { return sgn(r); }

}  // namespace flagvar

#endif
