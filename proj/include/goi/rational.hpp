#ifndef GOI_RATIONAL_HPP
#define GOI_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace goi {

using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(n, d) does not reduce; every constructor goes through here.
inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "n" or "n/d".
Rat parse_rat(const std::string& text);

// "n" when the denominator is 1, otherwise "n/d".
std::string rat_string(const Rat& r);

double rat_double(const Rat& r);

// base^exp with integer exponent; base must be nonzero when exp < 0.
Rat rat_pow(const Rat& base, long exp);

}  // namespace goi

#endif
