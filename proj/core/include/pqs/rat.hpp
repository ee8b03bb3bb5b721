#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pqs {

/// Exact rational number. gcd(|num|, den) = 1 and den > 0 are maintained by GMP.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline int sign(const Rat& x) { return sgn(x); }

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rat& x);
/// Accepts "a", "-a", "a/b"; throws Error(Input) otherwise.
Rat parse_rat(std::string_view s);

Rat rat_pow(const Rat& x, unsigned e);

/// num/den in canonical form; den != 0.
inline Rat make_rat(long num, long den) {
  Rat r{Int(num), Int(den)};
  r.canonicalize();
  return r;
}

}  // namespace pqs
