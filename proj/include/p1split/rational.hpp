#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace p1split {

// Arbitrary-precision rationals. mpq_class keeps values canonical (reduced,
// positive denominator) as long as every constructor path calls canonicalize(),
// which make_rat/parse_rat do.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

// Accepts "p" or "p/q" with optional sign; throws std::invalid_argument.
Rat parse_rat(std::string_view text);

Int lcm(const Int& a, const Int& b);

}  // namespace p1split
