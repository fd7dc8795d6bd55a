#ifndef CSP_ARITH_HPP
#define CSP_ARITH_HPP

#include <gmpxx.h>

#include <string>

namespace csp {

// All core arithmetic is exact. Integers are GMP big ints, rationals are
// always kept canonical (gcd(num,den)=1, den>0).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Exact conversion; throws if r has a nontrivial denominator.
Int to_int(const Rat& r);

Int int_pow(const Int& base, unsigned long e);

// Counting convention: 0 when k < 0, k > n or n < 0.
Int binomial(long n, long k);

// Same convention with a big upper argument.
Int binomial_big(const Int& n, long k);

Int factorial(long n);

// Parses "p/q" or "p" (used by the matrix JSON format). Rejects zero
// denominators and malformed strings.
Rat parse_rat(const std::string& s);

// Canonical "p/q" form, plain "p" for integers.
std::string rat_string(const Rat& r);

}  // namespace csp

#endif
