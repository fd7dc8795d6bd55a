#ifndef CSP_NUMERIC_HPP
#define CSP_NUMERIC_HPP

#include <vector>

#include "csp/arith.hpp"

namespace csp {

// Divisors of n in increasing order. Cached per n (thread safe); the
// returned reference stays valid for the lifetime of the program.
const std::vector<long>& divisors(long n);

// Moebius function, mu(1) = 1.
int mobius(long k);

bool is_prime(long n);

// gcd with the convention gcd(n, 0) = n (exponent 0 plays the divisor n).
long gcd_n(long n, long k);

}  // namespace csp

#endif
