#ifndef CSP_APPENDIX_HPP
#define CSP_APPENDIX_HPP

#include <string>
#include <vector>

#include "csp/arith.hpp"
#include "csp/jsonio.hpp"

namespace csp {

// Three inequalities underpinning the positivity estimates, each checked in
// exact arithmetic. The fractional powers of the original statements are
// cleared by cross-raising, so every comparison is between big integers or
// exact rational sums. Out-of-range arguments throw HypothesisViolation.

// sum_{l=0}^{ka-1} 1/(kt+i-l) >= sum_{l=0}^{ja-1} 1/(jt+i-l)
// for 1 <= a <= t, i >= 0, 1 <= j <= k.
bool harmonic_sum_dominance(long a, long t, long i, long j, long k);

// binom(kb+i,ka)^j * binom(ja+i,ja)^k >= binom(jb+i,ja)^k * binom(ka+i,ka)^j
// for 1 <= a <= b, i >= 0, 1 <= j <= k: the k-th-root ratio is monotone in k.
bool binomial_ratio_power_monotone(long a, long b, long i, long j, long k);

// binom(kb+i,ka) * (2a)^{ka} >= binom(ka+i,ka) * (b+a)^{ka}
// for b > a >= 0, k >= 1, 0 <= i <= ka.
bool binomial_product_lower_bound(long a, long b, long i, long k);

struct AppendixViolation {
    std::string inequality;
    std::vector<long> params;
};

struct AppendixReport {
    long max_param = 0;
    long samples = 0;
    unsigned long seed = 0;
    long checks = 0;
    std::vector<AppendixViolation> violations;  // expected empty
};

// Exhaustive sweep of all three inequalities with every parameter bounded by
// max_param, then `samples` seeded random draws per inequality with
// parameters up to 20.
AppendixReport check_appendix_inequalities(long max_param, long samples, unsigned long seed);

json to_json(const AppendixReport& r);

}  // namespace csp

#endif
