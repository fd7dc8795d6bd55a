#ifndef CSP_SIEVE_HPP
#define CSP_SIEVE_HPP

#include <optional>
#include <vector>

#include "csp/arith.hpp"
#include "csp/exactroots.hpp"

namespace csp {

// S_k for k = 1..n: the number of elements of order exactly k in any cyclic
// action complementing f to a CSP triple.
struct OrbitProfile {
    long n = 0;
    std::vector<Int> counts;  // counts[k-1] = S_k

    OrbitProfile() = default;
    OrbitProfile(long n_, std::vector<Int> counts_);

    const Int& at(long k) const;  // 1-based
    Int total() const;            // |X|
};

// Orbit sizes of the ad hoc cyclic action realizing an OrbitProfile.  Element
// labels 0..|X|-1 run consecutively through the orbits, smallest orbits first,
// so the generator rotates each block of consecutive labels.
struct AdHocAction {
    long n = 0;
    std::vector<long> orbit_sizes;  // ascending

    long size() const;
    std::vector<long> generator() const;  // image table of the generator
};

enum class csp_reason {
    ok,
    not_integral,          // f(w^k) is not an integer for some k
    negative_evaluation,   // all evaluations integral, but some f(w^k) < 0
    negative_orbit_count,  // some sieve value S_k < 0
};

// witness_k is populated exactly when yes is false: the smallest exponent
// violating the gcd condition (not_integral), the smallest k with a negative
// evaluation, or the smallest divisor k with S_k < 0.
struct CspDecision {
    bool yes = false;
    csp_reason reason = csp_reason::ok;
    std::optional<OrbitProfile> profile;
    std::optional<long> witness_k;
};

// S_k = sum_{j|k} mu(k/j) f(w_n^j) for k = 1..n.
std::vector<Int> sieve_transform(const EvalTable& t);

// Decides whether f extends to a CSP triple: f must lie in M(n), take
// non-negative values at every n-th root of unity, and have all S_k >= 0.
CspDecision csp_exists(const CycPoly& p);

// Same decision when the evaluations are already in hand (integrality is
// implied by having an exact table).
CspDecision decide_from_table(const EvalTable& t);

// S_k/k orbits of size k for each k.  Throws InvalidProfile when the profile
// invariants fail, InvalidArgument when the orbit count is too large to lay
// out explicitly.
AdHocAction build_adhoc_action(const OrbitProfile& profile);

// Entry k (1-based) counts elements fixed by the k-th power of the generator.
std::vector<Int> fixed_point_counts(const AdHocAction& act);

}  // namespace csp

#endif
