#include "csp/sieve.hpp"

#include <string>

#include "csp/error.hpp"
#include "csp/numeric.hpp"

namespace csp {

OrbitProfile::OrbitProfile(long n_, std::vector<Int> counts_) : n(n_), counts(std::move(counts_)) {
    if (n < 1) fail(errc::invalid_argument, "OrbitProfile: n must be positive");
    if (counts.size() != static_cast<size_t>(n))
        fail(errc::invalid_argument, "OrbitProfile: counts must have length n");
}

const Int& OrbitProfile::at(long k) const {
    if (k < 1 || k > n) fail(errc::invalid_argument, "OrbitProfile::at: k out of range");
    return counts[static_cast<size_t>(k - 1)];
}

Int OrbitProfile::total() const {
    Int t = 0;
    for (const Int& c : counts) t += c;
    return t;
}

long AdHocAction::size() const {
    long total = 0;
    for (long s : orbit_sizes) total += s;
    return total;
}

std::vector<long> AdHocAction::generator() const {
    std::vector<long> image(static_cast<size_t>(size()));
    long offset = 0;
    for (long s : orbit_sizes) {
        for (long r = 0; r < s; ++r) image[static_cast<size_t>(offset + r)] = offset + (r + 1) % s;
        offset += s;
    }
    return image;
}

std::vector<Int> sieve_transform(const EvalTable& t) {
    std::vector<Int> s(static_cast<size_t>(t.n));
    for (long k = 1; k <= t.n; ++k) {
        Int acc = 0;
        for (long j : divisors(k)) acc += mobius(k / j) * t.at(j);
        s[static_cast<size_t>(k - 1)] = acc;
    }
    return s;
}

CspDecision decide_from_table(const EvalTable& t) {
    CspDecision d;
    for (long k = 1; k <= t.n; ++k) {
        if (t.at(k) < 0) {
            d.reason = csp_reason::negative_evaluation;
            d.witness_k = k;
            return d;
        }
    }
    std::vector<Int> s = sieve_transform(t);
    for (long k = 1; k <= t.n; ++k) {
        if (s[static_cast<size_t>(k - 1)] < 0) {
            d.reason = csp_reason::negative_orbit_count;
            d.witness_k = k;
            return d;
        }
    }
    d.yes = true;
    d.profile = OrbitProfile(t.n, std::move(s));
    return d;
}

CspDecision csp_exists(const CycPoly& p) {
    if (!is_integral_at_roots(p)) {
        CspDecision d;
        for (long j = 1; j < p.n; ++j) {
            if (p.coeffs[static_cast<size_t>(j)] != p.coeffs[static_cast<size_t>(gcd_n(p.n, j))]) {
                d.witness_k = j;
                break;
            }
        }
        d.reason = csp_reason::not_integral;
        return d;
    }
    return decide_from_table(eval_table(p));
}

AdHocAction build_adhoc_action(const OrbitProfile& profile) {
    if (profile.n < 1 || profile.counts.size() != static_cast<size_t>(profile.n))
        fail(errc::invalid_profile, "malformed profile");
    Int orbit_total = 0;
    for (long k = 1; k <= profile.n; ++k) {
        const Int& sk = profile.at(k);
        if (sk < 0) fail(errc::invalid_profile, "S_" + std::to_string(k) + " is negative");
        if (sk % k != 0)
            fail(errc::invalid_profile, "S_" + std::to_string(k) + " not divisible by " + std::to_string(k));
        if (profile.n % k != 0 && sk != 0)
            fail(errc::invalid_profile,
                 "S_" + std::to_string(k) + " nonzero although " + std::to_string(k) +
                     " does not divide n");
        orbit_total += sk / k;
    }
    // Orbits get laid out one by one, so refuse profiles we cannot hold.
    if (orbit_total > 10'000'000)
        fail(errc::invalid_argument, "profile describes too many orbits to materialize");
    AdHocAction act;
    act.n = profile.n;
    for (long k = 1; k <= profile.n; ++k) {
        long copies = static_cast<long>(mpz_class(profile.at(k) / k).get_si());
        for (long c = 0; c < copies; ++c) act.orbit_sizes.push_back(k);
    }
    return act;
}

std::vector<Int> fixed_point_counts(const AdHocAction& act) {
    // The k-th power of the generator fixes an orbit of size j pointwise
    // exactly when j | k, and moves all of it otherwise.
    std::vector<Int> fixed(static_cast<size_t>(act.n));
    for (long k = 1; k <= act.n; ++k) {
        Int acc = 0;
        for (long j : act.orbit_sizes)
            if (k % j == 0) acc += j;
        fixed[static_cast<size_t>(k - 1)] = acc;
    }
    return fixed;
}

}  // namespace csp
