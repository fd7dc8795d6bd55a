#ifndef CSP_GRID_HPP
#define CSP_GRID_HPP

#include <vector>

#include "csp/jsonio.hpp"
#include "csp/schur.hpp"
#include "csp/sieve.hpp"

namespace csp {

struct GridEntry {
    std::vector<long> lambda;
    long m = 0;
    long n = 0;
    CspDecision decision;
};

struct GridReport {
    long max_weight = 0;
    long max_m = 0;
    long max_n = 0;
    std::vector<GridEntry> entries;  // ordered by (|lambda|, lambda, m, n)
    long yes_count = 0;
    long no_count = 0;
    double seconds = 0;  // wall clock; deliberately not serialized
};

// For every partition with 1 <= |lambda| <= max_weight, every 1 <= m <= max_m
// and every 1 <= n <= max_n: reduce the principal specialization of the
// stretched shape n*lambda in m variables mod q^n - 1 and decide CSP
// existence. Root-of-unity evaluations additionally get cross-checked
// against the abacus product formula wherever the root order divides m;
// a mismatch is an internal error. threads = 0 means hardware concurrency;
// the CSP_THREADS environment variable caps either choice. The entry order
// and report are identical across parallelism levels.
GridReport verify_conjecture_grid(long max_weight, long max_m, long max_n, int threads = 0);

json to_json(const GridReport& r);

struct CatalanEntry {
    long n = 0;
    CspDecision decision;
};

struct CatalanReport {
    long max_n = 0;
    std::vector<CatalanEntry> entries;
    long yes_count = 0;
    long no_count = 0;
};

// q-Catalan numbers for n = 1..max_n: each evaluation is checked against
// the closed form (central binomials at proper roots, the Catalan number at
// q = 1) before running the existence decision.
CatalanReport catalan_sweep(long max_n);

json to_json(const CatalanReport& r);

}  // namespace csp

#endif
