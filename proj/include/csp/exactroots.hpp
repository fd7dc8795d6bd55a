#ifndef CSP_EXACTROOTS_HPP
#define CSP_EXACTROOTS_HPP

#include <map>
#include <vector>

#include "csp/arith.hpp"
#include "csp/numeric.hpp"

namespace csp {

// Integer polynomial reduced mod q^n - 1: exactly n coefficients, exponent
// j in 0..n-1. Exponent 0 stands for the divisor n throughout (q^0 = q^n on
// the unit circle's n-th roots).
struct CycPoly {
    long n = 0;
    std::vector<Int> coeffs;  // size n

    CycPoly() = default;
    CycPoly(long n_, std::vector<Int> c);
};

// Folds arbitrary-length integer coefficients into exponents mod n.
CycPoly reduce_mod_qn(const std::vector<Int>& raw, long n);

// A polynomial of degree < n takes integer values at every n-th root of
// unity iff its coefficients are constant on gcd classes: a_j = a_{gcd(n,j)}.
bool is_integral_at_roots(const CycPoly& p);

// Coefficients over the two divisor-indexed bases of the module of
// integer-valued polynomials:
//   h_d(q) = 1 + q^d + q^{2d} + ... + q^{n-d}
//   g_d(q) = sum of q^j over 0 <= j < n with gcd(n,j) = d
// The g coefficients are read off the input directly (a_d = coeffs[d] for
// d < n, a_n = coeffs[0]); the h coefficients come from Moebius inversion
// over the divisor lattice.
struct DivisorDecomp {
    long n = 0;
    std::map<long, Int> coeffs_h;
    std::map<long, Int> coeffs_g;
};

DivisorDecomp to_divisor_bases(const CycPoly& p);  // throws not_in_module
CycPoly from_divisor_bases(const DivisorDecomp& d);

// values[k-1] = f at the k-th power of a primitive n-th root of unity,
// k = 1..n. Exact integers: h_d evaluates to n/d when (n/d) | k, else 0.
struct EvalTable {
    long n = 0;
    std::vector<Int> values;  // size n, index k-1

    const Int& at(long k) const { return values.at(static_cast<size_t>(k - 1)); }
};

EvalTable eval_table(const CycPoly& p);  // throws not_in_module

// Multivariate version: integer coefficient tensor for exponents mod
// (n_1, ..., n_m), stored row major (last axis fastest).
struct MultiPoly {
    std::vector<long> moduli;
    std::vector<Int> tensor;  // size = product of moduli

    MultiPoly() = default;
    MultiPoly(std::vector<long> mods, std::vector<Int> t);
};

// Integer values at every tuple of roots of unity iff every axis satisfies
// the gcd slice condition: slice_k = slice_{gcd(n_i, k)} along each axis i.
bool multi_is_integral(const MultiPoly& p);

// Coefficients over the product basis prod_i h^{(i)}_{d_i}, indexed by
// divisor tuples. Axis-by-axis Moebius inversion.
struct MultiDecomp {
    std::vector<long> moduli;
    std::map<std::vector<long>, Int> coeffs;
};

MultiDecomp multi_decompose(const MultiPoly& p);  // throws not_in_module
MultiPoly multi_reconstruct(const MultiDecomp& d);

}  // namespace csp

#endif
