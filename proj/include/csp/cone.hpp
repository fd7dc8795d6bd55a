#ifndef CSP_CONE_HPP
#define CSP_CONE_HPP

#include <utility>
#include <vector>

#include "csp/arith.hpp"

namespace csp {

// n x n matrix of non-negative rationals recording a joint distribution of
// (statistic mod n, element order). Rows are 0-based residues 0..n-1,
// columns are 1-based orders 1..n. Negative entries are rejected at
// construction; whether the matrix actually satisfies the CSP condition is
// the job of verify().
struct CspMatrix {
    long n = 0;
    std::vector<std::vector<Rat>> entries;  // entries[i][j-1]

    CspMatrix() = default;
    CspMatrix(long n_, std::vector<std::vector<Rat>> e);
    static CspMatrix zero(long n);

    Rat& at(long i, long j);
    const Rat& at(long i, long j) const;

    std::vector<Rat> row_sums() const;
    std::vector<Rat> column_sums() const;
    Rat total() const;  // sum of all entries
    bool is_integer() const;
    bool is_zero() const;

    friend bool operator==(const CspMatrix&, const CspMatrix&) = default;
};

// Exact check of the defining condition: the row-sum polynomial evaluated at
// the k-th power of a primitive n-th root equals the sum of the column sums
// over columns dividing k, for every k = 1..n. Denominators are cleared
// first, so the whole test runs in integers.
bool verify(const CspMatrix& a);

// Tally a list of (order, statistic) pairs into a matrix. Orders must
// divide n; statistics are reduced mod n.
CspMatrix from_triple(long n, const std::vector<std::pair<long, long>>& elements);

// Column-sum vector of a would-be universal matrix: S_j >= 0, S_j = 0 when
// j does not divide n. Integer mode (j | S_j, all integers) is what the
// lattice operations need; the cone operations accept any rationals.
struct UniversalVector {
    long n = 0;
    std::vector<Rat> s;  // s[j-1] = S_j

    UniversalVector() = default;
    UniversalVector(long n_, std::vector<Rat> s_);

    const Rat& at(long j) const;  // 1-based
    Rat total() const;
    bool is_integer_mode() const;  // integral and j | S_j for all j
};

// The unique CSP matrix with column sums s whose statistic is evenly spread
// over each orbit: S_j/j at the j rows i with (n/j) | i, zero elsewhere.
CspMatrix universal_matrix(const UniversalVector& s);

// Projection onto the universal subcone: rebuild from the column sums.
// Idempotent; throws NotCsp when the input does not verify.
CspMatrix project_universal(const CspMatrix& a);

// delta_a(u, v) = a(E_u1u2 + E_v1v2 - E_v1u2 - E_u1v2): adds a at u and v,
// subtracts a at the two mixed cells. Row and column sums are unchanged.
struct Swap {
    std::pair<long, long> u;  // (row 0-based, column 1-based)
    std::pair<long, long> v;
    Rat a;

    Swap() = default;
    Swap(std::pair<long, long> u_, std::pair<long, long> v_, Rat a_);
};

CspMatrix apply_swap(const CspMatrix& a, const Swap& sw);  // NegativeEntry on orthant exit
bool swap_preserves(const CspMatrix& a, const Swap& sw);   // result stays non-negative

// Writes A = B + sum of unit swaps such that every prefix sum from B stays
// entrywise non-negative (and hence verifies whenever B does). Requires
// identical row sums, identical column sums, integer entries.
std::vector<Swap> swap_decompose(const CspMatrix& a, const CspMatrix& b);

// (s box t)_k = sum over ij = k of S_i T_j, a universal vector over mn.
UniversalVector box_product(const UniversalVector& s, const UniversalVector& t);

// Linear forms H_k over the parameters x_{0,1}, x_{i,j} = a_{i,c_j}/n
// (j = 2..d over the divisors c_2 < ... < c_d): a non-negative matrix with
// zero non-divisor columns is a CSP matrix iff a_{k,1} = H_k(x) >= 0 for
// k = 1..n-1. alpha(j, i, k) is the coefficient of x_{i,j} in H_k:
//   -n + n/c_j  when i = k and (n/c_j) | k
//   -n          when i = k and (n/c_j) does not divide k
//    n/c_j      when i != k and (n/c_j) | k
//    0          otherwise
struct HalfSpaceSystem {
    long n = 0;
    std::vector<long> divisors;  // c_1 < ... < c_d
    std::vector<long> coeffs;    // flattened [j_idx-2][i][k-1]

    long alpha(size_t j_idx, long i, long k) const;  // j_idx in 2..d
};

HalfSpaceSystem halfspace_system(long n);
bool membership_by_halfspaces(const CspMatrix& a);

// n(d-1) + 1, d the number of divisors of n.
long cone_dimension(long n);

// One matrix per divisor c and subset I of {t n/c : 1 <= t < c}: value 1 at
// (0, c), 1/(c-|I|) at (i, c) for i in I, and the forced column-1 entries
// 1/(c-|I|) at (k, 1) for k a nonzero multiple of n/c outside I. Every
// member generates an extreme ray.
std::vector<CspMatrix> ray_family(long n);

// Exact test: the constraints active at the point span a hyperplane of the
// parameter space (rank = cone_dimension(n) - 1).
bool is_extreme(const CspMatrix& a);

// Vertices of the slice {total = m} for prime p: m E_{0,1} plus one scaled
// ray per subset I of {1..p-1}, scaled so the entries sum to m.
std::vector<CspMatrix> prime_polytope_vertices(long p, long m);

// Weak compositions of total into parts many parts, each at most cap.
Int bounded_compositions(const Int& total, long parts, const Int& cap);

// Number of integer matrices in the slice, by a closed form over the
// column-p sum, and by direct enumeration (the two must agree; the brute
// force is exponential in p^2).
Int count_lattice_points(long p, long m);
Int brute_force_lattice_points(long p, long m);

// Swapping rows with equal gcd class (or equal row sums) preserves the CSP
// condition; anything else is refused.
CspMatrix interchange_rows(const CspMatrix& a, long i, long ip);

}  // namespace csp

#endif
