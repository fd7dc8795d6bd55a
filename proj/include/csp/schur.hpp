#ifndef CSP_SCHUR_HPP
#define CSP_SCHUR_HPP

#include <vector>

#include "csp/arith.hpp"
#include "csp/polynomial.hpp"

namespace csp {

// Integer partition: weakly decreasing positive parts, empty allowed.
struct Partition {
    std::vector<long> parts;

    Partition() = default;
    explicit Partition(std::vector<long> parts_);

    long size() const;        // sum of parts
    long length() const { return static_cast<long>(parts.size()); }
    long part(long i) const;  // 1-based, 0 beyond the last row
    Partition conjugate() const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

// Every part multiplied by n.
Partition stretch(const Partition& lam, long n);

// All partitions of w, lexicographically decreasing ([w] first, [1^w] last).
std::vector<Partition> partitions_of(long w);

struct CellData {
    long row;      // 1-based
    long col;      // 1-based
    long hook;
    long content;  // col - row
};

struct HookContentData {
    std::vector<CellData> cells;  // row-major
    long b;                       // sum over rows of (i-1)*lambda_i
};

HookContentData hooks_and_contents(const Partition& lam);

// Number of semistandard fillings with entries in {0,...,m-1}; zero when the
// shape has more than m rows.
Int ssyt_count(const Partition& lam, long m);

// Every SSYT of the shape with entries in {0,...,m-1}, row-major. Meant for
// small shapes; the count is exponential.
std::vector<std::vector<std::vector<long>>> enumerate_ssyt(const Partition& lam, long m);

// s_lambda(1, q, ..., q^{m-1}): numerator product of (1 - q^{m+c}) over the
// cells, one exact division by the product of (1 - q^h), then the q^b shift.
IntPolynomial principal_specialization(const Partition& lam, long m);

struct Bead {
    long runner;  // position mod d
    long row;     // position div d
};

// Bead i (i = 1..m_beads) sits at position lambda_i + m_beads - i.
struct Abacus {
    long d = 1;
    std::vector<Bead> beads;
};

Abacus abacus_decompose(const Partition& lam, long d, long m_beads);
Partition abacus_to_partition(const Abacus& ab);

struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;  // quotient[s] read off runner s
};

// Bead count fixed to the smallest multiple of d that covers all rows; the
// quotient labeling depends on that choice only up to a cyclic shift, and
// nothing downstream depends on the labeling.
CoreQuotient core_quotient(const Partition& lam, long d);
CoreQuotient core_quotient(const Partition& lam, long d, long m_beads);

// Irreducible character chi^lambda at cycle type alpha (a composition of
// |lambda|), by signed border-strip removal, last part of alpha first.
Int mn_character(const Partition& lam, const std::vector<long>& alpha);

// Sign attached to removing |lambda|/d border strips of size d: slide every
// bead of the d-runner abacus up one step at a time, picking up a factor
// (-1)^{beads passed over} per step. Returns 0 when the d-core is nonempty
// (no full removal exists), otherwise +1 or -1. Independent of slide order
// and of the bead count.
int strip_sign(const Partition& lam, long d);

// Exact value of principal_specialization(lam, m) at a primitive d-th root
// of unity, for d | m: zero unless the d-core is empty, otherwise the strip
// sign times the product of ssyt_count(quotient component, m/d).
Int rsw_evaluate(const Partition& lam, long m, long d);

IntPolynomial q_binomial(long n, long k);

// MacMahon q-Catalan: [2n choose n]_q / [n+1]_q.
IntPolynomial q_catalan(long n);

}  // namespace csp

#endif
