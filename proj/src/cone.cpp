#include "csp/cone.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "csp/error.hpp"
#include "csp/exactroots.hpp"
#include "csp/linalg.hpp"
#include "csp/numeric.hpp"

namespace csp {

CspMatrix::CspMatrix(long n_, std::vector<std::vector<Rat>> e) : n(n_), entries(std::move(e)) {
    if (n < 1) fail(errc::invalid_argument, "CspMatrix: n must be positive");
    if (entries.size() != static_cast<size_t>(n))
        fail(errc::invalid_argument, "CspMatrix: wrong row count");
    for (long i = 0; i < n; ++i) {
        const auto& row = entries[static_cast<size_t>(i)];
        if (row.size() != static_cast<size_t>(n))
            fail(errc::invalid_argument, "CspMatrix: row " + std::to_string(i) + " has wrong length");
        for (long j = 1; j <= n; ++j)
            if (row[static_cast<size_t>(j - 1)] < 0)
                fail(errc::negative_entry, "CspMatrix: entry (" + std::to_string(i) + "," +
                                               std::to_string(j) + ") is negative");
    }
}

CspMatrix CspMatrix::zero(long n) {
    if (n < 1) fail(errc::invalid_argument, "CspMatrix: n must be positive");
    CspMatrix m;
    m.n = n;
    m.entries.assign(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    return m;
}

Rat& CspMatrix::at(long i, long j) {
    if (i < 0 || i >= n || j < 1 || j > n) fail(errc::invalid_argument, "CspMatrix::at out of range");
    return entries[static_cast<size_t>(i)][static_cast<size_t>(j - 1)];
}

const Rat& CspMatrix::at(long i, long j) const {
    if (i < 0 || i >= n || j < 1 || j > n) fail(errc::invalid_argument, "CspMatrix::at out of range");
    return entries[static_cast<size_t>(i)][static_cast<size_t>(j - 1)];
}

std::vector<Rat> CspMatrix::row_sums() const {
    std::vector<Rat> r(static_cast<size_t>(n), Rat(0));
    for (long i = 0; i < n; ++i)
        for (long j = 1; j <= n; ++j) r[static_cast<size_t>(i)] += at(i, j);
    return r;
}

std::vector<Rat> CspMatrix::column_sums() const {
    std::vector<Rat> c(static_cast<size_t>(n), Rat(0));
    for (long i = 0; i < n; ++i)
        for (long j = 1; j <= n; ++j) c[static_cast<size_t>(j - 1)] += at(i, j);
    return c;
}

Rat CspMatrix::total() const {
    Rat t = 0;
    for (const auto& row : entries)
        for (const Rat& e : row) t += e;
    return t;
}

bool CspMatrix::is_integer() const {
    for (const auto& row : entries)
        for (const Rat& e : row)
            if (!csp::is_integer(e)) return false;
    return true;
}

bool CspMatrix::is_zero() const {
    for (const auto& row : entries)
        for (const Rat& e : row)
            if (e != 0) return false;
    return true;
}

// r * d for denominators d | den(r), as an exact integer.
static Int scaled_int(const Rat& r, const Int& d) {
    Rat s = r * Rat(d);
    return to_int(s);
}

bool verify(const CspMatrix& a) {
    Int d = 1;
    for (const auto& row : a.entries)
        for (const Rat& e : row) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.get_den().get_mpz_t());

    std::vector<Rat> rows = a.row_sums();
    std::vector<Int> coeffs(static_cast<size_t>(a.n));
    for (long i = 0; i < a.n; ++i) coeffs[static_cast<size_t>(i)] = scaled_int(rows[static_cast<size_t>(i)], d);
    CycPoly rowpoly(a.n, std::move(coeffs));
    if (!is_integral_at_roots(rowpoly)) return false;
    EvalTable t = eval_table(rowpoly);

    std::vector<Rat> cols = a.column_sums();
    std::vector<Int> colscaled(static_cast<size_t>(a.n));
    for (long j = 1; j <= a.n; ++j)
        colscaled[static_cast<size_t>(j - 1)] = scaled_int(cols[static_cast<size_t>(j - 1)], d);
    for (long k = 1; k <= a.n; ++k) {
        Int rhs = 0;
        for (long j : divisors(k)) rhs += colscaled[static_cast<size_t>(j - 1)];
        if (t.at(k) != rhs) return false;
    }
    return true;
}

CspMatrix from_triple(long n, const std::vector<std::pair<long, long>>& elements) {
    CspMatrix m = CspMatrix::zero(n);
    for (const auto& [order, stat] : elements) {
        if (order < 1 || n % order != 0)
            fail(errc::order_not_dividing_n,
                 "element order " + std::to_string(order) + " does not divide " + std::to_string(n));
        long i = ((stat % n) + n) % n;
        m.at(i, order) += 1;
    }
    return m;
}

UniversalVector::UniversalVector(long n_, std::vector<Rat> s_) : n(n_), s(std::move(s_)) {
    if (n < 1) fail(errc::invalid_universal_vector, "UniversalVector: n must be positive");
    if (s.size() != static_cast<size_t>(n))
        fail(errc::invalid_universal_vector, "UniversalVector: wrong length");
    for (long j = 1; j <= n; ++j) {
        const Rat& v = s[static_cast<size_t>(j - 1)];
        if (v < 0)
            fail(errc::invalid_universal_vector, "S_" + std::to_string(j) + " is negative");
        if (n % j != 0 && v != 0)
            fail(errc::invalid_universal_vector,
                 "S_" + std::to_string(j) + " nonzero although " + std::to_string(j) +
                     " does not divide n");
    }
}

const Rat& UniversalVector::at(long j) const {
    if (j < 1 || j > n) fail(errc::invalid_argument, "UniversalVector::at: j out of range");
    return s[static_cast<size_t>(j - 1)];
}

Rat UniversalVector::total() const {
    Rat t = 0;
    for (const Rat& v : s) t += v;
    return t;
}

bool UniversalVector::is_integer_mode() const {
    for (long j = 1; j <= n; ++j) {
        const Rat& v = at(j);
        if (!is_integer(v)) return false;
        if (v.get_num() % j != 0) return false;
    }
    return true;
}

CspMatrix universal_matrix(const UniversalVector& s) {
    CspMatrix m = CspMatrix::zero(s.n);
    for (long j : divisors(s.n)) {
        Rat k = s.at(j) / Rat(j);
        for (long i = 0; i < s.n; i += s.n / j) m.at(i, j) = k;
    }
    return m;
}

CspMatrix project_universal(const CspMatrix& a) {
    if (!verify(a)) fail(errc::not_csp, "project_universal: input is not a CSP matrix");
    return universal_matrix(UniversalVector(a.n, a.column_sums()));
}

Swap::Swap(std::pair<long, long> u_, std::pair<long, long> v_, Rat a_)
    : u(std::move(u_)), v(std::move(v_)), a(std::move(a_)) {
    if (u.first == v.first || u.second == v.second)
        fail(errc::invalid_argument, "Swap: cells must differ in both coordinates");
}

CspMatrix apply_swap(const CspMatrix& a, const Swap& sw) {
    std::vector<std::vector<Rat>> e = a.entries;
    auto cell = [&](long i, long j) -> Rat& {
        if (i < 0 || i >= a.n || j < 1 || j > a.n)
            fail(errc::invalid_argument, "apply_swap: cell out of range");
        return e[static_cast<size_t>(i)][static_cast<size_t>(j - 1)];
    };
    cell(sw.u.first, sw.u.second) += sw.a;
    cell(sw.v.first, sw.v.second) += sw.a;
    cell(sw.v.first, sw.u.second) -= sw.a;
    cell(sw.u.first, sw.v.second) -= sw.a;
    return CspMatrix(a.n, std::move(e));  // the constructor rejects negative entries
}

bool swap_preserves(const CspMatrix& a, const Swap& sw) {
    auto value = [&](long i, long j) -> const Rat& { return a.at(i, j); };
    return value(sw.v.first, sw.u.second) >= sw.a && value(sw.u.first, sw.v.second) >= sw.a &&
           value(sw.u.first, sw.u.second) >= -sw.a && value(sw.v.first, sw.v.second) >= -sw.a;
}

std::vector<Swap> swap_decompose(const CspMatrix& a, const CspMatrix& b) {
    if (a.n != b.n) fail(errc::invalid_argument, "swap_decompose: size mismatch");
    if (!a.is_integer() || !b.is_integer())
        fail(errc::invalid_argument, "swap_decompose: integer matrices required");
    if (a.row_sums() != b.row_sums() || a.column_sums() != b.column_sums())
        fail(errc::mismatched_margins, "swap_decompose: row and column sums must agree");

    long n = a.n;
    std::vector<std::vector<Int>> w(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
    std::vector<std::vector<Int>> target(w);
    for (long i = 0; i < n; ++i)
        for (long j = 1; j <= n; ++j) {
            w[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] = to_int(a.at(i, j));
            target[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] = to_int(b.at(i, j));
        }
    auto wc = [&](long i, long j) -> Int& { return w[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
    auto tc = [&](long i, long j) -> Int& { return target[static_cast<size_t>(i)][static_cast<size_t>(j)]; };

    // Walk from A down to B one unit swap at a time; emitting the list in
    // reverse makes every prefix sum from B an intermediate state, which is
    // non-negative with the same margins throughout.
    std::vector<Swap> steps;
    while (true) {
        long di = -1, dj = -1;
        for (long i = 0; i < n && di < 0; ++i)
            for (long j = 0; j < n; ++j)
                if (wc(i, j) < tc(i, j)) {
                    di = i;
                    dj = j;
                    break;
                }
        if (di < 0) break;
        long sj = -1, si = -1;
        for (long j = 0; j < n; ++j)
            if (wc(di, j) > tc(di, j)) {
                sj = j;
                break;
            }
        for (long i = 0; i < n; ++i)
            if (wc(i, dj) > tc(i, dj)) {
                si = i;
                break;
            }
        if (sj < 0 || si < 0) fail(errc::internal_error, "swap_decompose: margins lied");
        wc(di, sj) -= 1;
        wc(si, dj) -= 1;
        wc(si, sj) += 1;
        wc(di, dj) += 1;
        steps.emplace_back(std::make_pair(di, sj + 1), std::make_pair(si, dj + 1), Rat(1));
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

UniversalVector box_product(const UniversalVector& s, const UniversalVector& t) {
    long mn = s.n * t.n;
    std::vector<Rat> out(static_cast<size_t>(mn), Rat(0));
    for (long i = 1; i <= s.n; ++i) {
        if (s.at(i) == 0) continue;
        for (long j = 1; j <= t.n; ++j) out[static_cast<size_t>(i * j - 1)] += s.at(i) * t.at(j);
    }
    return UniversalVector(mn, std::move(out));
}

long HalfSpaceSystem::alpha(size_t j_idx, long i, long k) const {
    size_t d = divisors.size();
    if (j_idx < 2 || j_idx > d || i < 0 || i >= n || k < 1 || k >= n)
        fail(errc::invalid_argument, "HalfSpaceSystem::alpha: index out of range");
    return coeffs[((j_idx - 2) * static_cast<size_t>(n) + static_cast<size_t>(i)) *
                      static_cast<size_t>(n - 1) +
                  static_cast<size_t>(k - 1)];
}

HalfSpaceSystem halfspace_system(long n) {
    if (n < 1) fail(errc::invalid_argument, "halfspace_system: n must be positive");
    HalfSpaceSystem hs;
    hs.n = n;
    hs.divisors = divisors(n);
    size_t d = hs.divisors.size();
    if (n == 1) return hs;  // no parameters beyond x_{0,1}, no constraints
    hs.coeffs.assign((d - 1) * static_cast<size_t>(n) * static_cast<size_t>(n - 1), 0);
    for (size_t j_idx = 2; j_idx <= d; ++j_idx) {
        long c = hs.divisors[j_idx - 1];
        long q = n / c;
        for (long i = 0; i < n; ++i)
            for (long k = 1; k < n; ++k) {
                long v;
                if (i == k)
                    v = (k % q == 0) ? -n + q : -n;
                else
                    v = (k % q == 0) ? q : 0;
                hs.coeffs[((j_idx - 2) * static_cast<size_t>(n) + static_cast<size_t>(i)) *
                              static_cast<size_t>(n - 1) +
                          static_cast<size_t>(k - 1)] = v;
            }
    }
    return hs;
}

bool membership_by_halfspaces(const CspMatrix& a) {
    HalfSpaceSystem hs = halfspace_system(a.n);
    size_t d = hs.divisors.size();
    for (long j = 1; j <= a.n; ++j) {
        if (a.n % j == 0) continue;
        for (long i = 0; i < a.n; ++i)
            if (a.at(i, j) != 0) return false;
    }
    for (long k = 1; k < a.n; ++k) {
        Rat h = 0;
        for (size_t j_idx = 2; j_idx <= d; ++j_idx) {
            long c = hs.divisors[j_idx - 1];
            for (long i = 0; i < a.n; ++i) {
                long coeff = hs.alpha(j_idx, i, k);
                if (coeff != 0) h += Rat(coeff) * a.at(i, c) / Rat(a.n);
            }
        }
        if (h < 0) return false;
        if (h != a.at(k, 1)) return false;
    }
    return true;
}

long cone_dimension(long n) {
    if (n < 1) fail(errc::invalid_argument, "cone_dimension: n must be positive");
    long d = static_cast<long>(divisors(n).size());
    return n * (d - 1) + 1;
}

std::vector<CspMatrix> ray_family(long n) {
    if (n < 1) fail(errc::invalid_argument, "ray_family: n must be positive");
    std::vector<CspMatrix> out;
    for (long c : divisors(n)) {
        long step = n / c;
        for (unsigned long mask = 0; mask < (1ul << (c - 1)); ++mask) {
            long members = static_cast<long>(__builtin_popcountl(mask));
            Rat unit = make_rat(1, c - members);
            CspMatrix m = CspMatrix::zero(n);
            m.at(0, c) = 1;
            for (long t = 1; t < c; ++t) {
                long row = t * step;
                if (mask & (1ul << (t - 1)))
                    m.at(row, c) = unit;
                else
                    m.at(row, 1) = unit;
            }
            out.push_back(std::move(m));
        }
    }
    return out;
}

bool is_extreme(const CspMatrix& a) {
    if (a.is_zero()) fail(errc::zero_matrix, "is_extreme: zero matrix spans no ray");
    if (!verify(a)) fail(errc::not_csp, "is_extreme: input is not a CSP matrix");
    long n = a.n;
    HalfSpaceSystem hs = halfspace_system(n);
    size_t d = hs.divisors.size();
    size_t dim = static_cast<size_t>(cone_dimension(n));

    // Parameter layout: x_{0,1} first, then x_{i,j} for j = 2..d, i = 0..n-1.
    auto coord = [&](size_t j_idx, long i) { return 1 + (j_idx - 2) * static_cast<size_t>(n) + static_cast<size_t>(i); };

    std::vector<std::vector<Rat>> active;
    if (a.at(0, 1) == 0) {
        std::vector<Rat> row(dim, Rat(0));
        row[0] = 1;
        active.push_back(std::move(row));
    }
    for (size_t j_idx = 2; j_idx <= d; ++j_idx) {
        long c = hs.divisors[j_idx - 1];
        for (long i = 0; i < n; ++i) {
            if (a.at(i, c) != 0) continue;
            std::vector<Rat> row(dim, Rat(0));
            row[coord(j_idx, i)] = 1;
            active.push_back(std::move(row));
        }
    }
    for (long k = 1; k < n; ++k) {
        if (a.at(k, 1) != 0) continue;  // H_k = a_{k,1} for verified matrices
        std::vector<Rat> row(dim, Rat(0));
        for (size_t j_idx = 2; j_idx <= d; ++j_idx)
            for (long i = 0; i < n; ++i) row[coord(j_idx, i)] = Rat(hs.alpha(j_idx, i, k));
        active.push_back(std::move(row));
    }
    return rational_rank(std::move(active)) == static_cast<long>(dim) - 1;
}

std::vector<CspMatrix> prime_polytope_vertices(long p, long m) {
    if (!is_prime(p)) fail(errc::not_prime, "prime_polytope_vertices: p must be prime");
    if (m < 0) fail(errc::invalid_argument, "prime_polytope_vertices: m must be non-negative");
    std::vector<CspMatrix> out;
    CspMatrix fixed = CspMatrix::zero(p);
    fixed.at(0, 1) = m;
    out.push_back(std::move(fixed));
    for (unsigned long mask = 0; mask < (1ul << (p - 1)); ++mask) {
        long members = static_cast<long>(__builtin_popcountl(mask));
        Rat apex = make_rat(Int(m) * (p - members), 2 * p - 1 - members);
        Rat unit = apex / Rat(p - members);
        CspMatrix v = CspMatrix::zero(p);
        v.at(0, p) = apex;
        for (long t = 1; t < p; ++t) {
            if (mask & (1ul << (t - 1)))
                v.at(t, p) = unit;
            else
                v.at(t, 1) = unit;
        }
        out.push_back(std::move(v));
    }
    return out;
}

Int bounded_compositions(const Int& total, long parts, const Int& cap) {
    if (total < 0 || parts < 0) return 0;
    if (parts == 0) return total == 0 ? 1 : 0;
    if (cap < 0) return 0;
    Int count = 0;
    for (long i = 0; i <= parts; ++i) {
        Int shifted = total - Int(i) * (cap + 1);
        if (shifted < 0) break;
        Int term = binomial(parts, i) * binomial_big(shifted + (parts - 1), parts - 1);
        count += (i % 2 == 0) ? term : -term;
    }
    return count;
}

Int count_lattice_points(long p, long m) {
    if (!is_prime(p)) fail(errc::not_prime, "count_lattice_points: p must be prime");
    if (m < 0) fail(errc::invalid_argument, "count_lattice_points: m must be non-negative");
    // Split on j = mass outside the (0,1) cell and T = (column p sum)/p;
    // the p-1 constrained rows of column p form a bounded composition.
    Int count = 0;
    for (long j = 0; j <= m; ++j) {
        long tmin = (j + 2 * p - 2) / (2 * p - 1);
        long tmax = j / (p - 1);
        for (long t = tmin; t <= tmax; ++t)
            count += bounded_compositions(Int((2 * p - 1) * t - j), p - 1, Int(t));
    }
    return count;
}

Int brute_force_lattice_points(long p, long m) {
    if (!is_prime(p)) fail(errc::not_prime, "brute_force_lattice_points: p must be prime");
    if (m < 0) fail(errc::invalid_argument, "brute_force_lattice_points: m must be non-negative");
    long cells = p * p;
    std::vector<Rat> flat(static_cast<size_t>(cells), Rat(0));
    Int count = 0;
    std::function<void(long, long)> rec = [&](long idx, long remaining) {
        if (idx == cells - 1) {
            flat[static_cast<size_t>(idx)] = remaining;
            std::vector<std::vector<Rat>> e(static_cast<size_t>(p));
            for (long i = 0; i < p; ++i)
                e[static_cast<size_t>(i)] = std::vector<Rat>(flat.begin() + i * p, flat.begin() + (i + 1) * p);
            if (verify(CspMatrix(p, std::move(e)))) count += 1;
            return;
        }
        for (long v = 0; v <= remaining; ++v) {
            flat[static_cast<size_t>(idx)] = v;
            rec(idx + 1, remaining - v);
        }
    };
    rec(0, m);
    return count;
}

CspMatrix interchange_rows(const CspMatrix& a, long i, long ip) {
    if (i < 0 || i >= a.n || ip < 0 || ip >= a.n)
        fail(errc::invalid_argument, "interchange_rows: row index out of range");
    if (i == ip) return a;
    if (gcd_n(a.n, i) != gcd_n(a.n, ip)) {
        std::vector<Rat> rows = a.row_sums();
        if (rows[static_cast<size_t>(i)] != rows[static_cast<size_t>(ip)])
            fail(errc::gcd_mismatch,
                 "interchange_rows: rows " + std::to_string(i) + " and " + std::to_string(ip) +
                     " have different gcd classes and different sums");
    }
    std::vector<std::vector<Rat>> e = a.entries;
    std::swap(e[static_cast<size_t>(i)], e[static_cast<size_t>(ip)]);
    return CspMatrix(a.n, std::move(e));
}

}  // namespace csp
