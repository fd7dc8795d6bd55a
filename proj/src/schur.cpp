#include "csp/schur.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "csp/error.hpp"

namespace csp {

Partition::Partition(std::vector<long> parts_) : parts(std::move(parts_)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) fail(errc::invalid_argument, "Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            fail(errc::invalid_argument, "Partition: parts must be weakly decreasing");
    }
}

long Partition::size() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
}

long Partition::part(long i) const {
    if (i < 1) fail(errc::invalid_argument, "Partition::part: index is 1-based");
    return i <= length() ? parts[static_cast<size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
    std::vector<long> conj;
    if (parts.empty()) return Partition();
    conj.resize(static_cast<size_t>(parts[0]));
    for (long j = 1; j <= parts[0]; ++j) {
        long count = 0;
        for (long p : parts)
            if (p >= j) ++count;
        conj[static_cast<size_t>(j - 1)] = count;
    }
    return Partition(std::move(conj));
}

Partition stretch(const Partition& lam, long n) {
    if (n < 1) fail(errc::invalid_argument, "stretch: factor must be positive");
    std::vector<long> parts = lam.parts;
    for (long& p : parts) p *= n;
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(long w) {
    if (w < 0) fail(errc::invalid_argument, "partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<long> prefix;
    std::function<void(long, long)> rec = [&](long remaining, long max_part) {
        if (remaining == 0) {
            out.emplace_back(Partition(prefix));
            return;
        }
        for (long p = std::min(max_part, remaining); p >= 1; --p) {
            prefix.push_back(p);
            rec(remaining - p, p);
            prefix.pop_back();
        }
    };
    rec(w, w);
    return out;
}

HookContentData hooks_and_contents(const Partition& lam) {
    HookContentData hc;
    hc.b = 0;
    Partition conj = lam.conjugate();
    for (long i = 1; i <= lam.length(); ++i) {
        hc.b += (i - 1) * lam.part(i);
        for (long j = 1; j <= lam.part(i); ++j) {
            CellData cell;
            cell.row = i;
            cell.col = j;
            cell.hook = (lam.part(i) - j) + (conj.part(j) - i) + 1;
            cell.content = j - i;
            hc.cells.push_back(cell);
        }
    }
    return hc;
}

Int ssyt_count(const Partition& lam, long m) {
    if (m < 0) fail(errc::invalid_argument, "ssyt_count: m must be non-negative");
    if (lam.length() > m) return 0;
    Rat acc = 1;
    for (const CellData& cell : hooks_and_contents(lam).cells)
        acc *= make_rat(m + cell.content, cell.hook);
    return to_int(acc);
}

std::vector<std::vector<std::vector<long>>> enumerate_ssyt(const Partition& lam, long m) {
    if (m < 0) fail(errc::invalid_argument, "enumerate_ssyt: m must be non-negative");
    std::vector<std::vector<std::vector<long>>> out;
    long rows = lam.length();
    std::vector<std::vector<long>> t(static_cast<size_t>(rows));
    for (long r = 0; r < rows; ++r) t[static_cast<size_t>(r)].resize(static_cast<size_t>(lam.part(r + 1)));
    std::function<void(long, long)> rec = [&](long r, long c) {
        if (r == rows) {
            out.push_back(t);
            return;
        }
        long nr = r, nc = c + 1;
        if (nc >= lam.part(r + 1)) {
            nr = r + 1;
            nc = 0;
        }
        long lo = 0;
        if (c > 0) lo = std::max(lo, t[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
        if (r > 0 && lam.part(r) > c) lo = std::max(lo, t[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        for (long v = lo; v < m; ++v) {
            t[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            rec(nr, nc);
        }
    };
    rec(0, 0);
    return out;
}

IntPolynomial principal_specialization(const Partition& lam, long m) {
    if (m < 0) fail(errc::invalid_argument, "principal_specialization: m must be non-negative");
    if (lam.length() > m) return IntPolynomial::zero();
    HookContentData hc = hooks_and_contents(lam);
    IntPolynomial num = IntPolynomial::one();
    for (const CellData& cell : hc.cells) num = mul_one_minus_qt(num, m + cell.content);
    IntPolynomial den = IntPolynomial::one();
    for (const CellData& cell : hc.cells) den = mul_one_minus_qt(den, cell.hook);
    return IntPolynomial::monomial(hc.b) * exact_div(num, den);
}

static std::vector<long> beta_positions(const Partition& lam, long m) {
    std::vector<long> pos(static_cast<size_t>(m));
    for (long i = 1; i <= m; ++i) pos[static_cast<size_t>(i - 1)] = lam.part(i) + m - i;
    return pos;
}

// Positions sorted descending decode back through lambda_i = pos_i - (m - i).
static Partition positions_to_partition(std::vector<long> pos) {
    std::sort(pos.begin(), pos.end(), std::greater<long>());
    long m = static_cast<long>(pos.size());
    std::vector<long> parts;
    for (long i = 1; i <= m; ++i) {
        long p = pos[static_cast<size_t>(i - 1)] - (m - i);
        if (p < 0) fail(errc::internal_error, "abacus decode produced a negative part");
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

Abacus abacus_decompose(const Partition& lam, long d, long m_beads) {
    if (d < 1) fail(errc::invalid_argument, "abacus_decompose: d must be positive");
    if (m_beads < lam.length())
        fail(errc::too_few_beads, "abacus_decompose: need at least one bead per row");
    Abacus ab;
    ab.d = d;
    for (long p : beta_positions(lam, m_beads)) ab.beads.push_back(Bead{p % d, p / d});
    return ab;
}

Partition abacus_to_partition(const Abacus& ab) {
    if (ab.d < 1) fail(errc::invalid_argument, "abacus_to_partition: d must be positive");
    std::vector<long> pos;
    for (const Bead& b : ab.beads) {
        if (b.runner < 0 || b.runner >= ab.d || b.row < 0)
            fail(errc::invalid_argument, "abacus_to_partition: bead off the abacus");
        pos.push_back(b.runner + ab.d * b.row);
    }
    std::vector<long> sorted = pos;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(errc::invalid_argument, "abacus_to_partition: bead positions collide");
    return positions_to_partition(std::move(pos));
}

CoreQuotient core_quotient(const Partition& lam, long d, long m_beads) {
    if (d < 1) fail(errc::invalid_argument, "core_quotient: d must be positive");
    if (m_beads % d != 0)
        fail(errc::invalid_argument, "core_quotient: bead count must be a multiple of d");
    if (m_beads < lam.length()) fail(errc::too_few_beads, "core_quotient: need one bead per row");

    std::vector<std::vector<long>> runner_rows(static_cast<size_t>(d));
    for (long p : beta_positions(lam, m_beads)) runner_rows[static_cast<size_t>(p % d)].push_back(p / d);

    CoreQuotient cq;
    std::vector<long> core_pos;
    for (long s = 0; s < d; ++s) {
        std::vector<long>& rows = runner_rows[static_cast<size_t>(s)];
        std::sort(rows.begin(), rows.end(), std::greater<long>());
        long k = static_cast<long>(rows.size());
        std::vector<long> qparts;
        for (long j = 1; j <= k; ++j) {
            long p = rows[static_cast<size_t>(j - 1)] - (k - j);
            if (p > 0) qparts.push_back(p);
        }
        cq.quotient.emplace_back(Partition(std::move(qparts)));
        // Sliding the runner's beads all the way up packs them into rows 0..k-1.
        for (long t = 0; t < k; ++t) core_pos.push_back(s + d * t);
    }
    cq.core = positions_to_partition(std::move(core_pos));
    return cq;
}

CoreQuotient core_quotient(const Partition& lam, long d) {
    if (d < 1) fail(errc::invalid_argument, "core_quotient: d must be positive");
    long m = ((lam.length() + d - 1) / d) * d;
    return core_quotient(lam, d, m);
}

Int mn_character(const Partition& lam, const std::vector<long>& alpha) {
    long total = 0;
    for (long a : alpha) {
        if (a < 1) fail(errc::invalid_argument, "mn_character: composition parts must be positive");
        total += a;
    }
    if (total != lam.size()) fail(errc::size_mismatch, "mn_character: |lambda| != |alpha|");

    // The remaining weight pins down how many alpha parts are left, so the
    // partition alone keys the memo.
    std::map<std::vector<long>, Int> memo;
    std::function<Int(const Partition&, size_t)> rec = [&](const Partition& mu, size_t idx) -> Int {
        if (idx == 0) return 1;
        auto it = memo.find(mu.parts);
        if (it != memo.end()) return it->second;
        long ell = alpha[idx - 1];
        long m = mu.length();
        std::vector<long> pos = beta_positions(mu, m);
        Int acc = 0;
        for (long bi = 0; bi < m; ++bi) {
            long p = pos[static_cast<size_t>(bi)];
            long target = p - ell;
            if (target < 0) continue;
            bool occupied = false;
            long height = 0;
            for (long x : pos) {
                if (x == target) occupied = true;
                if (x > target && x < p) ++height;
            }
            if (occupied) continue;
            std::vector<long> moved = pos;
            moved[static_cast<size_t>(bi)] = target;
            Int sub = rec(positions_to_partition(std::move(moved)), idx - 1);
            if (height % 2 == 1) sub = -sub;
            acc += sub;
        }
        memo.emplace(mu.parts, acc);
        return acc;
    };
    return rec(lam, alpha.size());
}

int strip_sign(const Partition& lam, long d) {
    if (d < 1) fail(errc::invalid_argument, "strip_sign: d must be positive");
    long m = ((lam.length() + d - 1) / d) * d;
    if (m == 0) return 1;
    long maxpos = lam.part(1) + m - 1;
    std::vector<char> occ(static_cast<size_t>(maxpos + 1), 0);
    for (long p : beta_positions(lam, m)) occ[static_cast<size_t>(p)] = 1;
    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (long p = d; p <= maxpos; ++p) {
            if (!occ[static_cast<size_t>(p)] || occ[static_cast<size_t>(p - d)]) continue;
            long between = 0;
            for (long x = p - d + 1; x < p; ++x) between += occ[static_cast<size_t>(x)];
            if (between % 2 == 1) sign = -sign;
            occ[static_cast<size_t>(p)] = 0;
            occ[static_cast<size_t>(p - d)] = 1;
            moved = true;
        }
    }
    for (long p = 0; p < m; ++p)
        if (!occ[static_cast<size_t>(p)]) return 0;  // nonempty d-core
    return sign;
}

Int rsw_evaluate(const Partition& lam, long m, long d) {
    if (d < 1) fail(errc::invalid_argument, "rsw_evaluate: d must be positive");
    if (m < 0 || m % d != 0) fail(errc::d_not_dividing_m, "rsw_evaluate: d must divide m");
    CoreQuotient cq = core_quotient(lam, d);
    if (cq.core.size() > 0) return 0;
    Int prod = strip_sign(lam, d);
    for (const Partition& comp : cq.quotient) prod *= ssyt_count(comp, m / d);
    return prod;
}

// prod (1 - q^t) over nums divided, exactly, by the same product over dens.
static IntPolynomial one_minus_ratio(const std::vector<long>& nums, const std::vector<long>& dens) {
    IntPolynomial num = IntPolynomial::one();
    for (long t : nums) num = mul_one_minus_qt(num, t);
    IntPolynomial den = IntPolynomial::one();
    for (long t : dens) den = mul_one_minus_qt(den, t);
    return exact_div(num, den);
}

IntPolynomial q_binomial(long n, long k) {
    if (k < 0 || k > n) fail(errc::invalid_argument, "q_binomial: need 0 <= k <= n");
    std::vector<long> nums, dens;
    for (long t = n - k + 1; t <= n; ++t) nums.push_back(t);
    for (long t = 1; t <= k; ++t) dens.push_back(t);
    return one_minus_ratio(nums, dens);
}

IntPolynomial q_catalan(long n) {
    if (n < 0) fail(errc::invalid_argument, "q_catalan: n must be non-negative");
    // [2n choose n]_q / [n+1]_q after cancelling the common (1-q^t) factors.
    std::vector<long> nums, dens;
    for (long t = n + 2; t <= 2 * n; ++t) nums.push_back(t);
    for (long t = 2; t <= n; ++t) dens.push_back(t);
    return one_minus_ratio(nums, dens);
}

}  // namespace csp
