#include "csp/grid.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <tuple>

#include "csp/error.hpp"
#include "csp/numeric.hpp"
#include "csp/polynomial.hpp"

namespace csp {

static int thread_budget(int requested, size_t work) {
    long t = requested;
    if (t <= 0) t = static_cast<long>(std::thread::hardware_concurrency());
    if (t <= 0) t = 1;
    if (const char* cap = std::getenv("CSP_THREADS")) {
        char* end = nullptr;
        long c = std::strtol(cap, &end, 10);
        if (end != cap && c >= 1 && c < t) t = c;
    }
    if (static_cast<size_t>(t) > work) t = static_cast<long>(work);
    return static_cast<int>(t < 1 ? 1 : t);
}

static GridEntry grid_point(const std::vector<long>& lambda, long m, long n) {
    Partition shape(lambda);
    Partition stretched = stretch(shape, n);
    IntPolynomial spec = principal_specialization(stretched, m);
    CycPoly f = reduce_mod_qn(spec.coeffs, n);

    if (is_integral_at_roots(f)) {
        // Wherever the root of unity has order dividing m, the abacus
        // product formula must reproduce the exact evaluation.
        EvalTable t = eval_table(f);
        for (long k = 1; k <= n; ++k) {
            long d = n / gcd_n(n, k);
            if (m % d != 0) continue;
            if (rsw_evaluate(stretched, m, d) != t.at(k))
                fail(errc::internal_error,
                     "evaluation mismatch against the abacus formula at n=" + std::to_string(n) +
                         " k=" + std::to_string(k) + " m=" + std::to_string(m));
        }
    }

    GridEntry e;
    e.lambda = lambda;
    e.m = m;
    e.n = n;
    e.decision = csp_exists(f);
    return e;
}

GridReport verify_conjecture_grid(long max_weight, long max_m, long max_n, int threads) {
    if (max_weight < 1 || max_m < 1 || max_n < 1)
        fail(errc::invalid_argument, "verify_conjecture_grid: bounds must be at least 1");
    auto start = std::chrono::steady_clock::now();

    std::vector<std::tuple<std::vector<long>, long, long>> points;
    for (long w = 1; w <= max_weight; ++w)
        for (const Partition& lam : partitions_of(w))
            for (long m = 1; m <= max_m; ++m)
                for (long n = 1; n <= max_n; ++n) points.emplace_back(lam.parts, m, n);

    GridReport report;
    report.max_weight = max_weight;
    report.max_m = max_m;
    report.max_n = max_n;
    report.entries.resize(points.size());

    std::atomic<size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto worker = [&]() {
        try {
            while (!stop.load(std::memory_order_relaxed)) {
                size_t i = next.fetch_add(1);
                if (i >= points.size()) break;
                const auto& [lambda, m, n] = points[i];
                report.entries[i] = grid_point(lambda, m, n);
            }
        } catch (...) {
            std::scoped_lock lock(err_mutex);
            if (!first_error) first_error = std::current_exception();
            stop.store(true, std::memory_order_relaxed);
        }
    };

    int nthreads = thread_budget(threads, points.size());
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    for (const GridEntry& e : report.entries) (e.decision.yes ? report.yes_count : report.no_count) += 1;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

json to_json(const GridReport& r) {
    json entries = json::array();
    for (const GridEntry& e : r.entries)
        entries.push_back(json{{"lambda", e.lambda}, {"m", e.m}, {"n", e.n}, {"decision", to_json(e.decision)}});
    return json{{"max_weight", r.max_weight}, {"max_m", r.max_m},     {"max_n", r.max_n},
                {"yes_count", r.yes_count},   {"no_count", r.no_count}, {"entries", std::move(entries)}};
}

CatalanReport catalan_sweep(long max_n) {
    if (max_n < 1) fail(errc::invalid_argument, "catalan_sweep: max_n must be at least 1");
    CatalanReport report;
    report.max_n = max_n;
    for (long n = 1; n <= max_n; ++n) {
        CycPoly f = reduce_mod_qn(q_catalan(n).coeffs, n);
        if (!is_integral_at_roots(f))
            fail(errc::internal_error, "q-Catalan " + std::to_string(n) + " not integral at roots");
        EvalTable t = eval_table(f);
        for (long j = 1; j <= n; ++j) {
            long g = gcd_n(n, j);
            Int expect = (g < n) ? binomial(2 * g, g) : binomial(2 * n, n) / (n + 1);
            if (t.at(j) != expect)
                fail(errc::internal_error, "q-Catalan " + std::to_string(n) +
                                               " disagrees with the closed form at k=" + std::to_string(j));
        }
        CatalanEntry e;
        e.n = n;
        e.decision = decide_from_table(t);
        report.entries.push_back(std::move(e));
    }
    for (const CatalanEntry& e : report.entries) (e.decision.yes ? report.yes_count : report.no_count) += 1;
    return report;
}

json to_json(const CatalanReport& r) {
    json entries = json::array();
    for (const CatalanEntry& e : r.entries)
        entries.push_back(json{{"n", e.n}, {"decision", to_json(e.decision)}});
    return json{{"max_n", r.max_n},
                {"yes_count", r.yes_count},
                {"no_count", r.no_count},
                {"entries", std::move(entries)}};
}

}  // namespace csp
