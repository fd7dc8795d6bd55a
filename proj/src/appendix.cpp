#include "csp/appendix.hpp"

#include <random>

#include "csp/error.hpp"

namespace csp {

bool harmonic_sum_dominance(long a, long t, long i, long j, long k) {
    if (a < 1 || t < a || i < 0 || j < 1 || k < j)
        fail(errc::hypothesis_violation, "harmonic_sum_dominance needs 1 <= a <= t, i >= 0, 1 <= j <= k");
    Rat lhs = 0, rhs = 0;
    for (long l = 0; l < k * a; ++l) lhs += make_rat(1, k * t + i - l);
    for (long l = 0; l < j * a; ++l) rhs += make_rat(1, j * t + i - l);
    return lhs >= rhs;
}

bool binomial_ratio_power_monotone(long a, long b, long i, long j, long k) {
    if (a < 1 || b < a || i < 0 || j < 1 || k < j)
        fail(errc::hypothesis_violation,
             "binomial_ratio_power_monotone needs 1 <= a <= b, i >= 0, 1 <= j <= k");
    Int lhs = int_pow(binomial(k * b + i, k * a), static_cast<unsigned long>(j)) *
              int_pow(binomial(j * a + i, j * a), static_cast<unsigned long>(k));
    Int rhs = int_pow(binomial(j * b + i, j * a), static_cast<unsigned long>(k)) *
              int_pow(binomial(k * a + i, k * a), static_cast<unsigned long>(j));
    return lhs >= rhs;
}

bool binomial_product_lower_bound(long a, long b, long i, long k) {
    if (a < 0 || b <= a || k < 1 || i < 0 || i > k * a)
        fail(errc::hypothesis_violation,
             "binomial_product_lower_bound needs b > a >= 0, k >= 1, 0 <= i <= ka");
    unsigned long e = static_cast<unsigned long>(k * a);
    Int lhs = binomial(k * b + i, k * a) * int_pow(Int(2 * a), e);
    Int rhs = binomial(k * a + i, k * a) * int_pow(Int(b + a), e);
    return lhs >= rhs;
}

AppendixReport check_appendix_inequalities(long max_param, long samples, unsigned long seed) {
    if (max_param < 1 || samples < 0)
        fail(errc::invalid_argument, "check_appendix_inequalities: max_param >= 1, samples >= 0");
    AppendixReport report;
    report.max_param = max_param;
    report.samples = samples;
    report.seed = seed;

    auto record = [&](bool ok, const char* name, std::initializer_list<long> params) {
        report.checks += 1;
        if (!ok) report.violations.push_back({name, std::vector<long>(params)});
    };

    for (long a = 1; a <= max_param; ++a)
        for (long t = a; t <= max_param; ++t)
            for (long i = 0; i <= max_param; ++i)
                for (long j = 1; j <= max_param; ++j)
                    for (long k = j; k <= max_param; ++k)
                        record(harmonic_sum_dominance(a, t, i, j, k), "harmonic_sum_dominance",
                               {a, t, i, j, k});

    for (long a = 1; a <= max_param; ++a)
        for (long b = a; b <= max_param; ++b)
            for (long i = 0; i <= max_param; ++i)
                for (long j = 1; j <= max_param; ++j)
                    for (long k = j; k <= max_param; ++k)
                        record(binomial_ratio_power_monotone(a, b, i, j, k),
                               "binomial_ratio_power_monotone", {a, b, i, j, k});

    for (long a = 0; a < max_param; ++a)
        for (long b = a + 1; b <= max_param; ++b)
            for (long k = 1; k <= max_param; ++k)
                for (long i = 0; i <= k * a; ++i)
                    record(binomial_product_lower_bound(a, b, i, k), "binomial_product_lower_bound",
                           {a, b, i, k});

    std::mt19937_64 rng(seed);
    auto draw = [&](long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    };
    const long cap = 20;
    for (long s = 0; s < samples; ++s) {
        long a = draw(1, cap), t = draw(a, cap), i = draw(0, cap), j = draw(1, cap), k = draw(j, cap);
        record(harmonic_sum_dominance(a, t, i, j, k), "harmonic_sum_dominance", {a, t, i, j, k});
    }
    for (long s = 0; s < samples; ++s) {
        long a = draw(1, cap), b = draw(a, cap), i = draw(0, cap), j = draw(1, cap), k = draw(j, cap);
        record(binomial_ratio_power_monotone(a, b, i, j, k), "binomial_ratio_power_monotone",
               {a, b, i, j, k});
    }
    for (long s = 0; s < samples; ++s) {
        long a = draw(0, cap - 1), b = draw(a + 1, cap), k = draw(1, cap), i = draw(0, k * a);
        record(binomial_product_lower_bound(a, b, i, k), "binomial_product_lower_bound", {a, b, i, k});
    }
    return report;
}

json to_json(const AppendixReport& r) {
    json violations = json::array();
    for (const AppendixViolation& v : r.violations)
        violations.push_back(json{{"inequality", v.inequality}, {"params", v.params}});
    return json{{"max_param", r.max_param}, {"samples", r.samples},
                {"seed", r.seed},           {"checks", r.checks},
                {"violations", std::move(violations)}};
}

}  // namespace csp
