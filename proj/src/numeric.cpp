#include "csp/numeric.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "csp/error.hpp"

namespace csp {

const std::vector<long>& divisors(long n) {
    if (n < 1) fail(errc::invalid_argument, "divisors: n must be positive");
    static std::mutex mu;
    static std::map<long, std::vector<long>> cache;  // node-based, refs stay valid
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<long> divs;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return cache.emplace(n, std::move(divs)).first->second;
}

int mobius(long k) {
    if (k < 1) fail(errc::invalid_argument, "mobius: argument must be positive");
    int primes = 0;
    for (long p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            k /= p;
            if (k % p == 0) return 0;  // square factor
            ++primes;
        }
    }
    if (k > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

long gcd_n(long n, long k) {
    long g = std::gcd(n, k);
    return g == 0 ? n : g;
}

}  // namespace csp
