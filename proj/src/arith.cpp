#include "csp/arith.hpp"

#include "csp/error.hpp"

namespace csp {

Int to_int(const Rat& r) {
    if (!is_integer(r)) fail(errc::internal_error, "expected integer, got " + rat_string(r));
    return r.get_num();
}

Int int_pow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Int binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Int binomial_big(const Int& n, long k) {
    if (k < 0 || n < 0) return 0;
    Int out = 1;
    for (long t = 0; t < k; ++t) out *= n - t;  // hits zero when n < k
    for (long t = 2; t <= k; ++t) out /= t;     // exact: prefix products of consecutive ints
    return out;
}

Int factorial(long n) {
    if (n < 0) fail(errc::invalid_argument, "factorial of negative number");
    Int out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    auto check_int = [&](const std::string& part, const char* what) {
        if (part.empty()) fail(errc::parse_error, std::string("empty ") + what + " in rational \"" + s + "\"");
        size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size())
            fail(errc::parse_error, std::string("bad ") + what + " in rational \"" + s + "\"");
        for (size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                fail(errc::parse_error, std::string("bad ") + what + " in rational \"" + s + "\"");
    };
    if (slash == std::string::npos) {
        check_int(s, "integer");
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num, "numerator");
    check_int(den, "denominator");
    Int d(den);
    if (d == 0) fail(errc::parse_error, "zero denominator in rational \"" + s + "\"");
    return make_rat(Int(num), d);
}

std::string rat_string(const Rat& r) {
    return r.get_str();  // canonical "p" or "p/q"
}

}  // namespace csp
