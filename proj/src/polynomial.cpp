#include "csp/polynomial.hpp"

#include <algorithm>

#include "csp/error.hpp"

namespace csp {

IntPolynomial::IntPolynomial(std::vector<Int> c) : coeffs(std::move(c)) { trim(); }

IntPolynomial IntPolynomial::one() { return monomial(0); }

IntPolynomial IntPolynomial::monomial(long degree, Int c) {
    if (degree < 0) fail(errc::invalid_argument, "monomial degree must be non-negative");
    IntPolynomial p;
    if (c != 0) {
        p.coeffs.assign(static_cast<size_t>(degree) + 1, Int(0));
        p.coeffs.back() = std::move(c);
    }
    return p;
}

const Int& IntPolynomial::coeff(long i) const {
    static const Int zero(0);
    if (i < 0 || i >= static_cast<long>(coeffs.size())) return zero;
    return coeffs[static_cast<size_t>(i)];
}

Int IntPolynomial::eval_at_one() const {
    Int s = 0;
    for (const Int& c : coeffs) s += c;
    return s;
}

void IntPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> out(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) out[i] += b.coeffs[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> out(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) out[i] -= b.coeffs[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> out(a.coeffs.size() + b.coeffs.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) fail(errc::invalid_argument, "polynomial division by zero");
    if (a.is_zero()) return IntPolynomial();
    if (a.degree() < b.degree()) fail(errc::internal_error, "polynomial division is not exact");
    std::vector<Int> rem = a.coeffs;
    const Int& lead = b.coeffs.back();
    long dq = a.degree() - b.degree();
    std::vector<Int> quot(static_cast<size_t>(dq) + 1, Int(0));
    for (long i = dq; i >= 0; --i) {
        Int top = rem[static_cast<size_t>(i + b.degree())];
        if (top == 0) continue;
        if (top % lead != 0) fail(errc::internal_error, "polynomial division is not exact");
        Int c = top / lead;
        quot[static_cast<size_t>(i)] = c;
        for (long j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(i + j)] -= c * b.coeffs[static_cast<size_t>(j)];
    }
    for (const Int& r : rem)
        if (r != 0) fail(errc::internal_error, "polynomial division is not exact");
    return IntPolynomial(std::move(quot));
}

IntPolynomial mul_one_minus_qt(const IntPolynomial& p, long t) {
    if (t <= 0) fail(errc::invalid_argument, "exponent must be positive");
    if (p.is_zero()) return p;
    std::vector<Int> out(p.coeffs.size() + static_cast<size_t>(t), Int(0));
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        out[i] += p.coeffs[i];
        out[i + static_cast<size_t>(t)] -= p.coeffs[i];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial div_one_minus_qt(const IntPolynomial& p, long t) {
    if (t <= 0) fail(errc::invalid_argument, "exponent must be positive");
    if (p.is_zero()) return p;
    long dq = p.degree() - t;
    if (dq < 0) fail(errc::internal_error, "polynomial division is not exact");
    // p = q*(1 - x^t)  =>  p[i] = quot[i] - quot[i-t]
    std::vector<Int> quot(static_cast<size_t>(dq) + 1, Int(0));
    for (long i = 0; i <= dq; ++i)
        quot[static_cast<size_t>(i)] =
            p.coeffs[static_cast<size_t>(i)] + (i >= t ? quot[static_cast<size_t>(i - t)] : Int(0));
    for (long i = dq + 1; i <= p.degree(); ++i) {
        Int expect = (i - t >= 0 && i - t <= dq) ? -quot[static_cast<size_t>(i - t)] : Int(0);
        if (p.coeffs[static_cast<size_t>(i)] != expect)
            fail(errc::internal_error, "polynomial division is not exact");
    }
    return IntPolynomial(std::move(quot));
}

IntPolynomial q_int(long k) {
    if (k < 0) fail(errc::invalid_argument, "q_int of negative number");
    return IntPolynomial(std::vector<Int>(static_cast<size_t>(k), Int(1)));
}

}  // namespace csp
