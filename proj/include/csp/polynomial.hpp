#ifndef CSP_POLYNOMIAL_HPP
#define CSP_POLYNOMIAL_HPP

#include <vector>

#include "csp/arith.hpp"

namespace csp {

// Dense integer polynomial in one variable. Trailing zero coefficients are
// trimmed, so the zero polynomial has an empty coefficient vector.
struct IntPolynomial {
    std::vector<Int> coeffs;  // coeffs[i] multiplies q^i

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> c);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one();
    static IntPolynomial monomial(long degree, Int c = 1);

    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }  // -1 for zero
    const Int& coeff(long i) const;
    Int eval_at_one() const;

    void trim();

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

// Exact division; throws internal_error on a nonzero remainder.
IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b);

// p * (1 - q^t) and p / (1 - q^t), both O(deg p). The division throws on a
// nonzero remainder.
IntPolynomial mul_one_minus_qt(const IntPolynomial& p, long t);
IntPolynomial div_one_minus_qt(const IntPolynomial& p, long t);

// [k]_q = 1 + q + ... + q^{k-1}
IntPolynomial q_int(long k);

}  // namespace csp

#endif
