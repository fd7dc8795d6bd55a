#include "csp/exactroots.hpp"

#include <numeric>

#include "csp/error.hpp"

namespace csp {

CycPoly::CycPoly(long n_, std::vector<Int> c) : n(n_), coeffs(std::move(c)) {
    if (n < 1) fail(errc::invalid_argument, "CycPoly: n must be positive");
    if (static_cast<long>(coeffs.size()) != n)
        fail(errc::invalid_argument, "CycPoly: need exactly n coefficients");
}

CycPoly reduce_mod_qn(const std::vector<Int>& raw, long n) {
    if (n < 1) fail(errc::invalid_argument, "reduce_mod_qn: n must be positive");
    std::vector<Int> out(static_cast<size_t>(n), Int(0));
    for (size_t j = 0; j < raw.size(); ++j) out[j % static_cast<size_t>(n)] += raw[j];
    return CycPoly(n, std::move(out));
}

bool is_integral_at_roots(const CycPoly& p) {
    for (long j = 1; j < p.n; ++j) {
        long g = std::gcd(p.n, j);
        if (p.coeffs[static_cast<size_t>(j)] != p.coeffs[static_cast<size_t>(g)]) return false;
    }
    return true;
}

DivisorDecomp to_divisor_bases(const CycPoly& p) {
    if (!is_integral_at_roots(p)) {
        long bad = 0;
        for (long j = 1; j < p.n; ++j)
            if (p.coeffs[static_cast<size_t>(j)] != p.coeffs[static_cast<size_t>(std::gcd(p.n, j))]) {
                bad = j;
                break;
            }
        fail(errc::not_in_module,
             "coefficient at exponent " + std::to_string(bad) + " differs from its gcd class");
    }
    DivisorDecomp out;
    out.n = p.n;
    const auto& divs = divisors(p.n);
    for (long d : divs)
        out.coeffs_g[d] = d == p.n ? p.coeffs[0] : p.coeffs[static_cast<size_t>(d)];
    // a_e = sum_{d | e} c_d over divisors of n, inverted by Moebius.
    for (long e : divs) {
        Int c = 0;
        for (long d : divs)
            if (e % d == 0) c += mobius(e / d) * out.coeffs_g.at(d);
        out.coeffs_h[e] = c;
    }
    return out;
}

CycPoly from_divisor_bases(const DivisorDecomp& d) {
    if (d.n < 1) fail(errc::invalid_argument, "DivisorDecomp: n must be positive");
    std::vector<Int> coeffs(static_cast<size_t>(d.n), Int(0));
    for (const auto& [div, c] : d.coeffs_h) {
        if (div < 1 || d.n % div != 0)
            fail(errc::invalid_argument, "DivisorDecomp: " + std::to_string(div) + " does not divide n");
        for (long j = 0; j < d.n; j += div) coeffs[static_cast<size_t>(j)] += c;
    }
    return CycPoly(d.n, std::move(coeffs));
}

EvalTable eval_table(const CycPoly& p) {
    DivisorDecomp dec = to_divisor_bases(p);
    EvalTable t;
    t.n = p.n;
    t.values.assign(static_cast<size_t>(p.n), Int(0));
    for (long k = 1; k <= p.n; ++k) {
        Int v = 0;
        for (const auto& [d, c] : dec.coeffs_h)
            if (k % (p.n / d) == 0) v += c * (p.n / d);
        t.values[static_cast<size_t>(k - 1)] = v;
    }
    return t;
}

MultiPoly::MultiPoly(std::vector<long> mods, std::vector<Int> t)
    : moduli(std::move(mods)), tensor(std::move(t)) {
    if (moduli.empty()) fail(errc::invalid_argument, "MultiPoly: need at least one modulus");
    size_t size = 1;
    for (long n : moduli) {
        if (n < 1) fail(errc::invalid_argument, "MultiPoly: moduli must be positive");
        size *= static_cast<size_t>(n);
    }
    if (tensor.size() != size)
        fail(errc::invalid_argument, "MultiPoly: tensor size does not match moduli");
}

namespace {

// Strides for row-major indexing; axis i advances by stride[i].
std::vector<size_t> strides_of(const std::vector<long>& dims) {
    std::vector<size_t> s(dims.size(), 1);
    for (size_t i = dims.size(); i-- > 1;)
        s[i - 1] = s[i] * static_cast<size_t>(dims[i]);
    return s;
}

}  // namespace

bool multi_is_integral(const MultiPoly& p) {
    auto strides = strides_of(p.moduli);
    size_t total = p.tensor.size();
    for (size_t axis = 0; axis < p.moduli.size(); ++axis) {
        long n = p.moduli[axis];
        size_t stride = strides[axis];
        for (long k = 1; k < n; ++k) {
            long g = std::gcd(n, k);
            if (g == k) continue;
            // Compare slice k with slice g along this axis.
            for (size_t base = 0; base < total; ++base) {
                size_t idx = (base / stride) % static_cast<size_t>(n);
                if (idx != static_cast<size_t>(k)) continue;
                size_t other = base - (static_cast<size_t>(k - g)) * stride;
                if (p.tensor[base] != p.tensor[other]) return false;
            }
        }
    }
    return true;
}

MultiDecomp multi_decompose(const MultiPoly& p) {
    if (!multi_is_integral(p))
        fail(errc::not_in_module, "tensor violates the gcd slice condition");
    // Transform one axis at a time: read the g coefficients off the divisor
    // positions (exponent 0 stands for divisor n), then Moebius invert.
    std::vector<long> dims = p.moduli;       // current extent per axis
    std::vector<Int> data = p.tensor;
    std::vector<std::vector<long>> labels(p.moduli.size());  // divisor labels after transform
    for (size_t axis = 0; axis < p.moduli.size(); ++axis) {
        long n = p.moduli[axis];
        const auto& divs = divisors(n);
        std::vector<long> newdims = dims;
        newdims[axis] = static_cast<long>(divs.size());
        auto src_strides = strides_of(dims);
        auto dst_strides = strides_of(newdims);
        size_t newtotal = 1;
        for (long d : newdims) newtotal *= static_cast<size_t>(d);
        std::vector<Int> next(newtotal, Int(0));
        size_t outer = newtotal / static_cast<size_t>(newdims[axis]);
        for (size_t o = 0; o < outer; ++o) {
            // Decompose the flat outer index into coordinates of the other axes.
            size_t rem = o, src_base = 0, dst_base = 0;
            for (size_t ax = 0; ax < dims.size(); ++ax) {
                if (ax == axis) continue;
                size_t extent = static_cast<size_t>(newdims[ax]);
                size_t inner = 1;
                for (size_t ax2 = ax + 1; ax2 < dims.size(); ++ax2)
                    if (ax2 != axis) inner *= static_cast<size_t>(newdims[ax2]);
                size_t coord = (rem / inner) % extent;
                rem %= inner;
                src_base += coord * src_strides[ax];
                dst_base += coord * dst_strides[ax];
            }
            for (size_t di = 0; di < divs.size(); ++di) {
                long e = divs[di];
                Int c = 0;
                for (long d : divs) {
                    if (e % d != 0) continue;
                    size_t pos = d == n ? 0 : static_cast<size_t>(d);
                    c += mobius(e / d) * data[src_base + pos * src_strides[axis]];
                }
                next[dst_base + di * dst_strides[axis]] = std::move(c);
            }
        }
        dims = newdims;
        data = std::move(next);
        labels[axis] = divs;
    }
    MultiDecomp out;
    out.moduli = p.moduli;
    auto strides = strides_of(dims);
    size_t total = 1;
    for (long d : dims) total *= static_cast<size_t>(d);
    for (size_t flat = 0; flat < total; ++flat) {
        if (data[flat] == 0) continue;
        std::vector<long> key(p.moduli.size());
        for (size_t ax = 0; ax < dims.size(); ++ax)
            key[ax] = labels[ax][(flat / strides[ax]) % static_cast<size_t>(dims[ax])];
        out.coeffs.emplace(std::move(key), std::move(data[flat]));
    }
    return out;
}

MultiPoly multi_reconstruct(const MultiDecomp& d) {
    if (d.moduli.empty()) fail(errc::invalid_argument, "MultiDecomp: no moduli");
    size_t total = 1;
    for (long n : d.moduli) {
        if (n < 1) fail(errc::invalid_argument, "MultiDecomp: moduli must be positive");
        total *= static_cast<size_t>(n);
    }
    std::vector<Int> tensor(total, Int(0));
    auto strides = strides_of(d.moduli);
    for (const auto& [key, c] : d.coeffs) {
        if (key.size() != d.moduli.size())
            fail(errc::invalid_argument, "MultiDecomp: key arity mismatch");
        for (size_t ax = 0; ax < key.size(); ++ax)
            if (key[ax] < 1 || d.moduli[ax] % key[ax] != 0)
                fail(errc::invalid_argument, "MultiDecomp: key entry is not a divisor");
        // Add c * prod_i h_{d_i}: exponents run over multiples of d_i.
        std::vector<long> exp(key.size(), 0);
        bool running = true;
        while (running) {
            size_t flat = 0;
            for (size_t ax = 0; ax < key.size(); ++ax)
                flat += static_cast<size_t>(exp[ax]) * strides[ax];
            tensor[flat] += c;
            running = false;
            for (size_t ax = key.size(); ax-- > 0;) {
                exp[ax] += key[ax];
                if (exp[ax] < d.moduli[ax]) {
                    running = true;
                    break;
                }
                exp[ax] = 0;
            }
        }
    }
    return MultiPoly(d.moduli, std::move(tensor));
}

}  // namespace csp
