#pragma once

// Exact truncated power series and integer polynomials: rational function
// expansion, the PBW product, the Moebius dimension formula for the graded
// Lie algebra underneath A, and the displayed Hilbert-series identities.
// Coefficients are arbitrary-precision integers throughout; the Moebius sum
// divisibility is asserted, not assumed.

#include <vector>

#include "octa/linalg.hpp"
#include "octa/scalar.hpp"

namespace octa {

struct IntPoly {
    std::vector<BigInt> c;  // c[k] multiplies t^k

    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs) {
        for (long x : coeffs) c.emplace_back(x);
        trim();
    }
    explicit IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero_poly() const { return c.empty(); }
    BigInt at(std::size_t k) const { return k < c.size() ? c[k] : BigInt(0); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c.size(), b.c.size()), BigInt(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.at(i) + b.at(i);
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c.size(), b.c.size()), BigInt(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.at(i) - b.at(i);
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return IntPoly();
        std::vector<BigInt> r(a.c.size() + b.c.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return IntPoly(std::move(r));
    }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }

    Rational eval(const Rational& t) const {
        Rational acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + Rational(c[i]);
        return acc;
    }
};

struct TruncSeries {
    int order = 0;                // coefficients 0..order are meaningful
    std::vector<BigInt> c;

    TruncSeries() = default;
    TruncSeries(int n, std::vector<BigInt> coeffs) : order(n), c(std::move(coeffs)) {
        c.resize(order + 1, BigInt(0));
    }
    static TruncSeries zero(int n) { return TruncSeries(n, {}); }
    static TruncSeries from_poly(const IntPoly& p, int n) {
        TruncSeries s = zero(n);
        for (int k = 0; k <= n; ++k) s.c[k] = p.at(k);
        return s;
    }

    BigInt at(std::size_t k) const { return k < c.size() ? c[k] : BigInt(0); }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        int n = std::min(a.order, b.order);
        TruncSeries r = zero(n);
        for (int k = 0; k <= n; ++k) r.c[k] = a.c[k] + b.c[k];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        int n = std::min(a.order, b.order);
        TruncSeries r = zero(n);
        for (int k = 0; k <= n; ++k) r.c[k] = a.c[k] - b.c[k];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        int n = std::min(a.order, b.order);
        TruncSeries r = zero(n);
        for (int i = 0; i <= n; ++i) {
            if (a.c[i] == 0) continue;
            for (int j = 0; i + j <= n; ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        return r;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        if (a.order != b.order) return false;
        return a.c == b.c;
    }

    bool agrees_with(const TruncSeries& b, int upto) const {
        for (int k = 0; k <= upto; ++k)
            if (at(k) != b.at(k)) return false;
        return true;
    }

    // first order where the two disagree, or -1
    int first_mismatch(const TruncSeries& b, int upto) const {
        for (int k = 0; k <= upto; ++k)
            if (at(k) != b.at(k)) return k;
        return -1;
    }
};

// Exact expansion of num/den to the given order; den(0) must be a unit in Z.
inline TruncSeries expand_rational(const IntPoly& num, const IntPoly& den, int order) {
    if (den.at(0) != 1 && den.at(0) != -1)
        throw std::domain_error("expand_rational needs den(0) = +-1");
    TruncSeries s = TruncSeries::zero(order);
    for (int n = 0; n <= order; ++n) {
        BigInt acc = num.at(n);
        for (int k = 1; k <= n && k <= den.degree(); ++k) acc -= den.at(k) * s.c[n - k];
        s.c[n] = den.at(0) == 1 ? acc : -acc;
    }
    return s;
}

inline IntPoly hilbert_denominator_A() { return IntPoly{1, -7, 7, -1}; }
inline IntPoly hilbert_denominator_B() { return IntPoly{1, -6, 1}; }

inline TruncSeries hilbert_series_A(int order) {
    return expand_rational(IntPoly{1}, hilbert_denominator_A(), order);
}
inline TruncSeries hilbert_series_B(int order) {
    return expand_rational(IntPoly{1}, hilbert_denominator_B(), order);
}

// Rational functions as num/den pairs of integer polynomials; equality by
// cross multiplication, no series comparison involved.
struct RatFun {
    IntPoly num, den;
    RatFun(IntPoly n, IntPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero_poly()) throw std::domain_error("zero denominator");
    }
    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num * b.num, a.den * b.den);
    }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num * b.den == b.num * a.den;
    }
};

// ---------------------------------------------------------------------------
// dim f_m of the graded Lie algebra with enveloping algebra A:
//   dim f_m = (1/m) sum_{d|m} mu(m/d) (1 + v_d),   v_d = t1^d + t2^d,
// where t1, t2 are the roots of t^2 - 6t + 1, via v_0 = 2, v_1 = 6,
// v_m = 6 v_{m-1} - v_{m-2}.  The division by m must be exact.

inline std::vector<int> moebius_upto(int n) {
    std::vector<int> mu(n + 1, 1), primes;
    std::vector<bool> composite(n + 1, false);
    for (int i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (int p : primes) {
            if (1ll * i * p > n) break;
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    return mu;
}

inline std::vector<BigInt> v_sequence(int n) {
    std::vector<BigInt> v(n + 1);
    if (n >= 0) v[0] = 2;
    if (n >= 1) v[1] = 6;
    for (int m = 2; m <= n; ++m) v[m] = 6 * v[m - 1] - v[m - 2];
    return v;
}

struct LieDims {
    std::vector<BigInt> dims;  // dims[m] = dim f_m, m >= 1; dims[0] unused (0)
};

inline LieDims lie_dims(int n) {
    if (n < 1) throw std::invalid_argument("lie_dims needs n >= 1");
    std::vector<int> mu = moebius_upto(n);
    std::vector<BigInt> v = v_sequence(n);
    LieDims out;
    out.dims.assign(n + 1, BigInt(0));
    for (int m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (int d = 1; d <= m; ++d) {
            if (m % d) continue;
            acc += mu[m / d] * (1 + v[d]);
        }
        if (acc % m != 0)
            throw std::logic_error("Moebius sum not divisible by m; implementation bug");
        out.dims[m] = acc / m;
    }
    return out;
}

// Does prod_{i<=n} (1 - t^i)^(-d_i) agree with the target through order n?
inline bool pbw_check(const LieDims& dims, const TruncSeries& target, int n) {
    if (static_cast<int>(dims.dims.size()) <= n)
        throw std::invalid_argument("pbw_check needs dims through n");
    TruncSeries prod = TruncSeries::zero(n);
    prod.c[0] = 1;
    for (int i = 1; i <= n; ++i) {
        // (1 - t^i)^(-d): coefficient of t^(i k) is C(d - 1 + k, k)
        TruncSeries factor = TruncSeries::zero(n);
        factor.c[0] = 1;
        BigInt binom = 1;
        const BigInt& d = dims.dims[i];
        if (d == 0) continue;
        for (int k = 1; i * k <= n; ++k) {
            binom = binom * (d - 1 + k) / k;
            factor.c[i * k] = binom;
        }
        prod = prod * factor;
    }
    return prod.agrees_with(target, n);
}

// H_{A^!}(-t) H_A(t) = 1: the product of the dual Hilbert polynomial at -t
// with the series is exactly 1 through the order.
inline bool koszul_functional_equation(int order = 20) {
    IntPoly dual_at_minus_t{1, -7, 7, -1};  // 1 + 7t + 7t^2 + t^3 at -t
    TruncSeries prod =
        TruncSeries::from_poly(dual_at_minus_t, order) * hilbert_series_A(order);
    TruncSeries one = TruncSeries::zero(order);
    one.c[0] = 1;
    return prod == one;
}

// Exact sign bracketing of the smallest real pole of H_B: 1 - 6t + t^2 is
// positive at 1/6 and negative at 1/5, so the radius of convergence lies
// strictly between them.
inline bool growth_rate_bracketing() {
    IntPoly q{1, -6, 1};
    return q.eval(Rational(1, 6)) > 0 && q.eval(Rational(1, 5)) < 0;
}

}  // namespace octa

#include "octa/quotient.hpp"

namespace octa {

struct SeriesIdentityReport {
    bool plane6_identity = false;   // 6t H - H + (1-t)^{-1} = t^2 H
    bool plane5_identity = false;   // H - (1-t)^{-2} = (5t - t^2)(1-t)^{-1} H
    bool plane4_identity = false;   // H - (1-t)^{-3} = 4t (1-t)^{-2} H
    bool plane6_quotient = false;   // A/ALA dims for the 6-plane: k[x]
    bool plane5_quotient = false;   // ... 5-plane: k[x,y]
    bool plane4_quotient = false;   // ... co-associative 4-plane: k[x,y,z]
    int first_failure_degree = -1;

    bool all() const {
        return plane6_identity && plane5_identity && plane4_identity && plane6_quotient &&
               plane5_quotient && plane4_quotient;
    }
};

// The displayed Hilbert-series identities for ideals generated by 6-, 5- and
// co-associative 4-planes, checked as exact rational-function identities and
// against rewrite-computed quotient dimensions for the coordinate planes the
// proofs use.
inline SeriesIdentityReport ideal_series_identities(int cap = 8) {
    SeriesIdentityReport rep;
    RatFun H(IntPoly{1}, hilbert_denominator_A());
    RatFun one_minus_t_inv(IntPoly{1}, IntPoly{1, -1});
    RatFun t2H(IntPoly{0, 0, 1}, IntPoly{1});
    rep.plane6_identity =
        (RatFun(IntPoly{0, 6}, IntPoly{1}) * H - H + one_minus_t_inv) == (t2H * H);
    rep.plane5_identity = (H - RatFun(IntPoly{1}, IntPoly{1, -2, 1})) ==
                          (RatFun(IntPoly{0, 5, -1}, IntPoly{1, -1}) * H);
    rep.plane4_identity = (H - RatFun(IntPoly{1}, IntPoly{1, -3, 3, -1})) ==
                          (RatFun(IntPoly{0, 4}, IntPoly{1, -2, 1}) * H);

    auto check_quotient = [&](std::vector<int> kill, const IntPoly& den, bool& flag) {
        auto q = quotient_hilbert_letters<Rational>(kill, cap);
        TruncSeries expect = expand_rational(IntPoly{1}, den, cap);
        flag = true;
        for (int n = 0; n <= cap; ++n)
            if (q.dims[n] != expect.at(n)) {
                flag = false;
                if (rep.first_failure_degree < 0) rep.first_failure_degree = n;
            }
    };
    check_quotient({2, 3, 4, 5, 6, 7}, IntPoly{1, -1}, rep.plane6_quotient);
    check_quotient({3, 4, 5, 6, 7}, IntPoly{1, -2, 1}, rep.plane5_quotient);
    check_quotient({4, 5, 6, 7}, IntPoly{1, -3, 3, -1}, rep.plane4_quotient);
    return rep;
}

}  // namespace octa
