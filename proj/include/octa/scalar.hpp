#pragma once

// Exact coefficient fields: Q (gmp rationals), Q(i), and odd prime fields F_p.
// Everything in this library is exact; there is no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace octa {

using BigInt = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline Rational inverse(const Rational& a) {
    if (is_zero(a)) throw std::domain_error("division by zero in Q");
    return Rational(1) / a;
}
inline std::string scalar_str(const Rational& a) { return a.get_str(); }
inline Rational scalar_from_str(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// Gaussian extension K(i), i^2 = -1.  Used with K = Rational.

template <class K>
struct Gaussian {
    K re{0};
    K im{0};

    Gaussian() = default;
    Gaussian(int n) : re(n), im(0) {}
    Gaussian(K r) : re(std::move(r)), im(0) {}
    Gaussian(K r, K i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian i() { return Gaussian(K(0), K(1)); }

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
        return Gaussian(K(a.re + b.re), K(a.im + b.im));
    }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
        return Gaussian(K(a.re - b.re), K(a.im - b.im));
    }
    friend Gaussian operator-(const Gaussian& a) { return Gaussian(K(-a.re), K(-a.im)); }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return Gaussian(K(a.re * b.re - a.im * b.im), K(a.re * b.im + a.im * b.re));
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) { return a * inverse(b); }
    Gaussian& operator+=(const Gaussian& b) { return *this = *this + b; }
    Gaussian& operator-=(const Gaussian& b) { return *this = *this - b; }
    Gaussian& operator*=(const Gaussian& b) { return *this = *this * b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
    friend bool operator<(const Gaussian& a, const Gaussian& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

using QI = Gaussian<Rational>;

template <class K>
bool is_zero(const Gaussian<K>& a) {
    return is_zero(a.re) && is_zero(a.im);
}
template <class K>
Gaussian<K> inverse(const Gaussian<K>& a) {
    K n = a.re * a.re + a.im * a.im;
    if (is_zero(n)) throw std::domain_error("division by zero in K(i)");
    K ni = inverse(n);
    return Gaussian<K>(K(a.re * ni), K(-a.im * ni));
}
template <class K>
std::string scalar_str(const Gaussian<K>& a) {
    return "{" + scalar_str(a.re) + "," + scalar_str(a.im) + "}";
}

// ---------------------------------------------------------------------------
// Prime field F_p, p an odd prime.  The modulus travels with the element; a
// modulus of 0 marks a small integer literal (so that Fp(0), Fp(1) work in
// generic code) and is adopted from the other operand on first contact.

struct Fp {
    std::int64_t v = 0;
    std::int64_t p = 0;

    Fp() = default;
    Fp(std::int64_t n) : v(n), p(0) {}
    Fp(std::int64_t n, std::int64_t mod) : v(n), p(mod) {
        check_modulus(mod);
        normalize();
    }

    static void check_modulus(std::int64_t m) {
        if (m < 3 || m % 2 == 0) throw std::domain_error("F_p needs an odd prime modulus");
        for (std::int64_t d = 3; d * d <= m; d += 2)
            if (m % d == 0) throw std::domain_error("F_p modulus is not prime");
    }

    void normalize() {
        if (p > 0) {
            v %= p;
            if (v < 0) v += p;
        }
    }

    static std::int64_t merged(std::int64_t a, std::int64_t b) {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a != b) throw std::domain_error("mixed F_p moduli");
        return a;
    }

    friend Fp operator+(Fp a, Fp b) {
        Fp r(a.v + b.v);
        r.p = merged(a.p, b.p);
        r.normalize();
        return r;
    }
    friend Fp operator-(Fp a, Fp b) {
        Fp r(a.v - b.v);
        r.p = merged(a.p, b.p);
        r.normalize();
        return r;
    }
    friend Fp operator-(Fp a) {
        Fp r(-a.v);
        r.p = a.p;
        r.normalize();
        return r;
    }
    friend Fp operator*(Fp a, Fp b) {
        Fp r(a.v * b.v);
        r.p = merged(a.p, b.p);
        r.normalize();
        return r;
    }
    friend Fp operator/(Fp a, Fp b) { return a * inverse(b); }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    friend bool operator==(Fp a, Fp b) {
        if (a.p == 0 || b.p == 0) {
            std::int64_t m = a.p + b.p;
            if (m == 0) return a.v == b.v;
            return ((a.v - b.v) % m + m) % m == 0;
        }
        return a.p == b.p && a.v == b.v;
    }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }
    friend bool operator<(Fp a, Fp b) { return a.v < b.v; }

    friend Fp inverse(Fp a);
};

inline bool is_zero(const Fp& a) { return a.p == 0 ? a.v == 0 : a.v % a.p == 0; }

inline Fp inverse(Fp a) {
    if (a.p == 0) {
        if (a.v == 1 || a.v == -1) return a;
        throw std::domain_error("F_p literal inverse needs a modulus");
    }
    if (a.v == 0) throw std::domain_error("division by zero in F_p");
    // extended Euclid
    std::int64_t t = 0, newt = 1, r = a.p, newr = a.v;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += a.p;
    return Fp(t, a.p);
}
inline std::string scalar_str(const Fp& a) { return std::to_string(a.v); }

// Field concept: what the generic algebra code actually relies on.
template <class K>
concept FieldScalar = requires(K a, K b) {
    K(0);
    K(1);
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { inverse(a) } -> std::convertible_to<K>;
};

template <class K>
struct has_imaginary_unit : std::false_type {};
template <class K>
struct has_imaginary_unit<Gaussian<K>> : std::true_type {};

template <class K>
K imaginary_unit() {
    static_assert(has_imaginary_unit<K>::value, "field has no square root of -1");
    return K::i();
}

}  // namespace octa
