#pragma once

// Exact octonion arithmetic over a coefficient field of characteristic != 2.
// Basis {1, o1..o7}; the imaginary products follow the directed Fano lines:
//   o_r o_s = sum_i eps(r,s,i) o_i - delta_rs.
// Also the bilinear form <u,v> = Re(u conj(v)), the alternating 3-form
// phi(u,v,w) = -Re(uvw) on imaginaries, and the split basis
// {1, t, u1,u2,u3, v1,v2,v3} available when the field contains i.

#include <array>

#include "octa/fano.hpp"
#include "octa/linalg.hpp"
#include "octa/scalar.hpp"

namespace octa {

template <FieldScalar K>
struct Octonion {
    // c[0] is the coefficient of 1, c[i] of o_i.
    std::array<K, 8> c{K(0), K(0), K(0), K(0), K(0), K(0), K(0), K(0)};

    Octonion() = default;

    static Octonion unit() { return scalar(K(1)); }

    static Octonion scalar(K a) {
        Octonion u;
        u.c[0] = std::move(a);
        return u;
    }

    static Octonion basis(int i) {  // o_i, 1 <= i <= 7; i = 0 gives 1
        Octonion u;
        u.c.at(i) = K(1);
        return u;
    }

    static Octonion imaginary(const std::array<K, 7>& a) {
        Octonion u;
        for (int i = 0; i < 7; ++i) u.c[i + 1] = a[i];
        return u;
    }

    bool is_imaginary() const { return is_zero(c[0]); }

    friend Octonion operator+(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend Octonion operator-(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend Octonion operator-(const Octonion& a) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = -a.c[i];
        return r;
    }
    friend Octonion operator*(const K& s, const Octonion& a) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
        return r;
    }
    friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
    friend bool operator!=(const Octonion& a, const Octonion& b) { return !(a == b); }

    bool is_zero_elt() const {
        for (const K& x : c)
            if (!is_zero(x)) return false;
        return true;
    }

    friend Octonion operator*(const Octonion& a, const Octonion& b) {
        Octonion r;
        // unit parts
        r.c[0] = a.c[0] * b.c[0];
        for (int i = 1; i <= 7; ++i) {
            r.c[i] = a.c[0] * b.c[i] + a.c[i] * b.c[0];
            r.c[0] -= a.c[i] * b.c[i];
        }
        // o_r o_s = sum eps(r,s,k) o_k for r != s
        for (int r1 = 1; r1 <= 7; ++r1) {
            if (is_zero(a.c[r1])) continue;
            for (int s = 1; s <= 7; ++s) {
                if (s == r1 || is_zero(b.c[s])) continue;
                int k = line_third_point(r1, s);
                if (line_sign(r1, s) > 0)
                    r.c[k] += a.c[r1] * b.c[s];
                else
                    r.c[k] -= a.c[r1] * b.c[s];
            }
        }
        return r;
    }
};

template <FieldScalar K>
Octonion<K> conj(const Octonion<K>& a) {
    Octonion<K> r = -a;
    r.c[0] = a.c[0];
    return r;
}

template <FieldScalar K>
K re(const Octonion<K>& a) {
    return a.c[0];
}

template <FieldScalar K>
Octonion<K> im(const Octonion<K>& a) {
    Octonion<K> r = a;
    r.c[0] = K(0);
    return r;
}

// <u,v> = Re(u conj(v))
template <FieldScalar K>
K form(const Octonion<K>& u, const Octonion<K>& v) {
    return re(u * conj(v));
}

// phi(u,v,w) = -Re(uvw) for purely imaginary u,v,w.
template <FieldScalar K>
K phi(const Octonion<K>& u, const Octonion<K>& v, const Octonion<K>& w) {
    if (!u.is_imaginary() || !v.is_imaginary() || !w.is_imaginary())
        throw std::invalid_argument("phi needs purely imaginary arguments");
    return -re((u * v) * w);
}

// ---------------------------------------------------------------------------
// Split basis {1, t, u1, u2, u3, v1, v2, v3} over a field containing i:
//   t = i o1,  u_m = o_2m + i o_2m+1,  v_m = o_2m - i o_2m+1.

enum class SplitIndex { one = 0, t = 1, u1 = 2, u2 = 3, u3 = 4, v1 = 5, v2 = 6, v3 = 7 };

inline const char* split_name(int idx) {
    static const char* names[8] = {"1", "t", "u1", "u2", "u3", "v1", "v2", "v3"};
    return names[idx];
}

template <FieldScalar K>
struct SplitOctonion {
    std::array<K, 8> c{K(0), K(0), K(0), K(0), K(0), K(0), K(0), K(0)};

    static SplitOctonion basis(int idx) {
        SplitOctonion s;
        s.c.at(idx) = K(1);
        return s;
    }

    friend SplitOctonion operator+(const SplitOctonion& a, const SplitOctonion& b) {
        SplitOctonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend SplitOctonion operator*(const K& s, const SplitOctonion& a) {
        SplitOctonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
        return r;
    }
    friend bool operator==(const SplitOctonion& a, const SplitOctonion& b) { return a.c == b.c; }
};

template <FieldScalar K>
Octonion<K> to_standard(const SplitOctonion<K>& s) {
    const K i = imaginary_unit<K>();
    Octonion<K> r;
    r.c[0] = s.c[0];
    r.c[1] = i * s.c[1];  // t = i o1
    for (int m = 0; m < 3; ++m) {
        const K& u = s.c[2 + m];
        const K& v = s.c[5 + m];
        r.c[2 + 2 * m] = u + v;
        r.c[3 + 2 * m] = i * (u - v);
    }
    return r;
}

template <FieldScalar K>
SplitOctonion<K> to_split(const Octonion<K>& a) {
    const K i = imaginary_unit<K>();
    const K half = inverse(K(2));
    SplitOctonion<K> s;
    s.c[0] = a.c[0];
    s.c[1] = -i * a.c[1];  // o1 = -i t
    for (int m = 0; m < 3; ++m) {
        const K& even = a.c[2 + 2 * m];
        const K& odd = a.c[3 + 2 * m];
        s.c[2 + m] = half * (even - i * odd);
        s.c[5 + m] = half * (even + i * odd);
    }
    return s;
}

// Product in the split basis, by transport through the standard basis.
template <FieldScalar K>
SplitOctonion<K> split_mul(const SplitOctonion<K>& a, const SplitOctonion<K>& b) {
    return to_split(to_standard(a) * to_standard(b));
}

}  // namespace octa
