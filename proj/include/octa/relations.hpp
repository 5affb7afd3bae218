#pragma once

// The seven defining relations r_i = sum_{p,q} eps(i,p,q) x_p x_q, the
// relation r_u attached to an imaginary octonion u, the degree-3
// superpotential W = sum eps(i,j,k) x_i x_j x_k, and the rank facts about the
// relation space used by the structural arguments.

#include <array>
#include <random>

#include "octa/ncpoly.hpp"
#include "octa/octonion.hpp"

namespace octa {

template <FieldScalar K>
using RelationSet = std::array<NcPoly<K>, 7>;

// r_i = mu*(x_i) = sum_{p,q} eps(i,p,q) x_p (x) x_q
template <FieldScalar K>
NcPoly<K> relation_from_mu(int i) {
    NcPoly<K> r;
    for (int p = 1; p <= 7; ++p)
        for (int q = 1; q <= 7; ++q) {
            int e = epsilon(i, p, q);
            if (e) r.add_term(Word::of({p, q}), K(e));
        }
    return r;
}

template <FieldScalar K>
RelationSet<K> relations_from_mu() {
    RelationSet<K> rels;
    for (int i = 1; i <= 7; ++i) rels[i - 1] = relation_from_mu<K>(i);
    return rels;
}

// r_u = sum_t Im(o_t u) (x) o_t under the identification x_i == o_i.
template <FieldScalar K>
NcPoly<K> relation_r_u(const Octonion<K>& u) {
    if (!u.is_imaginary()) throw std::invalid_argument("relation_r_u needs an imaginary octonion");
    NcPoly<K> r;
    for (int t = 1; t <= 7; ++t) {
        Octonion<K> left = im(Octonion<K>::basis(t) * u);
        for (int a = 1; a <= 7; ++a)
            if (!is_zero(left.c[a])) r.add_term(Word::of({a, t}), left.c[a]);
    }
    return r;
}

// W = sum eps(i,j,k) x_i x_j x_k; 42 terms, coefficients +-1.
template <FieldScalar K>
NcPoly<K> build_superpotential() {
    NcPoly<K> w;
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            for (int k = 1; k <= 7; ++k) {
                int e = epsilon(i, j, k);
                if (e) w.add_term(Word::of({i, j, k}), K(e));
            }
    return w;
}

// Coefficient matrix of the relation r_u (a skew 7x7 matrix over K).
template <FieldScalar K>
Matrix<K> relation_matrix(const Octonion<K>& u) {
    return degree2_matrix(relation_r_u(u));
}

struct MinRankReport {
    std::size_t samples = 0;
    std::size_t min_rank_seen = 0;
    std::size_t max_rank_seen = 0;
    bool e_u_cross_check = true;  // rank == 7 - dim E_u on every sample
    bool sampled = true;          // a sampling certificate, not a proof
};

// Over Q the form is anisotropic and every nonzero relation has rank 6.
// Sampled sweep with the fiber cross-check rank(C(u)) = 7 - dim E_u.
template <FieldScalar K, class UGen>
MinRankReport min_rank_in_relation_space(std::size_t samples, UGen&& next_u) {
    MinRankReport rep;
    rep.samples = samples;
    rep.min_rank_seen = 7;
    rep.max_rank_seen = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        Octonion<K> u = next_u();
        std::size_t r = rank(relation_matrix(u));
        rep.min_rank_seen = std::min(rep.min_rank_seen, r);
        rep.max_rank_seen = std::max(rep.max_rank_seen, r);
        if (r != 7 - static_cast<std::size_t>(e_u(u).dim())) rep.e_u_cross_check = false;
    }
    return rep;
}

// The explicit rank-4 witness over a field with i: r_u for u = o6 - i o7.
template <FieldScalar K>
Octonion<K> rank4_witness_direction() {
    static_assert(has_imaginary_unit<K>::value);
    Octonion<K> u = Octonion<K>::basis(6);
    u.c[7] = -imaginary_unit<K>();
    return u;
}

// The invariant elements s2 = x1^2 + ... + x7^2 and Q = sum_{p<q} [x_p,x_q]^2.
template <FieldScalar K>
NcPoly<K> sum_of_squares() {
    NcPoly<K> s;
    for (int i = 1; i <= 7; ++i) s += NcPoly<K>::var(i) * NcPoly<K>::var(i);
    return s;
}

template <FieldScalar K>
NcPoly<K> element_q() {
    NcPoly<K> q;
    for (int p = 1; p <= 7; ++p)
        for (int r = p + 1; r <= 7; ++r) {
            NcPoly<K> c =
                NcPoly<K>::var(p) * NcPoly<K>::var(r) - NcPoly<K>::var(r) * NcPoly<K>::var(p);
            q += c * c;
        }
    return q;
}

}  // namespace octa

