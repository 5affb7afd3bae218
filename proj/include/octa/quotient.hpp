#pragma once

// Hilbert dimensions of quotients of A by degree-1 subspaces (plus optional
// extra degree-2 relations).  A coordinate change first sends the subspace to
// a span of letters; the induced relations are reduced, turned into rules,
// and counted through the transfer matrix when the induced system is
// confluent.  Otherwise dimensions come from exact per-degree linear algebra
// on the ideal span (and the report says so).

#include <map>

#include "octa/rewrite.hpp"
#include "octa/subspace.hpp"

namespace octa {

template <FieldScalar K>
struct QuotientHilbertReport {
    std::vector<int> surviving_letters;
    bool used_change_of_basis = false;
    Matrix<K> generator_change;  // column k = old-basis coordinates of new generator y_k
    bool confluent = false;
    std::vector<BigInt> dims;    // degree 0..n_max
    std::string method;          // "rewrite" or "linear-algebra"
};

namespace detail {

// Substitute x_j -> sum_k S(j,k) y_k in a degree-2 polynomial.
template <FieldScalar K>
NcPoly<K> substitute_linear(const NcPoly<K>& p, const Matrix<K>& S) {
    NcPoly<K> out;
    for (const auto& [w, c] : p.terms()) {
        if (w.degree() != 2) throw std::invalid_argument("substitute_linear needs degree 2");
        int a = w.letter(0), b = w.letter(1);
        for (int k = 1; k <= 7; ++k) {
            if (is_zero(S(a - 1, k - 1))) continue;
            for (int l = 1; l <= 7; ++l) {
                if (is_zero(S(b - 1, l - 1))) continue;
                out.add_term(Word::of({k, l}), c * S(a - 1, k - 1) * S(b - 1, l - 1));
            }
        }
    }
    return out;
}

// Relabel letters by a map old -> new (0 = killed); terms touching killed
// letters drop out.
template <FieldScalar K>
NcPoly<K> relabel(const NcPoly<K>& p, const std::array<int, 8>& to_new) {
    NcPoly<K> out;
    for (const auto& [w, c] : p.terms()) {
        Word nw;
        bool alive = true;
        for (int i = 0; i < w.degree(); ++i) {
            int nl = to_new[w.letter(i)];
            if (nl == 0) {
                alive = false;
                break;
            }
            nw.push_back(nl);
        }
        if (alive) out.add_term(nw, c);
    }
    return out;
}

// Exact dimension of degree n of <letters alphabet> / (ideal generated by the
// given degree-2 relations): sparse column elimination over K of the span
// {a * rho * b}.
template <FieldScalar K>
BigInt ideal_quotient_dim(const std::vector<NcPoly<K>>& rels, const std::vector<int>& letters,
                          int n) {
    if (n <= 1) return n == 0 ? BigInt(1) : BigInt(letters.size());
    std::vector<Word> words = all_words(letters, n);
    std::map<Word, std::size_t> windex;
    for (std::size_t i = 0; i < words.size(); ++i) windex[words[i]] = i;

    // sparse reduced columns keyed by pivot row (largest row index)
    std::map<std::size_t, std::map<std::size_t, K>> pivots;
    std::size_t rank = 0;
    for (int left_deg = 0; left_deg <= n - 2; ++left_deg) {
        for (const Word& a : all_words(letters, left_deg))
            for (const Word& b : all_words(letters, n - 2 - left_deg))
                for (const NcPoly<K>& rho : rels) {
                    std::map<std::size_t, K> col;
                    for (const auto& [m, c] : rho.terms()) {
                        std::size_t r = windex.at(a * m * b);
                        auto [it, inserted] = col.try_emplace(r, c);
                        if (!inserted) {
                            it->second += c;
                            if (is_zero(it->second)) col.erase(it);
                        }
                    }
                    while (!col.empty()) {
                        std::size_t top = col.rbegin()->first;
                        auto piv = pivots.find(top);
                        if (piv == pivots.end()) {
                            K inv = inverse(col.rbegin()->second);
                            std::map<std::size_t, K> norm;
                            for (auto& [r, v] : col) norm[r] = v * inv;
                            pivots.emplace(top, std::move(norm));
                            ++rank;
                            break;
                        }
                        K f = col.rbegin()->second;
                        for (const auto& [r, v] : piv->second) {
                            auto [it, inserted] = col.try_emplace(r, -f * v);
                            if (!inserted) {
                                it->second -= f * v;
                                if (is_zero(it->second)) col.erase(it);
                            }
                        }
                    }
                }
    }
    return BigInt(words.size()) - BigInt(rank);
}

}  // namespace detail

// Quotient of A by the two-sided ideal of a degree-1 subspace L together
// with optional extra homogeneous relations: degree-1 extras enlarge the
// subspace, degree-2 extras join the induced relation list (they must be
// written in the surviving letters).
template <FieldScalar K>
QuotientHilbertReport<K> quotient_hilbert(const Subspace<K>& L_in, int n_max,
                                          const std::vector<NcPoly<K>>& extra = {}) {
    QuotientHilbertReport<K> rep;
    Subspace<K> L = L_in;
    std::vector<NcPoly<K>> extra_deg2;
    {
        std::vector<Octonion<K>> gens = L_in.basis();
        for (const NcPoly<K>& e : extra) {
            int deg = 0;
            if (!e.is_homogeneous(&deg) || (deg != 1 && deg != 2))
                throw std::invalid_argument("extra relations must be homogeneous of degree 1 or 2");
            if (e.is_zero_poly()) continue;
            if (deg == 1) {
                std::array<K, 7> v{};
                for (const auto& [w, c] : e.terms()) v[w.letter(0) - 1] = c;
                gens.push_back(Octonion<K>::imaginary(v));
            } else {
                extra_deg2.push_back(e);
            }
        }
        L = Subspace<K>::span(gens);
    }
    const int d = L.dim();
    if (d < 0 || d > 7) throw std::invalid_argument("bad subspace");

    // New generators: complement coordinates first, then L's echelon basis.
    // Columns of G are the new generators in the old coordinates.
    std::vector<std::size_t> pivot_cols;
    {
        Matrix<K> rows(d, 7);
        for (int r = 0; r < d; ++r)
            for (int j = 0; j < 7; ++j) rows(r, j) = L.basis()[r].c[j + 1];
        Matrix<K> copy = rows;
        pivot_cols = copy.rref();
    }
    std::vector<bool> is_pivot(7, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    Matrix<K> G(7, 7);
    int col = 0;
    bool coordinate_subspace = true;
    for (int j = 0; j < 7; ++j)
        if (!is_pivot[j]) G(j, col++) = K(1);
    for (int r = 0; r < d; ++r) {
        bool is_unit = true;
        for (int j = 0; j < 7; ++j) {
            G(j, col) = L.basis()[r].c[j + 1];
            if (!is_zero(G(j, col)) && !(G(j, col) == K(1))) is_unit = false;
        }
        int nz = 0;
        for (int j = 0; j < 7; ++j)
            if (!is_zero(G(j, col))) ++nz;
        if (!is_unit || nz != 1) coordinate_subspace = false;
        ++col;
    }
    rep.used_change_of_basis = !coordinate_subspace;
    rep.generator_change = G;

    // y_k = sum_j G(j,k) x_j, so x = (G^T)^{-1} y; the substitution matrix is
    // S(j,k) = (G^{-1})(k,j).
    Matrix<K> S(7, 7);
    {
        Matrix<K> aug(7, 14);
        for (int i = 0; i < 7; ++i) {
            for (int j = 0; j < 7; ++j) aug(i, j) = G(i, j);
            aug(i, 7 + i) = K(1);
        }
        if (aug.rref().size() != 7) throw std::invalid_argument("degenerate generator change");
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) S(j, i) = aug(i, 7 + j);
    }

    // Induced relations on surviving letters 1..7-d.
    std::array<int, 8> to_new{};
    for (int k = 1; k <= 7 - d; ++k) to_new[k] = k;
    for (int k = 7 - d + 1; k <= 7; ++k) to_new[k] = 0;
    // After substitution x_j -> sum_k S(j,k) y_k the letters are y-indices.
    std::vector<NcPoly<K>> induced;
    for (int i = 1; i <= 7; ++i) {
        NcPoly<K> sub = detail::substitute_linear(relation_from_mu<K>(i), S);
        NcPoly<K> rel = detail::relabel(sub, to_new);
        if (!rel.is_zero_poly()) induced.push_back(std::move(rel));
    }
    for (const NcPoly<K>& e : extra_deg2) {
        if (!e.is_zero_poly()) induced.push_back(e);
    }

    std::vector<int> letters;
    for (int k = 1; k <= 7 - d; ++k) letters.push_back(k);
    rep.surviving_letters = letters;

    std::vector<NcPoly<K>> basis = reduce_relation_basis(induced);
    RewriteSystem<K> sys = rules_from_relations(basis, letters);
    rep.confluent = is_confluent(sys);

    rep.dims.resize(n_max + 1);
    if (rep.confluent) {
        rep.method = "rewrite";
        for (int n = 0; n <= n_max; ++n) rep.dims[n] = count_normal_words(sys, n);
    } else {
        rep.method = "linear-algebra";
        for (int n = 0; n <= n_max; ++n)
            rep.dims[n] = detail::ideal_quotient_dim(basis, letters, n);
    }
    return rep;
}

// Convenience: quotient by a set of coordinate letters.
template <FieldScalar K>
QuotientHilbertReport<K> quotient_hilbert_letters(const std::vector<int>& kill, int n_max) {
    std::vector<Octonion<K>> gens;
    for (int i : kill) gens.push_back(Octonion<K>::basis(i));
    return quotient_hilbert(Subspace<K>::span(gens), n_max);
}

}  // namespace octa
