#pragma once

// Structural facts about A: the one-relator subalgebra B on x1..x6, the
// derivation delta with A = B[x7; delta], the 21 degree-preserving
// derivations delta_jk spanning a 14-dimensional bracket-closed space, and
// the invariant elements s2 = x1^2+...+x7^2 and Q = sum [x_p,x_q]^2.

#include <optional>

#include "octa/quotient.hpp"
#include "octa/rewrite.hpp"
#include "octa/series.hpp"

namespace octa {

// Apply a derivation given by generator images (Leibniz on every letter of
// every word).  Images may be of any degree.
template <FieldScalar K>
NcPoly<K> apply_derivation(const std::array<NcPoly<K>, 8>& image, const NcPoly<K>& p) {
    NcPoly<K> out;
    for (const auto& [w, c] : p.terms())
        for (int pos = 0; pos < w.degree(); ++pos) {
            const NcPoly<K>& img = image[w.letter(pos)];
            if (img.is_zero_poly()) continue;
            NcPoly<K> left = NcPoly<K>::monomial(c, w.prefix(pos));
            NcPoly<K> right = NcPoly<K>::monomial(K(1), w.suffix_from(pos + 1));
            out += left * img * right;
        }
    return out;
}

// ---------------------------------------------------------------------------
// B = k<x1..x6> / (r7), an Ore presentation of A.

template <FieldScalar K>
struct AlgebraB {
    RewriteSystem<K> system = algebra_b_system<K>();
    NcPoly<K> relation = relation_from_mu<K>(7);
};

struct BReport {
    bool hilbert_matches = false;       // counts of (1-6t+t^2)^{-1}
    bool normal_words_included = false; // B-normal words are A-normal
    std::vector<BigInt> dims;
};

template <FieldScalar K>
BReport build_b_report(int cap = 8) {
    BReport rep;
    AlgebraB<K> B;
    auto asys = algebra_a_system<K>();
    TruncSeries hb = hilbert_series_B(cap);
    rep.hilbert_matches = true;
    for (int n = 0; n <= cap; ++n) {
        BigInt c = count_normal_words(B.system, n);
        rep.dims.push_back(c);
        if (c != hb.at(n)) rep.hilbert_matches = false;
    }
    rep.normal_words_included = true;
    for (int n = 0; n <= 4; ++n)
        for (const Word& w : enumerate_normal_words(B.system, n))
            if (!asys.is_normal(w)) rep.normal_words_included = false;
    return rep;
}

// The derivation of the free algebra on x1..x6 inducing the Ore structure.
template <FieldScalar K>
std::array<NcPoly<K>, 8> ore_delta_images() {
    auto comm = [](int i, int j) {
        return NcPoly<K>::var(i) * NcPoly<K>::var(j) - NcPoly<K>::var(j) * NcPoly<K>::var(i);
    };
    std::array<NcPoly<K>, 8> im;
    im[1] = comm(4, 2) + comm(3, 5);
    im[2] = comm(1, 4) + comm(3, 6);
    im[3] = comm(5, 1) + comm(6, 2);
    im[4] = comm(2, 1) + comm(5, 6);
    im[5] = comm(1, 3) + comm(6, 4);
    im[6] = comm(2, 3) + comm(4, 5);
    return im;
}

struct OreReport {
    bool delta_kills_b_relation = false;      // as a free-algebra identity
    bool relations_match = false;             // [x7,x_i] - delta(x_i) = +- r_{j(i)}
    std::array<int, 7> matched_relation{};    // j(i), 1-based; 0 unused
    std::array<int, 7> matched_sign{};
    bool matching_is_bijection = false;
    bool r7_is_b_relation = false;
    bool leibniz_sampled = false;
    bool hilbert_ore_identity = false;        // H_A = (1-t)^{-1} H_B through cap
};

template <FieldScalar K>
OreReport ore_delta_check(int cap = 10, unsigned seed = 20110704) {
    OreReport rep;
    auto delta = ore_delta_images<K>();
    auto rels = relations_from_mu<K>();
    AlgebraB<K> B;

    rep.delta_kills_b_relation = apply_derivation(delta, B.relation).is_zero_poly();
    rep.r7_is_b_relation = rels[6] == B.relation;

    rep.relations_match = true;
    std::array<bool, 7> used{};
    for (int i = 1; i <= 6; ++i) {
        NcPoly<K> lhs = NcPoly<K>::var(7) * NcPoly<K>::var(i) -
                        NcPoly<K>::var(i) * NcPoly<K>::var(7) - delta[i];
        bool found = false;
        for (int j = 1; j <= 6 && !found; ++j) {
            if (lhs == rels[j - 1]) {
                rep.matched_relation[i] = j;
                rep.matched_sign[i] = 1;
                found = true;
                used[j] = true;
            } else if (lhs == -rels[j - 1]) {
                rep.matched_relation[i] = j;
                rep.matched_sign[i] = -1;
                found = true;
                used[j] = true;
            }
        }
        if (!found) rep.relations_match = false;
    }
    rep.matching_is_bijection = true;
    for (int j = 1; j <= 6; ++j)
        if (!used[j]) rep.matching_is_bijection = false;

    // Leibniz rule on random pairs in the free algebra on x1..x6
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> letter(1, 6), len(1, 3), coef(-4, 4);
    auto rand_poly = [&] {
        NcPoly<K> p;
        for (int t = 0; t < 3; ++t) {
            Word w;
            int L = len(rng);
            for (int s = 0; s < L; ++s) w.push_back(letter(rng));
            p.add_term(w, K(coef(rng)));
        }
        return p;
    };
    rep.leibniz_sampled = true;
    for (int trial = 0; trial < 200; ++trial) {
        NcPoly<K> a = rand_poly(), b = rand_poly();
        NcPoly<K> lhs = apply_derivation(delta, a * b);
        NcPoly<K> rhs = apply_derivation(delta, a) * b + a * apply_derivation(delta, b);
        if (!(lhs == rhs)) rep.leibniz_sampled = false;
    }

    auto asys = algebra_a_system<K>();
    TruncSeries hb = hilbert_series_B(cap);
    rep.hilbert_ore_identity = true;
    BigInt acc = 0;
    for (int n = 0; n <= cap; ++n) {
        acc += hb.at(n);
        if (count_normal_words(asys, n) != acc) rep.hilbert_ore_identity = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// The 21 degree-preserving derivations delta_jk, one per arrow j -> k of the
// oriented Fano plane.  With i the third point of the line jk and the other
// two lines through i written ipq and irs so that jpr is again directed:
//   delta(x_i) = delta(x_j) = delta(x_k) = 0,
//   delta(x_p) = x_q, delta(x_q) = -x_p, delta(x_r) = -x_s, delta(x_s) = x_r.

struct DerivationLabel {
    int j = 0, k = 0;  // the arrow
    int i = 0, p = 0, q = 0, r = 0, s = 0;
};

template <FieldScalar K>
struct GradedDerivation {
    DerivationLabel label;
    Matrix<K> matrix{7, 7};  // delta(x_m) = sum_l matrix(l-1, m-1) x_l
};

inline DerivationLabel derivation_label(int j, int k) {
    if (line_sign(j, k) == 0) throw std::invalid_argument("jk is not on a line");
    DerivationLabel lab;
    lab.j = j;
    lab.k = k;
    lab.i = line_third_point(j, k);
    if (epsilon(lab.i, j, k) != 1) throw std::invalid_argument("jk is not an arrow");
    // the other two directed lines through i, rotated to start at i
    std::vector<std::pair<int, int>> others;
    for (const auto& ln : fano_lines) {
        int a = ln[0], b = ln[1], c = ln[2];
        for (int rot = 0; rot < 3; ++rot) {
            if (a == lab.i && !(b == j && c == k)) others.emplace_back(b, c);
            int t = a;
            a = b;
            b = c;
            c = t;
        }
    }
    if (others.size() != 2) throw std::logic_error("expected two other lines through i");
    // exactly one ordering makes jpr a directed line
    auto [p1, q1] = others[0];
    auto [p2, q2] = others[1];
    bool first = epsilon(lab.j, p1, p2) == 1;
    bool second = epsilon(lab.j, p2, p1) == 1;
    if (first == second) throw std::logic_error("labelling not unique");
    if (first) {
        lab.p = p1; lab.q = q1; lab.r = p2; lab.s = q2;
    } else {
        lab.p = p2; lab.q = q2; lab.r = p1; lab.s = q1;
    }
    return lab;
}

template <FieldScalar K>
GradedDerivation<K> build_derivation(int j, int k) {
    GradedDerivation<K> d;
    d.label = derivation_label(j, k);
    d.matrix(d.label.q - 1, d.label.p - 1) = K(1);
    d.matrix(d.label.p - 1, d.label.q - 1) = K(-1);
    d.matrix(d.label.s - 1, d.label.r - 1) = K(-1);
    d.matrix(d.label.r - 1, d.label.s - 1) = K(1);
    return d;
}

template <FieldScalar K>
std::vector<GradedDerivation<K>> build_derivations() {
    std::vector<GradedDerivation<K>> out;
    for (const auto& [j, k] : fano_arrows()) out.push_back(build_derivation<K>(j, k));
    return out;
}

// delta applied to a degree-2 polynomial, through the matrix action on letters.
template <FieldScalar K>
NcPoly<K> apply_linear_derivation(const Matrix<K>& m, const NcPoly<K>& p) {
    std::array<NcPoly<K>, 8> image;
    for (int col = 1; col <= 7; ++col)
        for (int row = 1; row <= 7; ++row)
            if (!is_zero(m(row - 1, col - 1)))
                image[col] += m(row - 1, col - 1) * NcPoly<K>::var(row);
    return apply_derivation(image, p);
}

struct DerivationsReport {
    bool all_preserve_relation_space = false;  // delta(R) in span R, 21 x 7 solves
    bool seven_linear_relations = false;       // sum over the arrows at a point is 0
    std::size_t span_dim = 0;                  // expected 14
    bool bracket_closed = false;
    bool so3_triples = false;                  // [d_ab, d_bc] = 2 d_ca on every line
    int min_poly_degree = 0;                   // of a seeded random span element
};

template <FieldScalar K>
DerivationsReport derivations_report(unsigned seed = 7) {
    DerivationsReport rep;
    auto ders = build_derivations<K>();
    auto rels = relations_from_mu<K>();

    // membership machinery: relation coefficient vectors as a 49 x 7 matrix
    auto flatten2 = [](const NcPoly<K>& p) {
        std::vector<K> v(49, K(0));
        for (const auto& [w, c] : p.terms()) v[7 * (w.letter(0) - 1) + (w.letter(1) - 1)] = c;
        return v;
    };
    Matrix<K> relmat(49, 7);
    for (int j = 0; j < 7; ++j) {
        auto v = flatten2(rels[j]);
        for (int row = 0; row < 49; ++row) relmat(row, j) = v[row];
    }

    rep.all_preserve_relation_space = true;
    for (const auto& d : ders)
        for (int i = 0; i < 7; ++i) {
            NcPoly<K> img = apply_linear_derivation(d.matrix, rels[i]);
            if (!in_column_span(relmat, flatten2(img))) rep.all_preserve_relation_space = false;
        }

    // one linear relation per point: the three arrows whose line-third is i sum to zero
    rep.seven_linear_relations = true;
    for (int i = 1; i <= 7; ++i) {
        Matrix<K> sum(7, 7);
        for (const auto& d : ders)
            if (d.label.i == i) sum = sum + d.matrix;
        if (!sum.is_zero_matrix()) rep.seven_linear_relations = false;
    }

    // span dimension and bracket closure
    auto flatten_matrix = [](const Matrix<K>& m) {
        std::vector<K> v(49, K(0));
        for (int a = 0; a < 7; ++a)
            for (int b = 0; b < 7; ++b) v[7 * a + b] = m(a, b);
        return v;
    };
    Matrix<K> span(49, ders.size());
    for (std::size_t c = 0; c < ders.size(); ++c) {
        auto v = flatten_matrix(ders[c].matrix);
        for (int row = 0; row < 49; ++row) span(row, c) = v[row];
    }
    rep.span_dim = rank(span);

    auto bracket = [](const Matrix<K>& a, const Matrix<K>& b) { return a * b - b * a; };
    rep.bracket_closed = true;
    for (std::size_t a = 0; a < ders.size(); ++a)
        for (std::size_t b = a + 1; b < ders.size(); ++b)
            if (!in_column_span(span, flatten_matrix(bracket(ders[a].matrix, ders[b].matrix))))
                rep.bracket_closed = false;

    // so(3) triples along each directed line
    auto find = [&](int j, int k) -> const Matrix<K>& {
        for (const auto& d : ders)
            if (d.label.j == j && d.label.k == k) return d.matrix;
        throw std::logic_error("missing derivation");
    };
    rep.so3_triples = true;
    for (const auto& ln : fano_lines) {
        int a = ln[0], b = ln[1], c = ln[2];
        const K two = K(2);
        if (!(bracket(find(a, b), find(b, c)) == two * find(c, a) &&
              bracket(find(b, c), find(c, a)) == two * find(a, b) &&
              bracket(find(c, a), find(a, b)) == two * find(b, c)))
            rep.so3_triples = false;
    }

    // minimal polynomial degree of a seeded random element of the span
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int attempt = 0; attempt < 10; ++attempt) {
        Matrix<K> T(7, 7);
        for (const auto& d : ders) {
            K c = K(coef(rng));
            for (int a = 0; a < 7; ++a)
                for (int b = 0; b < 7; ++b) T(a, b) += c * d.matrix(a, b);
        }
        // powers I, T, ..., T^deg flattened; min poly degree = first dependency
        std::vector<std::vector<K>> pows;
        Matrix<K> P = Matrix<K>::identity(7);
        int deg = 0;
        for (int k = 0; k <= 7; ++k) {
            pows.push_back(flatten_matrix(P));
            Matrix<K> stack(49, pows.size());
            for (std::size_t cix = 0; cix < pows.size(); ++cix)
                for (int row = 0; row < 49; ++row) stack(row, cix) = pows[cix][row];
            if (rank(stack) < pows.size()) {
                deg = static_cast<int>(pows.size()) - 1;
                break;
            }
            P = P * T;
        }
        rep.min_poly_degree = std::max(rep.min_poly_degree, deg);
        if (rep.min_poly_degree == 7) break;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Invariant elements.

// Rank inputs consumed by the no-normal-elements argument: every defining
// relation has rank 6, random combinations over Q stay at rank 6 (sampled),
// and the split direction o6 - i o7 gives a rank-4 element over Q(i).
struct RankFactsReport {
    bool defining_relations_rank_6 = false;
    std::size_t sampled_min_rank = 0;
    std::size_t sampled_max_rank = 0;
    std::size_t samples = 0;
    std::size_t witness_rank_over_qi = 0;
    bool zero_has_rank_0 = false;
};

inline RankFactsReport rank_facts_report(std::size_t samples = 1000, unsigned seed = 20110704) {
    RankFactsReport rep;
    auto rels = relations_from_mu<Rational>();
    rep.defining_relations_rank_6 = true;
    for (const auto& r : rels)
        if (tensor_rank(r) != 6) rep.defining_relations_rank_6 = false;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    auto mr = min_rank_in_relation_space<Rational>(samples, [&] {
        for (;;) {
            Octonion<Rational> u;
            for (int i = 1; i <= 7; ++i) u.c[i] = Rational(entry(rng));
            if (!u.is_zero_elt()) return u;
        }
    });
    rep.samples = mr.samples;
    rep.sampled_min_rank = mr.min_rank_seen;
    rep.sampled_max_rank = mr.max_rank_seen;
    rep.witness_rank_over_qi = rank(relation_matrix(rank4_witness_direction<QI>()));
    rep.zero_has_rank_0 = tensor_rank(NcPoly<Rational>()) == 0;
    return rep;
}

struct InvariantsReport {
    bool s2_killed_by_all = false;
    bool q_killed_by_all = false;
    bool q_nonzero_in_a = false;
    bool q_lies_in_b = false;  // its normal form avoids the letter x7
    std::string q_normal_form;
};

template <FieldScalar K>
InvariantsReport invariants_check() {
    InvariantsReport rep;
    auto sys = algebra_a_system<K>();
    auto ders = build_derivations<K>();
    NcPoly<K> s2 = sum_of_squares<K>();
    NcPoly<K> q = element_q<K>();

    rep.s2_killed_by_all = true;
    rep.q_killed_by_all = true;
    for (const auto& d : ders) {
        if (!normal_form(apply_linear_derivation(d.matrix, s2), sys).is_zero_poly())
            rep.s2_killed_by_all = false;
        if (!normal_form(apply_linear_derivation(d.matrix, q), sys).is_zero_poly())
            rep.q_killed_by_all = false;
    }

    NcPoly<K> nf = normal_form(q, sys);
    rep.q_nonzero_in_a = !nf.is_zero_poly();
    rep.q_lies_in_b = true;
    for (const auto& [w, c] : nf.terms())
        for (int pos = 0; pos < w.degree(); ++pos)
            if (w.letter(pos) == 7) rep.q_lies_in_b = false;
    rep.q_normal_form = nf.str();
    return rep;
}

}  // namespace octa
