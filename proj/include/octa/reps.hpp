#pragma once

// Finite-dimensional representation tooling: a 7-tuple of n x n matrices is
// an A-module iff the seven relation matrices vanish, iff the octonion
// matrix X = sum X_i o_i has Im(X^2) = 0 (both routes computed and compared).
// Also the explicit so(3,1) and differential-operator modules, the trace
// identity, Ext^1 between 1-dimensional modules, and a small module search
// over prime fields.

#include <functional>
#include <random>
#include <set>

#include "octa/linalg.hpp"
#include "octa/octonion.hpp"
#include "octa/relations.hpp"

namespace octa {

template <FieldScalar K>
struct RepAssignment {
    std::size_t n = 0;
    std::array<Matrix<K>, 8> X;  // X[1..7]; X[0] unused

    static RepAssignment zero(std::size_t n) {
        RepAssignment r;
        r.n = n;
        for (int i = 0; i <= 7; ++i) r.X[i] = Matrix<K>(n, n);
        return r;
    }
};

// r_l(X) = sum_[i,j] eps(l,i,j) X_i X_j
template <FieldScalar K>
Matrix<K> relation_matrix_value(const RepAssignment<K>& rep, int l) {
    Matrix<K> out(rep.n, rep.n);
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            int e = epsilon(l, i, j);
            if (!e) continue;
            Matrix<K> prod = rep.X[i] * rep.X[j];
            out = e > 0 ? out + prod : out - prod;
        }
    return out;
}

template <FieldScalar K>
struct ModuleWitness {
    bool is_module = false;
    int failing_relation = 0;  // 1..7 when not a module
};

template <FieldScalar K>
ModuleWitness<K> is_module(const RepAssignment<K>& rep) {
    for (int l = 1; l <= 7; ++l)
        if (!relation_matrix_value(rep, l).is_zero_matrix()) return {false, l};
    return {true, 0};
}

// ---------------------------------------------------------------------------
// Matrices with octonion entries, as 8 scalar matrices.

template <FieldScalar K>
struct OctonionMatrix {
    std::size_t n = 0;
    std::array<Matrix<K>, 8> comp;  // comp[0] real, comp[1..7] imaginary

    static OctonionMatrix zero(std::size_t n) {
        OctonionMatrix m;
        m.n = n;
        for (int i = 0; i <= 7; ++i) m.comp[i] = Matrix<K>(n, n);
        return m;
    }

    static OctonionMatrix from_assignment(const RepAssignment<K>& rep) {
        OctonionMatrix m = zero(rep.n);
        for (int i = 1; i <= 7; ++i) m.comp[i] = rep.X[i];
        return m;
    }

    friend OctonionMatrix operator*(const OctonionMatrix& a, const OctonionMatrix& b) {
        OctonionMatrix out = zero(a.n);
        // unit components
        out.comp[0] = a.comp[0] * b.comp[0];
        for (int i = 1; i <= 7; ++i) {
            out.comp[i] = out.comp[i] + a.comp[0] * b.comp[i] + a.comp[i] * b.comp[0];
            out.comp[0] = out.comp[0] - a.comp[i] * b.comp[i];
        }
        for (int r = 1; r <= 7; ++r)
            for (int s = 1; s <= 7; ++s) {
                if (r == s) continue;
                int k = line_third_point(r, s);
                Matrix<K> prod = a.comp[r] * b.comp[s];
                out.comp[k] = line_sign(r, s) > 0 ? out.comp[k] + prod : out.comp[k] - prod;
            }
        return out;
    }

    bool imaginary_part_zero() const {
        for (int i = 1; i <= 7; ++i)
            if (!comp[i].is_zero_matrix()) return false;
        return true;
    }
};

struct EquivalenceReport {
    bool routes_agree = false;      // Im(X^2) components equal the relation matrices
    bool real_part_consistent = false;  // Re(X^2) = -sum X_i^2
    bool im_square_zero = false;
    bool module = false;
    bool equivalence_holds = false;  // module <=> Im(X^2) = 0
};

template <FieldScalar K>
EquivalenceReport equivalence_check(const RepAssignment<K>& rep) {
    EquivalenceReport out;
    auto X = OctonionMatrix<K>::from_assignment(rep);
    auto X2 = X * X;
    out.routes_agree = true;
    for (int l = 1; l <= 7; ++l)
        if (!(X2.comp[l] == relation_matrix_value(rep, l))) out.routes_agree = false;
    Matrix<K> acc(rep.n, rep.n);
    for (int i = 1; i <= 7; ++i) acc = acc + rep.X[i] * rep.X[i];
    out.real_part_consistent = (X2.comp[0] + acc).is_zero_matrix();
    out.im_square_zero = X2.imaginary_part_zero();
    out.module = is_module(rep).is_module;
    out.equivalence_holds = out.routes_agree && (out.module == out.im_square_zero);
    return out;
}

// ---------------------------------------------------------------------------
// Explicit modules.

// x4,x5 -> rotations, x6,x7 -> boosts in so(3,1) acting on k^4; x1,x2,x3 -> 0.
template <FieldScalar K>
RepAssignment<K> so31_representation() {
    auto rep = RepAssignment<K>::zero(4);
    auto E = [&](int i, int j) {
        Matrix<K> m(4, 4);
        m(i - 1, j - 1) = K(1);
        return m;
    };
    rep.X[4] = E(2, 3) - E(3, 2);  // A1
    rep.X[5] = E(3, 1) - E(1, 3);  // A2
    rep.X[6] = E(1, 4) + E(4, 1);  // B1
    rep.X[7] = E(2, 4) + E(4, 2);  // B2
    return rep;
}

// Dimension of the unital matrix algebra generated by the images.
template <FieldScalar K>
std::size_t generated_algebra_dim(const RepAssignment<K>& rep) {
    const std::size_t n = rep.n;
    auto flatten = [&](const Matrix<K>& m) {
        std::vector<K> v(n * n, K(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v[n * i + j] = m(i, j);
        return v;
    };
    std::vector<Matrix<K>> basis{Matrix<K>::identity(n)};
    for (;;) {
        Matrix<K> span = from_columns(n * n, [&] {
            std::vector<std::vector<K>> cols;
            for (const auto& m : basis) cols.push_back(flatten(m));
            return cols;
        }());
        std::size_t before = basis.size();
        std::vector<Matrix<K>> next = basis;
        for (const auto& m : basis)
            for (int i = 1; i <= 7; ++i) {
                Matrix<K> cand = m * rep.X[i];
                if (!in_column_span(span, flatten(cand))) {
                    next.push_back(cand);
                    std::vector<std::vector<K>> cols;
                    for (const auto& mm : next) cols.push_back(flatten(mm));
                    span = from_columns(n * n, cols);
                }
            }
        basis = std::move(next);
        if (basis.size() == before) return basis.size();
    }
}

// The degree-n component of k[x,y] as a module over A via differential
// operators: x4 -> -i x d/dy, x5 -> x d/dy, x6 -> i y d/dx, x7 -> y d/dx.
inline RepAssignment<QI> diffop_rep(int n) {
    auto rep = RepAssignment<QI>::zero(n + 1);
    Matrix<QI> E(n + 1, n + 1), F(n + 1, n + 1);
    for (int m = 1; m <= n; ++m) E(m - 1, m) = QI(Rational(m));          // x d/dy
    for (int m = 0; m < n; ++m) F(m + 1, m) = QI(Rational(n - m));       // y d/dx
    const QI i = QI::i();
    rep.X[4] = (-i) * E;
    rep.X[5] = E;
    rep.X[6] = i * F;
    rep.X[7] = F;
    return rep;
}

// Every cyclic vector generates: the orbit span of each basis vector is full.
template <FieldScalar K>
bool orbit_spans(const RepAssignment<K>& rep) {
    const std::size_t n = rep.n;
    for (std::size_t start = 0; start < n; ++start) {
        std::vector<std::vector<K>> vecs;
        std::vector<K> e(n, K(0));
        e[start] = K(1);
        vecs.push_back(e);
        for (std::size_t at = 0; at < vecs.size() && vecs.size() < n; ++at) {
            std::vector<K> v = vecs[at];
            for (int i = 1; i <= 7; ++i) {
                std::vector<K> w(n, K(0));
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) w[r] += rep.X[i](r, c) * v[c];
                if (!in_column_span(from_columns(n, vecs), w)) vecs.push_back(w);
            }
        }
        if (rank(from_columns(n, vecs)) != n) return false;
    }
    return true;
}

// Dimension of the commutant {C : [C, X_i] = 0 for all i}.
template <FieldScalar K>
std::size_t commutant_dim(const RepAssignment<K>& rep) {
    const std::size_t n = rep.n;
    // unknowns C(a,b); equations per i and entry (r,c)
    Matrix<K> sys(7 * n * n, n * n);
    std::size_t row = 0;
    for (int i = 1; i <= 7; ++i) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                // (C X_i - X_i C)(r,c) = sum_a C(r,a) X_i(a,c) - X_i(r,a) C(a,c)
                for (std::size_t a = 0; a < n; ++a) {
                    sys(row, n * r + a) += rep.X[i](a, c);
                    sys(row, n * a + c) -= rep.X[i](r, a);
                }
                ++row;
            }
    }
    return kernel_basis(sys).size();
}

// ---------------------------------------------------------------------------
// Trace identity on modules.

template <FieldScalar K>
K trace(const Matrix<K>& m) {
    K t(0);
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

// Evaluate a free polynomial on the matrices of an assignment.
template <FieldScalar K>
Matrix<K> evaluate_poly(const RepAssignment<K>& rep, const NcPoly<K>& p) {
    Matrix<K> out(rep.n, rep.n);
    for (const auto& [w, c] : p.terms()) {
        Matrix<K> prod = Matrix<K>::identity(rep.n);
        for (int pos = 0; pos < w.degree(); ++pos) prod = prod * rep.X[w.letter(pos)];
        for (std::size_t r = 0; r < rep.n; ++r)
            for (std::size_t col = 0; col < rep.n; ++col) out(r, col) += c * prod(r, col);
    }
    return out;
}

struct TraceIdentityReport {
    bool is_module = false;
    bool commutator_sum_zero = false;   // sum_{p<q} Tr([X_p,X_q]^2) = 0
    bool relation_sum_zero = false;     // sum_i Tr(r_i(X)^2) = 0
    bool sums_equal = false;
    bool decomposition_holds = false;     // sum r_i^2 = Q + d as free polynomials
    bool four_point_traces_zero = false;  // Tr(d_pqrs) = 0 per non-colinear 4-set
};

template <FieldScalar K>
TraceIdentityReport trace_identity_check(const RepAssignment<K>& rep) {
    TraceIdentityReport out;
    out.is_module = is_module(rep).is_module;

    auto comm = [&](int p, int q) { return rep.X[p] * rep.X[q] - rep.X[q] * rep.X[p]; };
    K s1(0);
    for (int p = 1; p <= 7; ++p)
        for (int q = p + 1; q <= 7; ++q) {
            Matrix<K> c = comm(p, q);
            s1 += trace(Matrix<K>(c * c));
        }
    K s2(0);
    for (int l = 1; l <= 7; ++l) {
        Matrix<K> r = relation_matrix_value(rep, l);
        s2 += trace(Matrix<K>(r * r));
    }
    out.commutator_sum_zero = is_zero(s1);
    out.relation_sum_zero = is_zero(s2);
    out.sums_equal = s1 == s2;

    // d := sum_i r_i^2 - Q consists exactly of the words with four distinct
    // letters; grouped by letter set, each group must have zero trace on the
    // module
    auto rels = relations_from_mu<K>();
    NcPoly<K> d;
    for (const auto& r : rels) d += r * r;
    d -= element_q<K>();
    std::map<int, NcPoly<K>> by_subset;  // bitmask of letters
    out.decomposition_holds = true;
    for (const auto& [w, c] : d.terms()) {
        int mask = 0;
        for (int pos = 0; pos < w.degree(); ++pos) mask |= 1 << w.letter(pos);
        if (__builtin_popcount(static_cast<unsigned>(mask)) != 4)
            out.decomposition_holds = false;
        by_subset[mask].add_term(w, c);
    }
    out.four_point_traces_zero = true;
    for (const auto& [mask, part] : by_subset)
        if (!is_zero(trace(evaluate_poly(rep, part)))) out.four_point_traces_zero = false;
    return out;
}

// ---------------------------------------------------------------------------
// Ext^1 between 1-dimensional modules lambda, mu: the strictly upper
// triangular parts nu of a 2-dimensional extension satisfy
// Im(lambda nu) + Im(nu mu) = 0; extensions modulo coboundaries.

struct Ext1Report {
    std::size_t cocycle_dim = 0;
    std::size_t coboundary_dim = 0;
    std::size_t ext1_dim = 0;
};

template <FieldScalar K>
Ext1Report ext1_vanishing_check(const std::array<K, 7>& lambda, const std::array<K, 7>& mu) {
    Matrix<K> sys(7, 7);
    for (int l = 1; l <= 7; ++l)
        for (int a = 1; a <= 7; ++a) {
            K coeff(0);
            for (int i = 1; i <= 7; ++i) {
                int e1 = epsilon(l, i, a);
                if (e1) coeff += K(e1) * lambda[i - 1];
                int e2 = epsilon(l, a, i);
                if (e2) coeff += K(e2) * mu[i - 1];
            }
            sys(l - 1, a - 1) = coeff;
        }
    Ext1Report rep;
    rep.cocycle_dim = kernel_basis(sys).size();
    bool distinct = false;
    for (int i = 0; i < 7; ++i)
        if (!(lambda[i] == mu[i])) distinct = true;
    rep.coboundary_dim = distinct ? 1 : 0;
    rep.ext1_dim = rep.cocycle_dim - rep.coboundary_dim;
    return rep;
}

// ---------------------------------------------------------------------------
// Search for small modules over F_p.

struct SearchResult {
    std::vector<std::vector<std::int64_t>> solutions;  // canonical encodings
    std::size_t modules_found = 0;
    std::size_t commuting = 0;
    bool budget_exhausted = false;
};

namespace detail {

inline std::vector<std::int64_t> encode_rep(const RepAssignment<Fp>& rep) {
    std::vector<std::int64_t> enc;
    for (int i = 1; i <= 7; ++i)
        for (std::size_t r = 0; r < rep.n; ++r)
            for (std::size_t c = 0; c < rep.n; ++c) enc.push_back(rep.X[i](r, c).v);
    return enc;
}

// canonical form under simultaneous conjugation by permutation and diagonal
// matrices (scalars act trivially, so diagonals are normalized to lead with 1)
inline std::vector<std::int64_t> canonical_encoding(const RepAssignment<Fp>& rep,
                                                    std::int64_t p) {
    const std::size_t n = rep.n;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::int64_t> best;
    do {
        // diagonal entries d_0 = 1, d_i in F_p^*
        std::vector<std::int64_t> diag(n, 1);
        std::function<void(std::size_t)> rec = [&](std::size_t pos) {
            if (pos == n) {
                RepAssignment<Fp> conj = RepAssignment<Fp>::zero(n);
                for (int i = 1; i <= 7; ++i)
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t c = 0; c < n; ++c) {
                            // (D P X P^{-1} D^{-1})(r,c)
                            Fp v = rep.X[i](perm[r], perm[c]);
                            Fp scaled = Fp(diag[r], p) * v * inverse(Fp(diag[c], p));
                            conj.X[i](r, c) = scaled;
                        }
                auto enc = encode_rep(conj);
                if (best.empty() || enc < best) best = enc;
                return;
            }
            for (std::int64_t d = 1; d < p; ++d) {
                diag[pos] = d;
                rec(pos + 1);
            }
        };
        if (n <= 1)
            rec(n);
        else {
            diag[0] = 1;
            rec(1);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace detail

// Exhaustive over diagonal assignments, or randomized within a sample budget.
inline SearchResult search_small_modules(std::size_t n, std::int64_t p, std::size_t budget,
                                         bool diagonal_only = false, unsigned seed = 1) {
    if (n > 3) throw std::invalid_argument("search capped at n <= 3");
    Fp::check_modulus(p);
    SearchResult out;
    std::set<std::vector<std::int64_t>> seen;

    auto consider = [&](const RepAssignment<Fp>& rep) {
        if (!is_module(rep).is_module) return;
        ++out.modules_found;
        bool commuting = true;
        for (int i = 1; i <= 7; ++i)
            for (int j = i + 1; j <= 7; ++j)
                if (!(rep.X[i] * rep.X[j] == rep.X[j] * rep.X[i])) commuting = false;
        if (commuting) ++out.commuting;
        auto canon = n <= 2 ? detail::canonical_encoding(rep, p) : detail::encode_rep(rep);
        if (seen.insert(canon).second) out.solutions.push_back(canon);
    };

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> entry(0, p - 1);
    if (diagonal_only) {
        // enumerate diagonal tuples up to the budget
        std::size_t total = 1;
        for (std::size_t i = 0; i < 7 * n; ++i) total *= p;
        std::size_t limit = std::min(total, budget);
        out.budget_exhausted = limit < total;
        for (std::size_t idx = 0; idx < limit; ++idx) {
            std::size_t v = idx;
            auto rep = RepAssignment<Fp>::zero(n);
            for (int i = 1; i <= 7; ++i)
                for (std::size_t d = 0; d < n; ++d) {
                    rep.X[i](d, d) = Fp(static_cast<std::int64_t>(v % p), p);
                    v /= p;
                }
            consider(rep);
        }
    } else {
        out.budget_exhausted = true;
        for (std::size_t trial = 0; trial < budget; ++trial) {
            auto rep = RepAssignment<Fp>::zero(n);
            switch (trial % 3) {
                case 0:  // fully random
                    for (int i = 1; i <= 7; ++i)
                        for (std::size_t r = 0; r < n; ++r)
                            for (std::size_t c = 0; c < n; ++c)
                                rep.X[i](r, c) = Fp(entry(rng), p);
                    break;
                case 1: {  // commuting: polynomials in one random matrix
                    Matrix<Fp> base(n, n);
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t c = 0; c < n; ++c) base(r, c) = Fp(entry(rng), p);
                    for (int i = 1; i <= 7; ++i) {
                        Matrix<Fp> m = Matrix<Fp>::identity(n);
                        Matrix<Fp> acc(n, n);
                        for (int d = 0; d < 2; ++d) {
                            Fp coeff(entry(rng), p);
                            for (std::size_t r = 0; r < n; ++r)
                                for (std::size_t c = 0; c < n; ++c)
                                    acc(r, c) += coeff * m(r, c);
                            m = m * base;
                        }
                        rep.X[i] = acc;
                    }
                    break;
                }
                default:  // diagonal
                    for (int i = 1; i <= 7; ++i)
                        for (std::size_t d = 0; d < n; ++d)
                            rep.X[i](d, d) = Fp(entry(rng), p);
            }
            consider(rep);
        }
    }
    return out;
}

}  // namespace octa
