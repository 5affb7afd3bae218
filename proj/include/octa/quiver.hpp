#pragma once

// The three-vertex quiver with 14 arrows and 7 relations, its path algebra E
// as a graded triangular algebra with components (k, A1, A2), the (1,1,1)
// moduli membership test (quiver relations versus Im(uv) = 0), point counts
// over small prime fields, and truncated point-module walks.

#include <optional>

#include "octa/rewrite.hpp"
#include "octa/subspace.hpp"

namespace octa {

template <FieldScalar K>
struct QuiverRep111 {
    std::array<K, 7> v;  // arrows vertex1 -> vertex2
    std::array<K, 7> u;  // arrows vertex2 -> vertex3
};

// The seven quiver relations sum_{i,j} eps(m,i,j) u_i v_j.
template <FieldScalar K>
std::array<K, 7> quiver_relation_values(const QuiverRep111<K>& rep) {
    std::array<K, 7> out{K(0), K(0), K(0), K(0), K(0), K(0), K(0)};
    for (int m = 1; m <= 7; ++m)
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 7; ++j) {
                int e = epsilon(m, i, j);
                if (e) out[m - 1] += K(e) * rep.u[i - 1] * rep.v[j - 1];
            }
    return out;
}

template <FieldScalar K>
struct MembershipReport {
    bool quiver_relations_hold = false;
    bool octonion_condition_holds = false;  // Im(uv) = 0 for the associated octonions
    bool tests_agree = false;
    bool member = false;
};

template <FieldScalar K>
MembershipReport<K> moduli_membership(const QuiverRep111<K>& rep) {
    MembershipReport<K> out;
    bool nz_u = false, nz_v = false;
    for (int i = 0; i < 7; ++i) {
        nz_u = nz_u || !is_zero(rep.u[i]);
        nz_v = nz_v || !is_zero(rep.v[i]);
    }
    if (!nz_u || !nz_v) throw std::invalid_argument("(1,1,1) representation needs u, v nonzero");

    auto vals = quiver_relation_values(rep);
    out.quiver_relations_hold = true;
    for (const K& x : vals)
        if (!is_zero(x)) out.quiver_relations_hold = false;

    // u := sum v_i o_i and v := sum u_i o_i; membership says Im(uv) = 0
    Octonion<K> uoct = Octonion<K>::imaginary(rep.v);
    Octonion<K> voct = Octonion<K>::imaginary(rep.u);
    out.octonion_condition_holds = im(uoct * voct).is_zero_elt();

    out.tests_agree = out.quiver_relations_hold == out.octonion_condition_holds;
    out.member = out.quiver_relations_hold && out.octonion_condition_holds;
    return out;
}

// ---------------------------------------------------------------------------
// Point counts over F_p (raw int64 arithmetic; p is small).

struct ModuliCountReport {
    std::int64_t p = 0;
    BigInt projective_points;      // |P^6(F_p)|
    BigInt quadric_points;         // isotropic [u]
    BigInt total;                  // sum over [u] of |P(E_u)|
    bool fibers_one_or_three = false;  // dim E_u = 3 on the quadric, 1 off it
    std::optional<BigInt> brute_force_total;
    bool membership_tests_agree = true;  // only filled by the p = 3 sweep
};

namespace detail {

// iterate normalized representatives of P^6(F_p): first nonzero coordinate 1
template <class F>
void for_each_projective_point(std::int64_t p, F&& body) {
    std::array<std::int64_t, 7> u{};
    for (int lead = 0; lead < 7; ++lead) {
        for (int i = 0; i < lead; ++i) u[i] = 0;
        u[lead] = 1;
        int free = 6 - lead;
        std::int64_t total = 1;
        for (int i = 0; i < free; ++i) total *= p;
        for (std::int64_t code = 0; code < total; ++code) {
            std::int64_t c = code;
            for (int i = lead + 1; i < 7; ++i) {
                u[i] = c % p;
                c /= p;
            }
            body(u);
        }
    }
}

inline int rank_mod_p(std::array<std::array<std::int64_t, 7>, 7> m, std::int64_t p) {
    int rank = 0;
    for (int col = 0; col < 7 && rank < 7; ++col) {
        int sel = -1;
        for (int r = rank; r < 7; ++r)
            if (m[r][col] % p != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[sel], m[rank]);
        // pivot inverse via base^(p-2)
        std::int64_t inv = 1, base = (m[rank][col] % p + p) % p;
        for (std::int64_t e = p - 2; e > 0; e >>= 1) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
        }
        for (int c = 0; c < 7; ++c) m[rank][c] = (m[rank][c] % p + p) % p * inv % p;
        for (int r = 0; r < 7; ++r) {
            if (r == rank) continue;
            std::int64_t f = (m[r][col] % p + p) % p;
            if (!f) continue;
            for (int c = 0; c < 7; ++c) m[r][c] = ((m[r][c] - f * m[rank][c]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// matrix of v |-> Im(uv) over F_p: entry (l, j) = sum_i u_i eps(i, j, l)
inline std::array<std::array<std::int64_t, 7>, 7> e_u_matrix_mod_p(
    const std::array<std::int64_t, 7>& u, std::int64_t p) {
    std::array<std::array<std::int64_t, 7>, 7> m{};
    for (int l = 1; l <= 7; ++l)
        for (int j = 1; j <= 7; ++j) {
            std::int64_t acc = 0;
            for (int i = 1; i <= 7; ++i) acc += epsilon(i, j, l) * u[i - 1];
            m[l - 1][j - 1] = (acc % p + p) % p;
        }
    return m;
}

}  // namespace detail

inline ModuliCountReport count_moduli_points(std::int64_t p, std::int64_t p_cap = 13) {
    Fp::check_modulus(p);
    if (p > p_cap) throw std::invalid_argument("prime exceeds the configured cap");
    ModuliCountReport rep;
    rep.p = p;
    rep.projective_points = 0;
    rep.quadric_points = 0;
    rep.total = 0;
    rep.fibers_one_or_three = true;

    detail::for_each_projective_point(p, [&](const std::array<std::int64_t, 7>& u) {
        rep.projective_points += 1;
        std::int64_t norm = 0;
        for (int i = 0; i < 7; ++i) norm += u[i] * u[i];
        bool isotropic = norm % p == 0;
        if (isotropic) rep.quadric_points += 1;
        int dim = 7 - detail::rank_mod_p(detail::e_u_matrix_mod_p(u, p), p);
        if (dim != (isotropic ? 3 : 1)) rep.fibers_one_or_three = false;
        BigInt fiber = 0;  // |P^{dim-1}(F_p)| = (p^dim - 1)/(p - 1)
        BigInt power = 1;
        for (int i = 0; i < dim; ++i) power *= p;
        fiber = (power - 1) / (p - 1);
        rep.total += fiber;
    });

    if (p == 3) {
        // brute force over pairs, running both membership tests independently
        std::vector<std::array<std::int64_t, 7>> points;
        detail::for_each_projective_point(p, [&](const std::array<std::int64_t, 7>& u) {
            points.push_back(u);
        });
        BigInt bf = 0;
        bool agree = true;
        for (const auto& u : points) {
            auto m = detail::e_u_matrix_mod_p(u, p);
            for (const auto& v : points) {
                // octonion route: Im(uv) with u = sum v_i o_i, v = sum u_i o_i
                bool oct_zero = true;
                for (int l = 0; l < 7; ++l) {
                    std::int64_t acc = 0;
                    for (int j = 0; j < 7; ++j) acc += m[l][j] * v[j];
                    if (acc % p != 0) oct_zero = false;
                }
                // quiver route: relations sum eps(m,i,j) u_i v_j, with the
                // index swap of the moduli identification
                bool rel_zero = true;
                for (int mm = 1; mm <= 7; ++mm) {
                    std::int64_t acc = 0;
                    for (int i = 1; i <= 7; ++i)
                        for (int j = 1; j <= 7; ++j) {
                            int e = epsilon(mm, i, j);
                            if (e) acc += e * u[i - 1] * v[j - 1];
                        }
                    if (acc % p != 0) rel_zero = false;
                }
                if (oct_zero != rel_zero) agree = false;
                if (rel_zero) bf += 1;
            }
        }
        rep.brute_force_total = bf;
        rep.membership_tests_agree = agree;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// The path algebra E as a triangular algebra with slots
//   (1,1) (2,2) (3,3) = k, (1,2) (2,3) = A1, (1,3) = A2.

template <FieldScalar K>
class TriangularAlgebraE {
  public:
    TriangularAlgebraE()
        : sys_(algebra_a_system<K>()), a2_basis_(enumerate_normal_words(sys_, 2)) {
        for (std::size_t i = 0; i < a2_basis_.size(); ++i) a2_index_[a2_basis_[i].bits] = i;
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 7; ++j) {
                NcPoly<K> nf =
                    normal_form(NcPoly<K>::monomial(K(1), Word::of({i, j})), sys_);
                for (const auto& [w, c] : nf.terms())
                    comp_[i - 1][j - 1].emplace_back(a2_index_.at(w.bits), c);
            }
    }

    std::size_t total_dim() const { return 3 + 7 + 7 + a2_basis_.size(); }
    std::size_t a2_dim() const { return a2_basis_.size(); }

    // composition A1 (x) A1 -> A2 (multiply in A, then normal form)
    Matrix<K> composition_matrix() const {
        Matrix<K> comp(a2_basis_.size(), 49);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                for (const auto& [idx, c] : comp_[i][j]) comp(idx, 7 * i + j) = c;
        return comp;
    }

    // basis indexing of E: 0,1,2 diagonal idempotents; 3..9 slot (1,2);
    // 10..16 slot (2,3); 17.. slot (1,3)
    std::size_t dim() const { return total_dim(); }

    std::vector<K> multiply(const std::vector<K>& a, const std::vector<K>& b) const {
        std::vector<K> out(dim(), K(0));
        // scalars act on everything by slot bookkeeping
        auto e = [&](const std::vector<K>& x, int i) { return x[i]; };
        // diagonal * diagonal
        for (int i = 0; i < 3; ++i) out[i] = e(a, i) * e(b, i);
        // (1,2): e1 a12 e2
        for (int i = 0; i < 7; ++i) out[3 + i] = e(a, 0) * b[3 + i] + a[3 + i] * e(b, 1);
        // (2,3)
        for (int i = 0; i < 7; ++i) out[10 + i] = e(a, 1) * b[10 + i] + a[10 + i] * e(b, 2);
        // (1,3): scalar actions plus the composition of the two A1 slots
        for (std::size_t i = 0; i < a2_basis_.size(); ++i)
            out[17 + i] = e(a, 0) * b[17 + i] + a[17 + i] * e(b, 2);
        for (int i = 0; i < 7; ++i) {
            if (is_zero(a[3 + i])) continue;
            for (int j = 0; j < 7; ++j) {
                K c = a[3 + i] * b[10 + j];
                if (is_zero(c)) continue;
                for (const auto& [idx, cc] : comp_[i][j]) out[17 + idx] += c * cc;
            }
        }
        return out;
    }

    bool associative_on_basis() const {
        const std::size_t n = dim();
        // sparse basis products once, then sparse triple comparison
        std::vector<std::vector<std::vector<std::pair<std::size_t, K>>>> table(
            n, std::vector<std::vector<std::pair<std::size_t, K>>>(n));
        auto unit_vec = [&](std::size_t i) {
            std::vector<K> v(n, K(0));
            v[i] = K(1);
            return v;
        };
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                std::vector<K> prod = multiply(unit_vec(x), unit_vec(y));
                for (std::size_t m = 0; m < n; ++m)
                    if (!is_zero(prod[m])) table[x][y].emplace_back(m, prod[m]);
            }
        std::map<std::size_t, K> left, right;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    left.clear();
                    right.clear();
                    for (const auto& [m, c] : table[x][y])
                        for (const auto& [r, cc] : table[m][z]) {
                            auto [it, fresh] = left.try_emplace(r, K(c * cc));
                            if (!fresh) it->second += c * cc;
                        }
                    for (const auto& [m, c] : table[y][z])
                        for (const auto& [r, cc] : table[x][m]) {
                            auto [it, fresh] = right.try_emplace(r, K(c * cc));
                            if (!fresh) it->second += c * cc;
                        }
                    for (auto it = left.begin(); it != left.end();)
                        it = is_zero(it->second) ? left.erase(it) : std::next(it);
                    for (auto it = right.begin(); it != right.end();)
                        it = is_zero(it->second) ? right.erase(it) : std::next(it);
                    if (!(left == right)) return false;
                }
        return true;
    }

  private:
    RewriteSystem<K> sys_;
    std::vector<Word> a2_basis_;
    std::unordered_map<std::uint64_t, std::size_t> a2_index_;
    std::array<std::array<std::vector<std::pair<std::size_t, K>>, 7>, 7> comp_;
};

struct BuildEReport {
    std::size_t a2_dim = 0;
    std::size_t total_dim = 0;
    std::size_t kernel_dim = 0;
    bool kernel_equals_relation_span = false;
    bool associative = false;
};

template <FieldScalar K>
BuildEReport build_E() {
    BuildEReport rep;
    TriangularAlgebraE<K> E;
    rep.a2_dim = E.a2_dim();
    rep.total_dim = E.total_dim();

    Matrix<K> comp = E.composition_matrix();
    auto ker = kernel_basis(comp);
    rep.kernel_dim = ker.size();

    // the kernel must be exactly the span of r_1..r_7
    auto rels = relations_from_mu<K>();
    Matrix<K> stacked(49, ker.size() + 7);
    for (std::size_t j = 0; j < ker.size(); ++j)
        for (int row = 0; row < 49; ++row) stacked(row, j) = ker[j][row];
    for (int j = 0; j < 7; ++j)
        for (const auto& [w, c] : rels[j].terms())
            stacked(7 * (w.letter(0) - 1) + (w.letter(1) - 1), ker.size() + j) = c;
    rep.kernel_equals_relation_span = ker.size() == 7 && rank(stacked) == 7;

    rep.associative = E.associative_on_basis();
    return rep;
}

// ---------------------------------------------------------------------------
// Truncated point modules: chains [u_0], [u_1], ... with Im(u_m u_{m+1}) = 0.

template <FieldScalar K>
struct WalkStep {
    bool unique = false;          // anisotropic point: the only successor is [u]
    Subspace<K> successors;       // E_{u_m}
};

template <FieldScalar K>
std::vector<WalkStep<K>> point_module_walk(const Octonion<K>& u0, int length) {
    if (!u0.is_imaginary() || u0.is_zero_elt())
        throw std::invalid_argument("walk needs a nonzero imaginary start");
    std::vector<WalkStep<K>> steps;
    Octonion<K> current = u0;
    for (int m = 0; m < length; ++m) {
        WalkStep<K> step;
        step.successors = e_u(current);
        step.unique = step.successors.dim() == 1;
        steps.push_back(step);
        if (!step.unique) break;  // branching: report the successor space and stop
        // dim-1 fiber always contains u itself, so the walk stays at [u]
    }
    return steps;
}

// Count all chains of the given length starting at [u0] over F_p.
inline BigInt count_point_module_chains(const std::array<std::int64_t, 7>& u0, std::int64_t p,
                                        int length) {
    if (length == 0) return 1;
    BigInt total = 0;
    auto m = detail::e_u_matrix_mod_p(u0, p);
    detail::for_each_projective_point(p, [&](const std::array<std::int64_t, 7>& v) {
        for (int l = 0; l < 7; ++l) {
            std::int64_t acc = 0;
            for (int j = 0; j < 7; ++j) acc += m[l][j] * v[j];
            if (acc % p != 0) return;
        }
        total += count_point_module_chains(v, p, length - 1);
    });
    return total;
}

}  // namespace octa
