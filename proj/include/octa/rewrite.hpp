#pragma once

// Diamond-Lemma rewriting.  Rules replace a length-2 leading word by strictly
// smaller degree-2 terms under deg-lex with x1 < ... < x7 (the only word
// order supported; confluence certificates are order specific).  Reduction
// always processes the deg-lex-largest pending word, so every word in the
// downset is handled at most once and termination is structural.

#include <algorithm>
#include <set>
#include <unordered_map>

#include "octa/ncpoly.hpp"
#include "octa/relations.hpp"

namespace octa {

template <FieldScalar K>
struct RewriteRule {
    Word lhs;        // length 2
    NcPoly<K> rhs;   // homogeneous degree 2, all words < lhs
};

enum class ReduceStrategy { leftmost, rightmost };

template <FieldScalar K>
class RewriteSystem {
  public:
    RewriteSystem() { clear_index(); }

    explicit RewriteSystem(std::vector<int> letters) : letters_(std::move(letters)) {
        std::sort(letters_.begin(), letters_.end());
        clear_index();
    }

    const std::vector<int>& letters() const { return letters_; }
    const std::vector<RewriteRule<K>>& rules() const { return rules_; }

    void add_rule(Word lhs, NcPoly<K> rhs) {
        if (lhs.degree() != 2) throw std::invalid_argument("rule lhs must have degree 2");
        if (rule_index_[lhs.letter(0)][lhs.letter(1)] >= 0)
            throw std::invalid_argument("duplicate rule lhs");
        for (const auto& [w, c] : rhs.terms())
            if (!(w < lhs)) throw std::invalid_argument("rule rhs not smaller than lhs");
        rule_index_[lhs.letter(0)][lhs.letter(1)] = static_cast<int>(rules_.size());
        rules_.push_back({lhs, std::move(rhs)});
    }

    bool forbidden(int a, int b) const { return rule_index_[a][b] >= 0; }

    std::vector<Word> forbidden_words() const {
        std::vector<Word> ws;
        for (const auto& r : rules_) ws.push_back(r.lhs);
        return ws;
    }

    const NcPoly<K>& rhs_for(int a, int b) const { return rules_[rule_index_[a][b]].rhs; }

    // leftmost (or rightmost) redex position, -1 if the word is normal
    int redex(const Word& w, ReduceStrategy strat = ReduceStrategy::leftmost) const {
        if (strat == ReduceStrategy::leftmost) {
            for (int p = 0; p + 1 < w.degree(); ++p)
                if (forbidden(w.letter(p), w.letter(p + 1))) return p;
        } else {
            for (int p = w.degree() - 2; p >= 0; --p)
                if (forbidden(w.letter(p), w.letter(p + 1))) return p;
        }
        return -1;
    }

    bool is_normal(const Word& w) const { return redex(w) < 0; }

  private:
    void clear_index() {
        for (auto& row : rule_index_)
            for (int& v : row) v = -1;
    }

    std::vector<int> letters_{1, 2, 3, 4, 5, 6, 7};
    std::vector<RewriteRule<K>> rules_;
    int rule_index_[8][8];
};

// Reduce the relation list to distinct leading words (Gaussian elimination in
// the degree-2 coefficient space, pivoting on deg-lex leading words); zero
// relations drop out.
template <FieldScalar K>
std::vector<NcPoly<K>> reduce_relation_basis(std::vector<NcPoly<K>> rels) {
    std::vector<NcPoly<K>> basis;  // pairwise distinct leading words
    for (NcPoly<K> p : rels) {
        for (;;) {
            if (p.is_zero_poly()) break;
            bool hit = false;
            for (const NcPoly<K>& q : basis)
                if (q.leading_word() == p.leading_word()) {
                    p -= (p.leading_coeff() * inverse(q.leading_coeff())) * q;
                    hit = true;
                    break;
                }
            if (!hit) break;
        }
        if (!p.is_zero_poly()) basis.push_back(std::move(p));
    }
    return basis;
}

// One rule per relation, solving for the deg-lex-maximal word.  Throws when
// two relations share a maximal word (signals bad input per the contract);
// use reduce_relation_basis first for general relation lists.
template <FieldScalar K>
RewriteSystem<K> rules_from_relations(const std::vector<NcPoly<K>>& rels,
                                      std::vector<int> letters = {1, 2, 3, 4, 5, 6, 7}) {
    RewriteSystem<K> sys(std::move(letters));
    for (const NcPoly<K>& r : rels) {
        if (r.is_zero_poly()) continue;
        int deg = 0;
        if (!r.is_homogeneous(&deg) || deg != 2)
            throw std::invalid_argument("relations must be homogeneous of degree 2");
        Word lhs = r.leading_word();
        K c = r.leading_coeff();
        NcPoly<K> rest = r - NcPoly<K>::monomial(c, lhs);
        sys.add_rule(lhs, (-inverse(c)) * rest);
    }
    return sys;
}

// Default cap on the degree of polynomials fed to the reducer; beyond this
// the downset of a word is too large to materialize and the per-degree
// automaton counting is the right tool.
inline constexpr int default_reduction_degree_cap = 10;

// Normal form: repeatedly rewrite the deg-lex-largest pending word.
template <FieldScalar K>
NcPoly<K> normal_form(const NcPoly<K>& p, const RewriteSystem<K>& sys,
                      ReduceStrategy strat = ReduceStrategy::leftmost,
                      int degree_cap = default_reduction_degree_cap) {
    for (const auto& [w, c] : p.terms())
        if (w.degree() > degree_cap) throw std::length_error("reduction degree cap exceeded");
    NcPoly<K> result;
    std::map<Word, K> pending(p.terms().begin(), p.terms().end());
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Word w = it->first;
        K c = it->second;
        pending.erase(it);
        if (is_zero(c)) continue;
        int pos = sys.redex(w, strat);
        if (pos < 0) {
            result.add_term(w, c);
            continue;
        }
        Word left = w.prefix(pos);
        Word right = w.suffix_from(pos + 2);
        const NcPoly<K>& rhs = sys.rhs_for(w.letter(pos), w.letter(pos + 1));
        for (const auto& [m, cm] : rhs.terms()) {
            Word nw = left * m * right;
            auto [jt, inserted] = pending.try_emplace(nw, c * cm);
            if (!inserted) {
                jt->second += c * cm;
                if (is_zero(jt->second)) pending.erase(jt);
            }
        }
    }
    return result;
}

template <FieldScalar K>
struct Ambiguity {
    Word overlap;            // length 3
    NcPoly<K> left_result;   // reduce the left redex first, then to normal form
    NcPoly<K> right_result;  // reduce the right redex first, then to normal form
    bool resolvable = false;
};

// All overlap ambiguities lhs1 = ab, lhs2 = bc -> overlap word abc.
template <FieldScalar K>
std::vector<Ambiguity<K>> check_all_ambiguities(const RewriteSystem<K>& sys) {
    std::vector<Ambiguity<K>> out;
    for (const auto& r1 : sys.rules())
        for (const auto& r2 : sys.rules()) {
            if (r1.lhs.letter(1) != r2.lhs.letter(0)) continue;
            Ambiguity<K> amb;
            amb.overlap = Word::of({r1.lhs.letter(0), r1.lhs.letter(1), r2.lhs.letter(1)});
            Word c = Word::single(r2.lhs.letter(1));
            Word a = Word::single(r1.lhs.letter(0));
            amb.left_result = normal_form(r1.rhs * NcPoly<K>::monomial(K(1), c), sys);
            amb.right_result = normal_form(NcPoly<K>::monomial(K(1), a) * r2.rhs, sys);
            amb.resolvable = amb.left_result == amb.right_result;
            out.push_back(std::move(amb));
        }
    return out;
}

template <FieldScalar K>
bool is_confluent(const RewriteSystem<K>& sys) {
    for (const auto& amb : check_all_ambiguities(sys))
        if (!amb.resolvable) return false;
    return true;
}

// Number of degree-n words avoiding the forbidden subwords, by the transfer
// matrix on last letters (never materializes words).
template <FieldScalar K>
BigInt count_normal_words(const RewriteSystem<K>& sys, int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    if (n == 0) return 1;
    const auto& letters = sys.letters();
    std::unordered_map<int, std::size_t> idx;
    for (std::size_t i = 0; i < letters.size(); ++i) idx[letters[i]] = i;
    std::vector<BigInt> v(letters.size(), 1);  // words of length 1 by last letter
    for (int d = 2; d <= n; ++d) {
        std::vector<BigInt> nv(letters.size(), 0);
        for (std::size_t a = 0; a < letters.size(); ++a)
            for (std::size_t b = 0; b < letters.size(); ++b)
                if (!sys.forbidden(letters[a], letters[b])) nv[b] += v[a];
        v = std::move(nv);
    }
    BigInt total = 0;
    for (const BigInt& x : v) total += x;
    return total;
}

// The normal words of the given degree in deg-lex order.
template <FieldScalar K>
std::vector<Word> enumerate_normal_words(const RewriteSystem<K>& sys, int n) {
    std::vector<Word> out;
    std::vector<Word> cur{Word::empty()};
    for (int d = 0; d < n; ++d) {
        std::vector<Word> next;
        for (const Word& w : cur)
            for (int l : sys.letters()) {
                if (w.degree() > 0 && sys.forbidden(w.letter(w.degree() - 1), l)) continue;
                Word v = w;
                v.push_back(l);
                next.push_back(v);
            }
        cur = std::move(next);
    }
    return cur;
}

// Brute-force oracle: scan every word of the degree for forbidden subwords.
template <FieldScalar K>
BigInt brute_force_normal_count(const RewriteSystem<K>& sys, int n) {
    BigInt count = 0;
    for (const Word& w : all_words(sys.letters(), n))
        if (sys.is_normal(w)) ++count;
    return count;
}

// The seven-rule system presenting the full algebra A.
template <FieldScalar K>
RewriteSystem<K> algebra_a_system() {
    std::vector<NcPoly<K>> rels;
    for (int i = 1; i <= 7; ++i) rels.push_back(relation_from_mu<K>(i));
    return rules_from_relations(rels);
}

// The one-relator subalgebra B on x1..x6 (the relation is r7).
template <FieldScalar K>
RewriteSystem<K> algebra_b_system() {
    return rules_from_relations<K>({relation_from_mu<K>(7)}, {1, 2, 3, 4, 5, 6});
}

}  // namespace octa
