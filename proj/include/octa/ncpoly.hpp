#pragma once

// Noncommutative polynomials in x1..x7 over an exact field: a canonical map
// Word -> coefficient with zero coefficients absent.  Equality is structural.

#include <map>
#include <sstream>
#include <vector>

#include "octa/linalg.hpp"
#include "octa/word.hpp"

namespace octa {

template <FieldScalar K>
class NcPoly {
  public:
    using Terms = std::map<Word, K>;

    NcPoly() = default;

    static NcPoly zero() { return NcPoly(); }
    static NcPoly unit() { return monomial(K(1), Word::empty()); }
    static NcPoly var(int i) { return monomial(K(1), Word::single(i)); }

    static NcPoly monomial(K coeff, const Word& w) {
        NcPoly p;
        if (!is_zero(coeff)) p.terms_[w] = std::move(coeff);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    K coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? K(0) : it->second;
    }

    void add_term(const Word& w, const K& c) {
        if (is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    // Largest word in deg-lex order.
    const Word& leading_word() const {
        if (terms_.empty()) throw std::domain_error("leading word of zero polynomial");
        return terms_.rbegin()->first;
    }
    const K& leading_coeff() const {
        if (terms_.empty()) throw std::domain_error("leading coeff of zero polynomial");
        return terms_.rbegin()->second;
    }

    bool is_homogeneous(int* degree_out = nullptr) const {
        if (terms_.empty()) {
            if (degree_out) *degree_out = 0;
            return true;
        }
        int d = terms_.begin()->first.degree();
        for (const auto& [w, c] : terms_)
            if (w.degree() != d) return false;
        if (degree_out) *degree_out = d;
        return true;
    }

    NcPoly homogeneous_component(int degree) const {
        NcPoly p;
        for (const auto& [w, c] : terms_)
            if (w.degree() == degree) p.terms_[w] = c;
        return p;
    }

    friend NcPoly operator+(const NcPoly& a, const NcPoly& b) {
        NcPoly r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend NcPoly operator-(const NcPoly& a, const NcPoly& b) {
        NcPoly r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
        return r;
    }
    friend NcPoly operator-(const NcPoly& a) {
        NcPoly r;
        for (const auto& [w, c] : a.terms_) r.terms_[w] = -c;
        return r;
    }
    friend NcPoly operator*(const K& s, const NcPoly& a) {
        NcPoly r;
        if (is_zero(s)) return r;
        for (const auto& [w, c] : a.terms_) {
            K v = s * c;
            if (!is_zero(v)) r.terms_[w] = std::move(v);
        }
        return r;
    }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
        NcPoly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
        return r;
    }
    NcPoly& operator+=(const NcPoly& b) { return *this = *this + b; }
    NcPoly& operator-=(const NcPoly& b) { return *this = *this - b; }

    friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

    // Stable text form: terms ascending in the word order, "coeff*word".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            if (!first) os << " + ";
            os << scalar_str(c) << "*" << w.str();
            first = false;
        }
        return os.str();
    }

  private:
    Terms terms_;
};

// Swap the two letters of every degree-2 word and negate; fixed points of
// this map are the skew-symmetric 2-tensors.
template <FieldScalar K>
NcPoly<K> swap_and_negate(const NcPoly<K>& p) {
    NcPoly<K> r;
    for (const auto& [w, c] : p.terms()) {
        if (w.degree() != 2) throw std::invalid_argument("swap_and_negate needs degree 2");
        r.add_term(Word::of({w.letter(1), w.letter(0)}), -c);
    }
    return r;
}

// Cyclic partial derivative with respect to x_i: word w = u x_i v |-> v u.
template <FieldScalar K>
NcPoly<K> cyclic_derivative(const NcPoly<K>& p, int i) {
    NcPoly<K> r;
    for (const auto& [w, c] : p.terms())
        for (int pos = 0; pos < w.degree(); ++pos)
            if (w.letter(pos) == i)
                r.add_term(w.suffix_from(pos + 1) * w.prefix(pos), c);
    return r;
}

// Coefficient matrix of a homogeneous degree-2 polynomial: entry (i,j) is the
// coefficient of x_i x_j.
template <FieldScalar K>
Matrix<K> degree2_matrix(const NcPoly<K>& p) {
    Matrix<K> m(7, 7);
    for (const auto& [w, c] : p.terms()) {
        if (w.degree() != 2) throw std::invalid_argument("degree2_matrix needs degree 2");
        m(w.letter(0) - 1, w.letter(1) - 1) = c;
    }
    return m;
}

// A homogeneous degree-3 tensor T as the linear map V* (x) V* -> V sending
// (la, mu) to sum_w T_w x_{w0} la(x_{w1}) mu(x_{w2}); returned as the 7 x 49
// matrix over the basis pairs.
template <FieldScalar K>
Matrix<K> degree3_map_matrix(const NcPoly<K>& p) {
    Matrix<K> m(7, 49);
    for (const auto& [w, c] : p.terms()) {
        if (w.degree() != 3) throw std::invalid_argument("degree3_map_matrix needs degree 3");
        m(w.letter(0) - 1, 7 * (w.letter(1) - 1) + (w.letter(2) - 1)) = c;
    }
    return m;
}

// Rank of a homogeneous tensor of degree 2 or 3 over its coefficient field.
template <FieldScalar K>
std::size_t tensor_rank(const NcPoly<K>& p) {
    int deg = 0;
    if (!p.is_homogeneous(&deg)) throw std::invalid_argument("tensor_rank needs homogeneous input");
    if (p.is_zero_poly()) return 0;
    if (deg == 2) return rank(degree2_matrix(p));
    if (deg == 3) return rank(degree3_map_matrix(p));
    throw std::invalid_argument("tensor_rank handles degree 2 or 3");
}

// Parse the stable text form (also accepts "-", spaces, bare words, and
// coefficients without "*"), e.g. "x7*x6 - x6*x7 + 2*x1*x2".
template <FieldScalar K>
NcPoly<K> parse_poly(const std::string& text) {
    NcPoly<K> out;
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+') ++pos;
        else if (s[pos] == '-') { sign = -1; ++pos; }
        else if (!first) throw std::invalid_argument("expected + or - in polynomial");
        first = false;
        // term: [coeff][*][x<i>[*x<j>...]]
        std::string coeff;
        while (pos < s.size() && (isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            coeff += s[pos++];
        if (pos < s.size() && s[pos] == '*' && coeff.size()) ++pos;
        Word w;
        while (pos < s.size() && s[pos] == 'x') {
            ++pos;
            if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos])))
                throw std::invalid_argument("expected letter index after x");
            w.push_back(s[pos++] - '0');
            if (pos < s.size() && s[pos] == '*' && pos + 1 < s.size() && s[pos + 1] == 'x') ++pos;
        }
        if (coeff.empty() && w.degree() == 0)
            throw std::invalid_argument("empty term in polynomial");
        K c = coeff.empty() ? K(1) : K(scalar_from_str(coeff));
        if (sign < 0) c = -c;
        out.add_term(w, c);
    }
    return out;
}

}  // namespace octa
