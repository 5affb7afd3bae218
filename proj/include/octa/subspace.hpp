#pragma once

// Subspaces of Im O stored as reduced column-echelon exact matrices, so
// subspace equality is representation equality.  Classification tags follow
// the octonion geometry: isotropic, null, closed (k+L a subalgebra),
// associative 3-planes and co-associative 4-planes.

#include <vector>

#include "octa/octonion.hpp"

namespace octa {

template <FieldScalar K>
class Subspace {
  public:
    Subspace() = default;

    static Subspace span(const std::vector<Octonion<K>>& gens, bool require_independent = false) {
        Matrix<K> m(7, gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (!gens[j].is_imaginary())
                throw std::invalid_argument("subspace generators must be imaginary");
            for (int i = 0; i < 7; ++i) m(i, j) = gens[j].c[i + 1];
        }
        // reduced column echelon = rref of the transpose
        Matrix<K> t = m.transposed();
        std::vector<std::size_t> pivots = t.rref();
        if (require_independent && pivots.size() != gens.size())
            throw std::invalid_argument("dependent basis vectors");
        Subspace s;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            std::array<K, 7> row{};
            for (int j = 0; j < 7; ++j) row[j] = t(r, j);
            s.basis_.push_back(Octonion<K>::imaginary(row));
        }
        return s;
    }

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Octonion<K>>& basis() const { return basis_; }

    bool contains(const Octonion<K>& u) const {
        if (!u.is_imaginary()) return false;
        Matrix<K> m(7, basis_.size());
        std::vector<K> b(7);
        for (std::size_t j = 0; j < basis_.size(); ++j)
            for (int i = 0; i < 7; ++i) m(i, j) = basis_[j].c[i + 1];
        for (int i = 0; i < 7; ++i) b[i] = u.c[i + 1];
        return in_column_span(m, b);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.dim() == b.dim() &&
               [&] {
                   for (int i = 0; i < a.dim(); ++i)
                       if (!(a.basis_[i] == b.basis_[i])) return false;
                   return true;
               }();
    }

    Subspace orthogonal() const {
        // {o_1..o_7} is orthonormal, so this is the kernel of the coefficient rows.
        Matrix<K> m(basis_.size(), 7);
        for (std::size_t r = 0; r < basis_.size(); ++r)
            for (int j = 0; j < 7; ++j) m(r, j) = basis_[r].c[j + 1];
        std::vector<Octonion<K>> gens;
        for (auto& v : kernel_basis(std::move(m))) {
            std::array<K, 7> a{};
            for (int i = 0; i < 7; ++i) a[i] = v[i];
            gens.push_back(Octonion<K>::imaginary(a));
        }
        return span(gens);
    }

  private:
    std::vector<Octonion<K>> basis_;
};

template <FieldScalar K>
struct SubspaceClassification {
    int dim = 0;
    bool isotropic = false;      // <L,L> = 0
    bool null = false;           // L^2 = 0
    bool closed = false;         // k + L is a subalgebra
    bool form_nondegenerate = false;
    bool associative = false;    // dim 3: closed, form nondegenerate
    bool co_associative = false; // dim 4: orthogonal is associative
};

template <FieldScalar K>
SubspaceClassification<K> subspace_classify(const Subspace<K>& L) {
    SubspaceClassification<K> out;
    const auto& b = L.basis();
    out.dim = L.dim();

    Matrix<K> gram(b.size(), b.size());
    bool all_products_zero = true;
    bool closed = true;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            gram(i, j) = form(b[i], b[j]);
            Octonion<K> p = b[i] * b[j];
            if (!p.is_zero_elt()) all_products_zero = false;
            if (!L.contains(im(p))) closed = false;  // k + L closed <=> Im(L·L) in L
        }
    out.isotropic = gram.is_zero_matrix();
    out.null = all_products_zero;
    out.closed = closed;
    out.form_nondegenerate = rank(std::move(gram)) == b.size();
    out.associative = (out.dim == 3) && out.closed && out.form_nondegenerate;
    if (out.dim == 4) {
        auto perp = subspace_classify(L.orthogonal());
        out.co_associative = perp.associative;
    }
    return out;
}

// E_u = {v in Im O : Im(uv) = 0}, as the exact kernel of a 7x7 matrix.
template <FieldScalar K>
Subspace<K> e_u(const Octonion<K>& u) {
    if (!u.is_imaginary() || u.is_zero_elt())
        throw std::invalid_argument("e_u needs a nonzero imaginary octonion");
    Matrix<K> m(7, 7);
    for (int j = 1; j <= 7; ++j) {
        Octonion<K> p = im(u * Octonion<K>::basis(j));
        for (int l = 1; l <= 7; ++l) m(l - 1, j - 1) = p.c[l];
    }
    std::vector<Octonion<K>> gens;
    for (auto& v : kernel_basis(std::move(m))) {
        std::array<K, 7> a{};
        for (int i = 0; i < 7; ++i) a[i] = v[i];
        gens.push_back(Octonion<K>::imaginary(a));
    }
    return Subspace<K>::span(gens);
}

}  // namespace octa
