#include <catch2/catch_amalgamated.hpp>

#include "octa/fano.hpp"
#include "octa/octonion.hpp"
#include "octa/subspace.hpp"
#include "test_util.hpp"

using namespace octa;

namespace {

// Row r, column s of the imaginary multiplication table: signed target index,
// 0 meaning the scalar -1.
constexpr int kStandardTable[7][7] = {
    {0, 3, -2, 5, -4, 7, -6},
    {-3, 0, 1, 6, -7, -4, 5},
    {2, -1, 0, -7, -6, 5, 4},
    {-5, -6, 7, 0, 1, 2, -3},
    {4, 7, 6, -1, 0, -3, -2},
    {-7, 4, -5, -2, 3, 0, 1},
    {6, -5, -4, 3, 2, -1, 0},
};

template <class K>
Octonion<K> table_entry(int signed_idx) {
    if (signed_idx == 0) return Octonion<K>::scalar(K(-1));
    Octonion<K> o = Octonion<K>::basis(signed_idx < 0 ? -signed_idx : signed_idx);
    return signed_idx < 0 ? -o : o;
}

}  // namespace

TEST_CASE("epsilon symbol") {
    CHECK(epsilon(1, 2, 3) == 1);
    CHECK(epsilon(2, 1, 3) == -1);
    CHECK(epsilon(1, 2, 4) == 0);
    CHECK_THROWS(epsilon(0, 1, 2));
    CHECK_THROWS(epsilon(1, 2, 8));

    // alternating, and zero iff repeated or non-colinear (oracle: the line list)
    int nonzero = 0;
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            for (int k = 1; k <= 7; ++k) {
                int e = epsilon(i, j, k);
                CHECK(e == -epsilon(j, i, k));
                CHECK(e == -epsilon(i, k, j));
                CHECK(e == epsilon(k, i, j));
                bool on_line = false;
                for (const auto& ln : fano_lines) {
                    int a = ln[0], b = ln[1], c = ln[2];
                    if ((i == a || i == b || i == c) && (j == a || j == b || j == c) &&
                        (k == a || k == b || k == c) && i != j && j != k && i != k)
                        on_line = true;
                }
                CHECK((e != 0) == on_line);
                if (e != 0) ++nonzero;
            }
    CHECK(nonzero == 42);
}

TEST_CASE("every pair of distinct points lies on exactly one line") {
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            if (i == j) continue;
            int count = 0;
            for (const auto& ln : fano_lines) {
                bool has_i = ln[0] == i || ln[1] == i || ln[2] == i;
                bool has_j = ln[0] == j || ln[1] == j || ln[2] == j;
                if (has_i && has_j) ++count;
            }
            CHECK(count == 1);
            CHECK(line_third_point(i, j) >= 1);
        }
}

TEST_CASE("multiplication table, standard basis") {
    using O = Octonion<Rational>;
    for (int r = 1; r <= 7; ++r)
        for (int s = 1; s <= 7; ++s)
            CHECK(O::basis(r) * O::basis(s) == table_entry<Rational>(kStandardTable[r - 1][s - 1]));

    CHECK(O::basis(5) * O::basis(2) == O::basis(7));
    CHECK(O::basis(2) * O::basis(6) == -O::basis(4));

    testutil::Rng rng(20110704);
    for (int trial = 0; trial < 50; ++trial) {
        O a = testutil::rand_imaginary(rng);
        a.c[0] = testutil::rand_rational(rng);
        CHECK(O::unit() * a == a);
        CHECK(a * O::unit() == a);
    }
}

TEST_CASE("conjugation, re/im, minimal equation") {
    using O = Octonion<Rational>;
    testutil::Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        O u = testutil::rand_imaginary(rng);
        u.c[0] = testutil::rand_rational(rng);
        O v = testutil::rand_imaginary(rng);
        v.c[0] = testutil::rand_rational(rng);

        CHECK(conj(u * v) == conj(v) * conj(u));
        CHECK(u * conj(u) == O::scalar(form(u, u)));
        // u^2 - 2<u,1>u + <u,u> = 0
        Rational two(2);
        O lhs = u * u - two * form(u, O::unit()) * u + O::scalar(form(u, u));
        CHECK(lhs.is_zero_elt());
        // re + im decomposition
        CHECK(O::scalar(re(u)) + im(u) == u);
    }

    O a = Rational(3) * O::unit() + Rational(2) * O::basis(4);
    CHECK(im(a) == Rational(2) * O::basis(4));
    CHECK(im(O::basis(1) * O::basis(2)) == O::basis(3));
    CHECK(re(O::basis(1) * O::basis(1)) == Rational(-1));
}

TEST_CASE("imaginary products anticommute in Im, commute in Re") {
    using O = Octonion<Rational>;
    testutil::Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        O u = testutil::rand_imaginary(rng);
        O v = testutil::rand_imaginary(rng);
        CHECK(im(u * v) == -im(v * u));
        CHECK(re(u * v) == re(v * u));
    }
}

TEST_CASE("bilinear form") {
    using O = Octonion<Rational>;
    // {1, o1..o7} orthonormal
    for (int i = 0; i <= 7; ++i)
        for (int j = 0; j <= 7; ++j)
            CHECK(form(O::basis(i), O::basis(j)) == Rational(i == j ? 1 : 0));
    CHECK(form(O::basis(3), O::basis(3)) == Rational(1));
    CHECK(form(O::basis(2), O::basis(5)) == Rational(0));
    CHECK(form(O::unit() + O::basis(1), O::unit() - O::basis(1)) == Rational(0));

    testutil::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        O u = testutil::rand_imaginary(rng), v = testutil::rand_imaginary(rng);
        CHECK(form(u, v) == form(v, u));
        O w = testutil::rand_imaginary(rng);
        CHECK(form(u + w, v) == form(u, v) + form(w, v));
    }
}

TEST_CASE("trilinear form phi") {
    using O = Octonion<Rational>;
    CHECK(phi(O::basis(1), O::basis(2), O::basis(3)) == Rational(1));
    CHECK(phi(O::basis(1), O::basis(1), O::basis(2)) == Rational(0));
    CHECK(phi(O::basis(1), O::basis(2), O::basis(4)) == Rational(0));
    CHECK(phi(O::basis(1), O::basis(2), O::basis(4)) == -re((O::basis(1) * O::basis(2)) * O::basis(4)));
    CHECK_THROWS(phi(O::unit(), O::basis(1), O::basis(2)));

    // full basis sweep: alternating, nonzero exactly +-1 on colinear triples
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            for (int k = 1; k <= 7; ++k) {
                Rational v = phi(O::basis(i), O::basis(j), O::basis(k));
                CHECK(v == Rational(epsilon(i, j, k)));
                CHECK(v == -phi(O::basis(j), O::basis(i), O::basis(k)));
            }
}

namespace {

// Corrected split-basis table: signed multiples of a basis element, or the
// special entries -w = -2(1+t) and -2(1-t) on the u_m v_m / v_m u_m diagonal.
// Columns and rows in order t,u1,u2,u3,v1,v2,v3.
SplitOctonion<QI> split_expected(int row, int col) {
    using S = SplitOctonion<QI>;
    auto b = [](int idx) { return S::basis(idx); };
    auto times = [](int n, S s) { return QI(Rational(n)) * s; };
    const S one = b(0), t = b(1), u1 = b(2), u2 = b(3), u3 = b(4), v1 = b(5), v2 = b(6),
            v3 = b(7);
    const S minus_w = times(-2, one) + times(-2, t);        // u_m v_m
    const S minus_wbar = times(-2, one) + times(2, t);      // v_m u_m
    const S zero = times(0, one);
    const S table[7][7] = {
        /* t  */ {one, u1, u2, u3, times(-1, v1), times(-1, v2), times(-1, v3)},
        /* u1 */ {times(-1, u1), zero, times(2, v3), times(-2, v2), minus_w, zero, zero},
        /* u2 */ {times(-1, u2), times(-2, v3), zero, times(2, v1), zero, minus_w, zero},
        /* u3 */ {times(-1, u3), times(2, v2), times(-2, v1), zero, zero, zero, minus_w},
        /* v1 */ {v1, minus_wbar, zero, zero, zero, times(2, u3), times(-2, u2)},
        /* v2 */ {v2, zero, minus_wbar, zero, times(-2, u3), zero, times(2, u1)},
        /* v3 */ {v3, zero, zero, minus_wbar, times(2, u2), times(-2, u1), zero},
    };
    return table[row][col];
}

}  // namespace

TEST_CASE("multiplication table, split basis") {
    using S = SplitOctonion<QI>;
    for (int r = 0; r < 7; ++r)
        for (int c = 0; c < 7; ++c) {
            S a = S::basis(r + 1), b = S::basis(c + 1);
            INFO(split_name(r + 1) << " * " << split_name(c + 1));
            CHECK(split_mul(a, b) == split_expected(r, c));
        }

    // named entries
    CHECK(split_mul(S::basis(1), S::basis(1)) == S::basis(0));  // t*t = 1
    // u1*v1 = -2(1+t)
    S w = QI(Rational(2)) * S::basis(0) + QI(Rational(2)) * S::basis(1);
    CHECK(split_mul(S::basis(2), S::basis(5)) == QI(Rational(-1)) * w);
    // u1*u2 = 2 v3 (cyclically symmetric with u2*u3 = 2 v1 and u3*u1 = 2 v2)
    CHECK(split_mul(S::basis(2), S::basis(3)) == QI(Rational(2)) * S::basis(7));
    CHECK(split_mul(S::basis(3), S::basis(4)) == QI(Rational(2)) * S::basis(5));
    CHECK(split_mul(S::basis(4), S::basis(2)) == QI(Rational(2)) * S::basis(6));

    // to_split / to_standard are mutually inverse
    testutil::Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Octonion<QI> u = testutil::rand_imaginary_qi(rng);
        u.c[0] = testutil::rand_gaussian(rng);
        CHECK(to_standard(to_split(u)) == u);
    }
}

TEST_CASE("subspace classification") {
    using O = Octonion<Rational>;
    using OI = Octonion<QI>;

    auto assoc = Subspace<Rational>::span({O::basis(1), O::basis(2), O::basis(3)});
    auto cls = subspace_classify(assoc);
    CHECK(cls.dim == 3);
    CHECK(cls.associative);
    CHECK(!cls.isotropic);
    CHECK(!cls.null);

    auto coassoc =
        Subspace<Rational>::span({O::basis(4), O::basis(5), O::basis(6), O::basis(7)});
    auto cls4 = subspace_classify(coassoc);
    CHECK(cls4.dim == 4);
    CHECK(cls4.co_associative);

    // a non-associative 3-plane
    auto nonassoc = Subspace<Rational>::span({O::basis(1), O::basis(2), O::basis(4)});
    CHECK(!subspace_classify(nonassoc).associative);

    // L = k u1 + k v3 is null over Q(i)
    OI u1 = to_standard(SplitOctonion<QI>::basis(2));
    OI v3 = to_standard(SplitOctonion<QI>::basis(7));
    auto nullplane = Subspace<QI>::span({u1, v3});
    auto clsn = subspace_classify(nullplane);
    CHECK(clsn.dim == 2);
    CHECK(clsn.null);
    CHECK(clsn.isotropic);

    CHECK_THROWS(Subspace<Rational>::span({O::basis(1), O::basis(1)}, true));
}

TEST_CASE("e_u fibers") {
    using O = Octonion<Rational>;
    using OI = Octonion<QI>;

    auto line = e_u(O::basis(1));
    CHECK(line.dim() == 1);
    CHECK(line.contains(O::basis(1)));
    CHECK(e_u(Rational(2) * O::basis(1)) == line);

    OI u1 = to_standard(SplitOctonion<QI>::basis(2));
    OI v2 = to_standard(SplitOctonion<QI>::basis(6));
    OI v3 = to_standard(SplitOctonion<QI>::basis(7));
    auto fiber = e_u(u1);
    CHECK(fiber.dim() == 3);
    CHECK(fiber == Subspace<QI>::span({u1, v2, v3}));

    // over Q the form is anisotropic, so e_u is always a line
    testutil::Rng rng(123);
    for (int trial = 0; trial < 1000; ++trial) {
        O u = testutil::rand_imaginary_nonzero(rng);
        CHECK(e_u(u).dim() == 1);
    }

    // over Q(i) every isotropic direction has a 3-dimensional fiber; sample
    // inside the null plane E_{u1} (all of whose elements are isotropic)
    for (int trial = 0; trial < 50; ++trial) {
        OI w;
        bool zero = true;
        OI gens[3] = {u1, v2, v3};
        for (auto& g : gens) {
            QI c = testutil::rand_gaussian(rng);
            w = w + c * g;
            zero = zero && is_zero(c);
        }
        if (zero) continue;
        CHECK(is_zero(form(w, w)));
        CHECK(e_u(w).dim() == 3);
    }
}
