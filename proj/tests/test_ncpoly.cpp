#include <catch2/catch_amalgamated.hpp>

#include "octa/ncpoly.hpp"
#include "octa/relations.hpp"
#include "octa/subspace.hpp"
#include "test_util.hpp"

using namespace octa;
using P = NcPoly<Rational>;

namespace {

P commutator(int i, int j) {
    return P::var(i) * P::var(j) - P::var(j) * P::var(i);
}

}  // namespace

TEST_CASE("word order is deg-lex with x1 < ... < x7") {
    CHECK(Word::of({7}) < Word::of({1, 1}));
    CHECK(Word::of({1, 2}) < Word::of({2, 1}));
    CHECK(Word::of({1, 7}) < Word::of({2, 1}));
    CHECK(Word::of({2, 3, 4}) < Word::of({2, 4, 3}));
    CHECK(Word::of({1, 2, 3}).str() == "x1*x2*x3");
    CHECK(Word::empty().str() == "1");
    CHECK((Word::of({1, 2}) * Word::of({3})) == Word::of({1, 2, 3}));
    CHECK(Word::of({1, 2, 3, 4}).subword(1, 2) == Word::of({2, 3}));
}

TEST_CASE("poly arithmetic and text form") {
    P p = P::var(1) * P::var(6) - P::var(6) * P::var(1);
    CHECK(p.term_count() == 2);
    CHECK(p.coeff(Word::of({1, 6})) == Rational(1));
    CHECK(p.coeff(Word::of({6, 1})) == Rational(-1));
    CHECK((p - p).is_zero_poly());
    CHECK(p.str() == "1*x1*x6 + -1*x6*x1");
    CHECK(parse_poly<Rational>("x1*x6 - x6*x1") == p);
    CHECK(parse_poly<Rational>("3/2*x1 + x2 - 2*x3") ==
          Rational(3, 2) * P::var(1) + P::var(2) - Rational(2) * P::var(3));
}

TEST_CASE("relations from mu*") {
    auto rels = relations_from_mu<Rational>();

    CHECK(rels[0] == commutator(2, 3) + commutator(4, 5) + commutator(6, 7));
    CHECK(rels[1] == commutator(3, 1) + commutator(4, 6) + commutator(7, 5));
    CHECK(rels[2] == commutator(1, 2) + commutator(6, 5) + commutator(7, 4));
    CHECK(rels[3] == commutator(5, 1) + commutator(3, 7) + commutator(6, 2));
    CHECK(rels[4] == commutator(1, 4) + commutator(2, 7) + commutator(3, 6));
    CHECK(rels[5] == commutator(7, 1) + commutator(5, 3) + commutator(2, 4));
    CHECK(rels[6] == commutator(1, 6) + commutator(4, 3) + commutator(5, 2));

    // mu*(x5) spelled out
    CHECK(rels[4] == parse_poly<Rational>(
                         "x1*x4 - x4*x1 + x2*x7 - x7*x2 + x3*x6 - x6*x3"));

    for (const auto& r : rels) {
        CHECK(r.term_count() == 6);
        CHECK(swap_and_negate(r) == r);  // skew-symmetric tensors
    }
}

TEST_CASE("relation r_u") {
    using O = Octonion<Rational>;
    auto rels = relations_from_mu<Rational>();
    for (int i = 1; i <= 7; ++i) CHECK(relation_r_u(O::basis(i)) == rels[i - 1]);
    CHECK(relation_r_u(O()).is_zero_poly());
    CHECK(relation_r_u(O::basis(1) + O::basis(2)) == rels[0] + rels[1]);

    testutil::Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        O u = testutil::rand_imaginary(rng), v = testutil::rand_imaginary(rng);
        Rational a = testutil::rand_rational(rng), b = testutil::rand_rational(rng);
        CHECK(relation_r_u(a * u + b * v) == a * relation_r_u(u) + b * relation_r_u(v));
    }
    CHECK_THROWS(relation_r_u(O::unit()));
}

TEST_CASE("cyclic derivatives") {
    P w123 = P::monomial(Rational(1), Word::of({1, 2, 3}));
    CHECK(cyclic_derivative(w123, 1) == P::var(2) * P::var(3));
    CHECK(cyclic_derivative(w123, 2) == P::var(3) * P::var(1));
    CHECK(cyclic_derivative(w123, 3) == P::var(1) * P::var(2));
    CHECK(cyclic_derivative(w123, 4).is_zero_poly());

    // repeated letters: every occurrence contributes
    P w11 = P::monomial(Rational(1), Word::of({1, 1}));
    CHECK(cyclic_derivative(w11, 1) == Rational(2) * P::var(1));
}

TEST_CASE("superpotential") {
    P w = build_superpotential<Rational>();
    auto rels = relations_from_mu<Rational>();

    CHECK(w.term_count() == 42);
    CHECK(w.coeff(Word::of({1, 2, 3})) == Rational(1));
    CHECK(w.coeff(Word::of({2, 1, 3})) == Rational(-1));

    // oracle: the nonzero epsilon triples
    int triples = 0;
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            for (int k = 1; k <= 7; ++k) {
                if (epsilon(i, j, k) == 0) continue;
                ++triples;
                CHECK(w.coeff(Word::of({i, j, k})) == Rational(epsilon(i, j, k)));
            }
    CHECK(triples == 42);

    // total antisymmetry under permuting the three positions
    for (const auto& [word, c] : w.terms()) {
        int i = word.letter(0), j = word.letter(1), k = word.letter(2);
        CHECK(w.coeff(Word::of({j, i, k})) == -c);
        CHECK(w.coeff(Word::of({j, k, i})) == c);
    }

    // cyclic partials recover the relations: the fully symmetrized W has each
    // cyclic class three times, so the occurrence sum gives exactly 3 r_i
    for (int i = 1; i <= 7; ++i) CHECK(cyclic_derivative(w, i) == Rational(3) * rels[i - 1]);

    // both factorizations of W
    P sum_xr, sum_rx;
    for (int i = 1; i <= 7; ++i) {
        sum_xr += P::var(i) * rels[i - 1];
        sum_rx += rels[i - 1] * P::var(i);
    }
    CHECK(w == sum_xr);
    CHECK(w == sum_rx);
}

TEST_CASE("tensor ranks") {
    P w = build_superpotential<Rational>();
    auto rels = relations_from_mu<Rational>();

    CHECK(tensor_rank(w) == 7);
    CHECK(tensor_rank(rels[0]) == 6);
    CHECK(tensor_rank(rels[6]) == 6);
    CHECK(tensor_rank(rels[0] + rels[1]) == 6);
    CHECK(tensor_rank(commutator(1, 2)) == 2);
    CHECK(tensor_rank(P()) == 0);
    CHECK_THROWS(tensor_rank(P::var(1) + P::var(1) * P::var(2)));
}

TEST_CASE("split presentation realizes explicit combinations of the relations") {
    using PI = NcPoly<QI>;
    const QI i = QI::i();
    std::array<PI, 8> letter;
    letter[1] = i * PI::var(1);                 // t
    letter[2] = PI::var(2) + i * PI::var(3);    // u1
    letter[3] = PI::var(4) + i * PI::var(5);    // u2
    letter[4] = PI::var(6) + i * PI::var(7);    // u3
    letter[5] = PI::var(2) - i * PI::var(3);    // v1
    letter[6] = PI::var(4) - i * PI::var(5);    // v2
    letter[7] = PI::var(6) - i * PI::var(7);    // v3
    auto comm = [&](int a, int b) { return letter[a] * letter[b] - letter[b] * letter[a]; };
    auto rels = relations_from_mu<QI>();
    auto r = [&](int k) { return rels[k - 1]; };

    // left column of the split relations: r_even + i r_odd
    CHECK(comm(1, 4) - comm(6, 5) == r(6) + i * r(7));  // [t,u3] - [v2,v1]
    CHECK(comm(1, 3) - comm(5, 7) == r(4) + i * r(5));  // [t,u2] - [v1,v3]
    CHECK(comm(1, 2) - comm(7, 6) == r(2) + i * r(3));  // [t,u1] - [v3,v2]
    // sum [u_m, v_m] is a scalar multiple of r_1
    CHECK(comm(2, 5) + comm(3, 6) + comm(4, 7) == (QI(Rational(-2)) * i) * r(1));
    // right column: -r_even + i r_odd
    CHECK(comm(1, 7) - comm(2, 3) == -r(6) + i * r(7));  // [t,v3] - [u1,u2]
    CHECK(comm(1, 6) - comm(4, 2) == -r(4) + i * r(5));  // [t,v2] - [u3,u1]
    CHECK(comm(1, 5) - comm(3, 4) == -r(2) + i * r(3));  // [t,v1] - [u2,u3]
}

TEST_CASE("minimum rank in the relation space") {
    // over Q: sampled sweep (the full 10^4 sweep runs in the acceptance suite)
    testutil::Rng rng(4242);
    auto rep = min_rank_in_relation_space<Rational>(
        300, [&] { return testutil::rand_imaginary_nonzero(rng); });
    CHECK(rep.min_rank_seen == 6);
    CHECK(rep.max_rank_seen == 6);
    CHECK(rep.e_u_cross_check);
    CHECK(rep.sampled);

    // over Q(i): the split relation direction has rank 4
    auto witness = rank4_witness_direction<QI>();
    CHECK(rank(relation_matrix(witness)) == 4);
}
