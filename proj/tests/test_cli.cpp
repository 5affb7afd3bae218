#include <catch2/catch_amalgamated.hpp>

#include "octa/report.hpp"
#include "octa/rewrite.hpp"
#include "octa/sparsemod.hpp"
#include "octa/verify.hpp"
#include "test_util.hpp"

using namespace octa;

TEST_CASE("word packing round trips") {
    testutil::Rng rng(2718);
    for (int trial = 0; trial < 2000; ++trial) {
        int len = 1 + int(rng() % Word::max_len);
        Word w = testutil::rand_word(rng, len);
        int cut = int(rng() % (len + 1));
        CHECK(w.prefix(cut) * w.suffix_from(cut) == w);
        auto letters = w.letters();
        Word rebuilt;
        for (int l : letters) rebuilt.push_back(l);
        CHECK(rebuilt == w);
        // the packed order agrees with the letter-vector order
        Word v = testutil::rand_word(rng, len);
        CHECK((w < v) == (letters < v.letters()));
    }
    Word full = testutil::rand_word(rng, Word::max_len);
    CHECK_THROWS(full.push_back(1));
}

TEST_CASE("sparse rank over F_p matches dense rank") {
    testutil::Rng rng(321);
    const std::int64_t p = 10007;
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 3 + rng() % 8, cols = 3 + rng() % 8;
        Matrix<Fp> dense(rows, cols);
        SparseRankMod sparse(p);
        for (std::size_t c = 0; c < cols; ++c) {
            std::vector<std::pair<std::int32_t, std::int64_t>> col;
            for (std::size_t r = 0; r < rows; ++r) {
                std::int64_t v = (rng() % 3 == 0) ? std::int64_t(rng() % 20) - 10 : 0;
                dense(r, c) = Fp(v, p);
                if (v) col.emplace_back(std::int32_t(r), v);
            }
            sparse.add_column(std::move(col));
        }
        CHECK(sparse.rank() == rank(dense));
    }
}

TEST_CASE("prime field edges") {
    CHECK_THROWS(Fp(1, 4));   // even modulus
    CHECK_THROWS(Fp(1, 9));   // composite modulus
    CHECK_THROWS(Fp(1, 2));   // characteristic 2 rejected
    Fp a(5, 7), b(4, 7);
    CHECK(a * b == Fp(6, 7));
    CHECK(a * inverse(a) == Fp(1, 7));
    CHECK(is_zero(a - a));
    CHECK(a + Fp(2) == Fp(0, 7));  // literal adopts the modulus
    Fp c(1, 5);
    CHECK_THROWS(a + c);  // mixed moduli
    CHECK_THROWS(inverse(Fp(0, 7)));
}

TEST_CASE("report status bookkeeping") {
    Report rep{"demo", {}};
    rep.add("a", true);
    rep.add_sampled("b", true);
    CHECK(rep.passed());
    rep.add("c", false);
    CHECK(!rep.passed());
    CHECK(std::string(status_name(CheckStatus::sampled)) == "sampled");
    CHECK(rep.checks[1].status == CheckStatus::sampled);
}

TEST_CASE("reduction degree cap") {
    auto sys = algebra_a_system<Rational>();
    Word w;
    for (int i = 0; i < 12; ++i) w.push_back(7);
    NcPoly<Rational> p = NcPoly<Rational>::monomial(Rational(1), w);
    CHECK_THROWS_AS(normal_form(p, sys), std::length_error);
    CHECK(normal_form(p, sys, ReduceStrategy::leftmost, 12) == p);  // x7^12 is normal
}

TEST_CASE("polynomial text round trip") {
    auto sys = algebra_a_system<Rational>();
    NcPoly<Rational> p = parse_poly<Rational>("x7*x6 - 2*x1 + 3/2*x2*x2");
    CHECK(parse_poly<Rational>(p.str()) == p);
    CHECK_THROWS(parse_poly<Rational>("x8"));
    CHECK_THROWS(parse_poly<Rational>("x"));
}

TEST_CASE("single-suite selection") {
    VerifyOptions opt;
    opt.min_rank_samples = 50;  // keep the sampled sweep small here
    auto reports = run_suites("series", opt);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].suite == "series");
    CHECK(reports[0].passed());
    CHECK_THROWS(run_suites("nonsense", opt));
}
