#pragma once

// Shared helpers for the test suites: seeded generators for exact scalars,
// octonions and words.  Seeds are fixed so every run is reproducible.

#include <random>

#include "octa/octonion.hpp"
#include "octa/word.hpp"

namespace octa::testutil {

using Rng = std::mt19937_64;

inline Rational rand_rational(Rng& rng, int num_range = 20, int den_range = 6) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline QI rand_gaussian(Rng& rng) { return QI(rand_rational(rng), rand_rational(rng)); }

inline Octonion<Rational> rand_imaginary(Rng& rng) {
    Octonion<Rational> u;
    for (int i = 1; i <= 7; ++i) u.c[i] = rand_rational(rng);
    return u;
}

inline Octonion<Rational> rand_imaginary_nonzero(Rng& rng) {
    for (;;) {
        Octonion<Rational> u = rand_imaginary(rng);
        if (!u.is_zero_elt()) return u;
    }
}

inline Octonion<QI> rand_imaginary_qi(Rng& rng) {
    Octonion<QI> u;
    for (int i = 1; i <= 7; ++i) u.c[i] = rand_gaussian(rng);
    return u;
}

inline Word rand_word(Rng& rng, int degree, int nletters = 7) {
    std::uniform_int_distribution<int> letter(1, nletters);
    Word w;
    for (int i = 0; i < degree; ++i) w.push_back(letter(rng));
    return w;
}

}  // namespace octa::testutil
