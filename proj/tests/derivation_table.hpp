#pragma once

// Transcription of the 21-row derivation table: the three directed lines
// i j k | i p q | i r s, then the images of x1..x7 as signed letters (0 = 0).
// Shared between the unit suite and the acceptance gate.

#include "octa/linalg.hpp"
#include "octa/scalar.hpp"

namespace octa::testdata {

struct DerivationRow {
    int l1[3], l2[3], l3[3];
    int img[7];
};

inline constexpr DerivationRow derivation_table[21] = {
    {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {0, 0, 0, 5, -4, -7, 6}},
    {{1, 4, 5}, {1, 6, 7}, {1, 2, 3}, {0, -3, 2, 0, 0, 7, -6}},
    {{1, 6, 7}, {1, 2, 3}, {1, 4, 5}, {0, 3, -2, -5, 4, 0, 0}},
    {{2, 3, 1}, {2, 7, 5}, {2, 4, 6}, {0, 0, 0, -6, -7, 4, 5}},
    {{2, 4, 6}, {2, 3, 1}, {2, 7, 5}, {-3, 0, 1, 0, 7, 0, -5}},
    {{2, 7, 5}, {2, 4, 6}, {2, 3, 1}, {3, 0, -1, 6, 0, -4, 0}},
    {{3, 1, 2}, {3, 6, 5}, {3, 7, 4}, {0, 0, 0, 7, -6, 5, -4}},
    {{3, 6, 5}, {3, 7, 4}, {3, 1, 2}, {-2, 1, 0, -7, 0, 0, 4}},
    {{3, 7, 4}, {3, 1, 2}, {3, 6, 5}, {2, -1, 0, 0, 6, -5, 0}},
    {{4, 5, 1}, {4, 3, 7}, {4, 6, 2}, {0, 6, 7, 0, 0, -2, -3}},
    {{4, 3, 7}, {4, 6, 2}, {4, 5, 1}, {5, -6, 0, 0, -1, 2, 0}},
    {{4, 6, 2}, {4, 5, 1}, {4, 3, 7}, {-5, 0, -7, 0, 1, 0, 3}},
    {{5, 1, 4}, {5, 2, 7}, {5, 3, 6}, {0, 7, -6, 0, 0, 3, -2}},
    {{5, 2, 7}, {5, 3, 6}, {5, 1, 4}, {-4, 0, 6, 1, 0, -3, 0}},
    {{5, 3, 6}, {5, 1, 4}, {5, 2, 7}, {4, -7, 0, -1, 0, 0, 2}},
    {{6, 7, 1}, {6, 5, 3}, {6, 2, 4}, {0, -4, -5, 2, 3, 0, 0}},
    {{6, 5, 3}, {6, 2, 4}, {6, 7, 1}, {7, 4, 0, -2, 0, 0, -1}},
    {{6, 2, 4}, {6, 7, 1}, {6, 5, 3}, {-7, 0, 5, 0, -3, 0, 1}},
    {{7, 1, 6}, {7, 4, 3}, {7, 5, 2}, {0, 5, -4, 3, -2, 0, 0}},
    {{7, 5, 2}, {7, 1, 6}, {7, 4, 3}, {6, 0, 4, -3, 0, -1, 0}},
    {{7, 4, 3}, {7, 5, 2}, {7, 1, 6}, {-6, -5, 0, 0, 2, 1, 0}},
};

inline Matrix<Rational> derivation_row_matrix(const DerivationRow& row) {
    Matrix<Rational> m(7, 7);
    for (int col = 1; col <= 7; ++col) {
        int v = row.img[col - 1];
        if (v > 0) m(v - 1, col - 1) = Rational(1);
        if (v < 0) m(-v - 1, col - 1) = Rational(-1);
    }
    return m;
}

}  // namespace octa::testdata
