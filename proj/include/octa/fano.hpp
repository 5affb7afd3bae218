#pragma once

// The Fano plane with the directed-line orientation
//   123, 145, 167, 246, 275, 374, 365
// and the totally antisymmetric symbol eps(i,j,k) built from it.

#include <array>
#include <cstdint>
#include <stdexcept>

namespace octa {

inline constexpr std::array<std::array<int, 3>, 7> fano_lines{{
    {1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 7, 5}, {3, 7, 4}, {3, 6, 5}}};

namespace detail {

struct EpsTable {
    std::int8_t e[8][8][8] = {};
    // third[i][j]: the point completing the line through i,j (0 on the diagonal),
    // sgn[i][j]: eps(i, j, third).
    std::int8_t third[8][8] = {};
    std::int8_t sgn[8][8] = {};

    constexpr EpsTable() {
        for (const auto& ln : fano_lines) {
            const int a = ln[0], b = ln[1], c = ln[2];
            e[a][b][c] = e[b][c][a] = e[c][a][b] = 1;
            e[b][a][c] = e[a][c][b] = e[c][b][a] = -1;
        }
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 7; ++j)
                for (int k = 1; k <= 7; ++k)
                    if (e[i][j][k] != 0) {
                        third[i][j] = static_cast<std::int8_t>(k);
                        sgn[i][j] = e[i][j][k];
                    }
    }
};

inline constexpr EpsTable eps_table{};

}  // namespace detail

inline int epsilon(int i, int j, int k) {
    if (i < 1 || i > 7 || j < 1 || j > 7 || k < 1 || k > 7)
        throw std::out_of_range("epsilon index out of 1..7");
    return detail::eps_table.e[i][j][k];
}

// For i != j: the unique k on the line through i and j, and eps(i,j,k).
inline int line_third_point(int i, int j) { return detail::eps_table.third[i][j]; }
inline int line_sign(int i, int j) { return detail::eps_table.sgn[i][j]; }

// The 21 arrows j -> k of the oriented Fano plane (consecutive points of a
// directed line), in line-list order.
inline std::array<std::array<int, 2>, 21> fano_arrows() {
    std::array<std::array<int, 2>, 21> arrows{};
    int n = 0;
    for (const auto& ln : fano_lines) {
        arrows[n++] = {ln[0], ln[1]};
        arrows[n++] = {ln[1], ln[2]};
        arrows[n++] = {ln[2], ln[0]};
    }
    return arrows;
}

}  // namespace octa
