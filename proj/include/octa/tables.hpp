#pragma once

// Frozen multiplication tables used as golden data by the verification
// suites.  Standard basis: entry (r,s) is a signed target index for
// o_r o_s, with 0 meaning the scalar -1.  Split basis entries are written
// over {1, t, u1, u2, u3, v1, v2, v3} with the two special values
// -w = -2(1+t) on u_m v_m and -2(1-t) on v_m u_m.

#include "octa/octonion.hpp"

namespace octa {

inline constexpr int standard_table[7][7] = {
    {0, 3, -2, 5, -4, 7, -6},  {-3, 0, 1, 6, -7, -4, 5},  {2, -1, 0, -7, -6, 5, 4},
    {-5, -6, 7, 0, 1, 2, -3},  {4, 7, 6, -1, 0, -3, -2},  {-7, 4, -5, -2, 3, 0, 1},
    {6, -5, -4, 3, 2, -1, 0},
};

template <FieldScalar K>
Octonion<K> standard_table_entry(int r, int s) {
    int v = standard_table[r - 1][s - 1];
    if (v == 0) return Octonion<K>::scalar(K(-1));
    Octonion<K> o = Octonion<K>::basis(v < 0 ? -v : v);
    return v < 0 ? -o : o;
}

// Split-basis golden table: pair (scale, target index over the split basis),
// plus the special codes 8 for -2(1+t) and 9 for -2(1-t).
struct SplitEntry {
    int scale;
    int target;  // 0..7 basis index, 8 = -w, 9 = -2(1-t)
};

inline constexpr SplitEntry split_table[7][7] = {
    /* t  */ {{1, 0}, {1, 2}, {1, 3}, {1, 4}, {-1, 5}, {-1, 6}, {-1, 7}},
    /* u1 */ {{-1, 2}, {0, 0}, {2, 7}, {-2, 6}, {1, 8}, {0, 0}, {0, 0}},
    /* u2 */ {{-1, 3}, {-2, 7}, {0, 0}, {2, 5}, {0, 0}, {1, 8}, {0, 0}},
    /* u3 */ {{-1, 4}, {2, 6}, {-2, 5}, {0, 0}, {0, 0}, {0, 0}, {1, 8}},
    /* v1 */ {{1, 5}, {1, 9}, {0, 0}, {0, 0}, {0, 0}, {2, 4}, {-2, 3}},
    /* v2 */ {{1, 6}, {0, 0}, {1, 9}, {0, 0}, {-2, 4}, {0, 0}, {2, 2}},
    /* v3 */ {{1, 7}, {0, 0}, {0, 0}, {1, 9}, {2, 3}, {-2, 2}, {0, 0}},
};

template <FieldScalar K>
SplitOctonion<K> split_table_entry(int r, int s) {
    SplitEntry e = split_table[r - 1][s - 1];
    SplitOctonion<K> out;
    if (e.scale == 0) return out;
    if (e.target == 8) {  // -2(1+t)
        out.c[0] = K(-2);
        out.c[1] = K(-2);
        return out;
    }
    if (e.target == 9) {  // -2(1-t)
        out.c[0] = K(-2);
        out.c[1] = K(2);
        return out;
    }
    out.c[e.target] = K(e.scale);
    return out;
}

}  // namespace octa
