#pragma once

// Incremental sparse rank over F_p for the big graded-complex matrices.
// Columns arrive one at a time and are reduced against the stored pivot
// columns (keyed by their largest row index).  p stays below 2^31 so products
// fit in int64.

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace octa {

class SparseRankMod {
  public:
    explicit SparseRankMod(std::int64_t p) : p_(p) {}

    static constexpr std::int64_t default_prime = 2147483647;  // 2^31 - 1

    std::int64_t modulus() const { return p_; }
    std::size_t rank() const { return rank_; }

    // col: (row, value) pairs sorted by row, values in [0, p)
    void add_column(std::vector<std::pair<std::int32_t, std::int64_t>> col) {
        normalize(col);
        while (!col.empty()) {
            std::int32_t top = col.back().first;
            auto it = pivots_.find(top);
            if (it == pivots_.end()) {
                std::int64_t inv = inverse_mod(col.back().second);
                for (auto& [r, v] : col) v = v * inv % p_;
                pivots_.emplace(top, std::move(col));
                ++rank_;
                return;
            }
            std::int64_t f = p_ - col.back().second;  // col += f * pivot  kills the top entry
            col = axpy(col, f, it->second);
        }
    }

  private:
    void normalize(std::vector<std::pair<std::int32_t, std::int64_t>>& col) const {
        std::size_t out = 0;
        for (auto& [r, v] : col) {
            std::int64_t x = v % p_;
            if (x < 0) x += p_;
            if (x) col[out++] = {r, x};
        }
        col.resize(out);
    }

    std::vector<std::pair<std::int32_t, std::int64_t>> axpy(
        const std::vector<std::pair<std::int32_t, std::int64_t>>& a, std::int64_t f,
        const std::vector<std::pair<std::int32_t, std::int64_t>>& b) const {
        std::vector<std::pair<std::int32_t, std::int64_t>> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, f * b[j].second % p_);
                ++j;
            } else {
                std::int64_t v = (a[i].second + f * b[j].second) % p_;
                if (v) out.emplace_back(a[i].first, v);
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::int64_t inverse_mod(std::int64_t a) const {
        std::int64_t t = 0, newt = 1, r = p_, newr = a % p_;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        return t < 0 ? t + p_ : t;
    }

    std::int64_t p_;
    std::size_t rank_ = 0;
    std::unordered_map<std::int32_t, std::vector<std::pair<std::int32_t, std::int64_t>>> pivots_;
};

}  // namespace octa
