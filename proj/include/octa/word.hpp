#pragma once

// Words in the letters x1..x7, packed 3 bits per letter, most significant
// first, so that equal-length words compare lexicographically as integers.
// The global order is degree-then-lex with x1 < x2 < ... < x7.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace octa {

struct Word {
    static constexpr int max_len = 20;

    std::uint8_t len = 0;
    std::uint64_t bits = 0;

    Word() = default;

    static Word empty() { return Word{}; }

    static Word single(int letter) {
        Word w;
        w.push_back(letter);
        return w;
    }

    static Word of(std::initializer_list<int> letters) {
        Word w;
        for (int l : letters) w.push_back(l);
        return w;
    }

    int letter(int pos) const { return int((bits >> shift(pos)) & 7u); }

    void push_back(int letter) {
        if (len >= max_len) throw std::length_error("word too long");
        if (letter < 1 || letter > 7) throw std::out_of_range("letter out of 1..7");
        bits |= std::uint64_t(letter) << shift(len);
        ++len;
    }

    friend Word operator*(const Word& a, const Word& b) {
        if (a.len + b.len > max_len) throw std::length_error("word too long");
        Word w;
        w.len = static_cast<std::uint8_t>(a.len + b.len);
        w.bits = a.bits | (b.bits >> (3 * a.len));
        return w;
    }

    Word prefix(int n) const {
        Word w;
        w.len = static_cast<std::uint8_t>(n);
        w.bits = n == 0 ? 0 : (bits >> shift(n - 1)) << shift(n - 1);
        return w;
    }

    Word suffix_from(int pos) const {  // letters pos..len-1
        Word w;
        w.len = static_cast<std::uint8_t>(len - pos);
        // letters live in the low 60 bits; shifted-out prefix letters must not
        // land in the unused top nibble
        w.bits = (bits << (3 * pos)) & ((std::uint64_t(1) << 60) - 1);
        return w;
    }

    Word subword(int pos, int n) const { return suffix_from(pos).prefix(n); }

    int degree() const { return len; }

    friend bool operator==(const Word& a, const Word& b) {
        return a.len == b.len && a.bits == b.bits;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

    // deg-lex
    friend bool operator<(const Word& a, const Word& b) {
        if (a.len != b.len) return a.len < b.len;
        return a.bits < b.bits;
    }
    friend bool operator>(const Word& a, const Word& b) { return b < a; }

    std::string str() const {
        if (len == 0) return "1";
        std::string s;
        for (int i = 0; i < len; ++i) {
            if (i) s += '*';
            s += 'x';
            s += char('0' + letter(i));
        }
        return s;
    }

    std::vector<int> letters() const {
        std::vector<int> v(len);
        for (int i = 0; i < len; ++i) v[i] = letter(i);
        return v;
    }

  private:
    static constexpr int shift(int pos) { return 3 * (max_len - 1 - pos); }
};

// All words of the given degree over the given alphabet, in deg-lex order.
inline std::vector<Word> all_words(const std::vector<int>& alphabet, int degree) {
    std::vector<Word> out;
    std::vector<Word> cur{Word::empty()};
    for (int d = 0; d < degree; ++d) {
        std::vector<Word> next;
        next.reserve(cur.size() * alphabet.size());
        for (const Word& w : cur)
            for (int l : alphabet) {
                Word v = w;
                v.push_back(l);
                next.push_back(v);
            }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace octa
