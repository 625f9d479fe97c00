#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "common.hpp"

namespace triangulex {

// Set of vertex ids over a fixed universe [0, width). The width is chosen at
// construction and every binary operation requires both operands to share it;
// a mismatch is a programming error, not a recoverable condition.
class VertexSet {
public:
    static constexpr int max_width = 128;

    VertexSet() = default;
    explicit VertexSet(int width) : width_(width) {
        check(width >= 0 && width <= max_width, "VertexSet width out of range");
    }

    static VertexSet full(int width) {
        VertexSet s(width);
        for (int w = 0; w < words_needed(width); ++w) {
            s.words_[w] = ~0ull;
        }
        s.trim();
        return s;
    }

    static VertexSet single(int width, int v) {
        VertexSet s(width);
        s.set(v);
        return s;
    }

    int width() const { return width_; }

    void set(int v) {
        check(v >= 0 && v < width_, "vertex out of range");
        words_[v >> 6] |= 1ull << (v & 63);
    }

    void reset(int v) {
        check(v >= 0 && v < width_, "vertex out of range");
        words_[v >> 6] &= ~(1ull << (v & 63));
    }

    bool test(int v) const {
        check(v >= 0 && v < width_, "vertex out of range");
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    int count() const {
        return std::popcount(words_[0]) + std::popcount(words_[1]);
    }

    bool empty() const { return words_[0] == 0 && words_[1] == 0; }
    bool any() const { return !empty(); }

    // Lowest vertex in the set, or -1 when empty.
    int first() const {
        if (words_[0]) return std::countr_zero(words_[0]);
        if (words_[1]) return 64 + std::countr_zero(words_[1]);
        return -1;
    }

    // Lowest vertex strictly greater than v, or -1.
    int next(int v) const {
        for (int u = v + 1; u < width_;) {
            uint64_t w = words_[u >> 6] >> (u & 63);
            if (w) return u + std::countr_zero(w);
            u = (u | 63) + 1;
        }
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        same_width(o);
        words_[0] |= o.words_[0];
        words_[1] |= o.words_[1];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        same_width(o);
        words_[0] &= o.words_[0];
        words_[1] &= o.words_[1];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        same_width(o);
        words_[0] &= ~o.words_[0];
        words_[1] &= ~o.words_[1];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        return full(width_) - *this;
    }

    bool operator==(const VertexSet& o) const {
        same_width(o);
        return words_ == o.words_;
    }

    bool is_subset_of(const VertexSet& o) const {
        same_width(o);
        return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
    }

    bool intersects(const VertexSet& o) const {
        same_width(o);
        return (words_[0] & o.words_[0]) != 0 || (words_[1] & o.words_[1]) != 0;
    }

    // Lexicographic set order: the set owning the lowest vertex on which the
    // two differ comes first. Distinct from numeric word order.
    bool lex_less(const VertexSet& o) const {
        same_width(o);
        uint64_t d0 = words_[0] ^ o.words_[0];
        if (d0) return words_[0] >> std::countr_zero(d0) & 1;
        uint64_t d1 = words_[1] ^ o.words_[1];
        if (d1) return words_[1] >> std::countr_zero(d1) & 1;
        return false;
    }

    // Shift all members up by k positions; members pushed past the width are
    // dropped. Used by the DP layers, where sets double as bit masks.
    VertexSet shifted(int k) const {
        check(k >= 0 && k <= max_width, "shift out of range");
        VertexSet r(width_);
        if (k == 0) {
            r.words_ = words_;
        } else if (k < 64) {
            r.words_[0] = words_[0] << k;
            r.words_[1] = (words_[1] << k) | (words_[0] >> (64 - k));
        } else if (k < 128) {
            r.words_[1] = words_[0] << (k - 64);
        }
        r.trim();
        return r;
    }

    size_t hash() const {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ (uint64_t)width_;
        for (uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return (size_t)h;
    }

    std::string to_string() const {
        std::string s = "{";
        for (int v = first(); v >= 0; v = next(v)) {
            if (s.size() > 1) s += ",";
            s += std::to_string(v);
        }
        return s + "}";
    }

    struct iterator {
        const VertexSet* s;
        int v;
        int operator*() const { return v; }
        iterator& operator++() {
            v = s->next(v);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

private:
    static int words_needed(int width) { return (width + 63) >> 6; }

    void same_width(const VertexSet& o) const {
        check(width_ == o.width_, "VertexSet width mismatch");
    }

    void trim() {
        if (width_ < 64) {
            words_[0] &= (width_ == 0) ? 0 : (~0ull >> (64 - width_));
            words_[1] = 0;
        } else if (width_ < 128) {
            words_[1] &= (width_ == 64) ? 0 : (~0ull >> (128 - width_));
        }
    }

    std::array<uint64_t, 2> words_{0, 0};
    int width_ = 0;
};

}  // namespace triangulex

template <>
struct std::hash<triangulex::VertexSet> {
    size_t operator()(const triangulex::VertexSet& s) const { return s.hash(); }
};
