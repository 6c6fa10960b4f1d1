#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace bcross {

// Fixed-width bit set indexing the vertices of a ground set or the diagonals
// of a crossing universe. 256 bits covers every polygon this tool enumerates;
// ground-set construction enforces the cap.
struct FaceBits {
    static constexpr int kWords = 4;
    static constexpr int kCapacity = kWords * 64;

    std::array<std::uint64_t, kWords> w{};

    static FaceBits from_indices(const std::vector<int>& idx) {
        FaceBits f;
        for (int i : idx) f.set(i);
        return f;
    }

    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    FaceBits with(int i) const {
        FaceBits f = *this;
        f.set(i);
        return f;
    }
    FaceBits without(int i) const {
        FaceBits f = *this;
        f.reset(i);
        return f;
    }

    friend FaceBits operator&(const FaceBits& a, const FaceBits& b) {
        FaceBits f;
        for (int i = 0; i < kWords; ++i) f.w[i] = a.w[i] & b.w[i];
        return f;
    }
    friend FaceBits operator|(const FaceBits& a, const FaceBits& b) {
        FaceBits f;
        for (int i = 0; i < kWords; ++i) f.w[i] = a.w[i] | b.w[i];
        return f;
    }
    // set difference
    FaceBits and_not(const FaceBits& b) const {
        FaceBits f;
        for (int i = 0; i < kWords; ++i) f.w[i] = w[i] & ~b.w[i];
        return f;
    }

    bool is_subset_of(const FaceBits& b) const {
        for (int i = 0; i < kWords; ++i)
            if (w[i] & ~b.w[i]) return false;
        return true;
    }
    bool intersects(const FaceBits& b) const {
        for (int i = 0; i < kWords; ++i)
            if (w[i] & b.w[i]) return true;
        return false;
    }

    // Index of the lowest set bit, -1 when empty.
    int lowest() const {
        for (int i = 0; i < kWords; ++i)
            if (w[i]) return i * 64 + std::countr_zero(w[i]);
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t x = w[i];
            while (x) {
                f(i * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    friend bool operator==(const FaceBits&, const FaceBits&) = default;
    // Arbitrary total order; fine for map keys, not for canonical listing.
    friend std::strong_ordering operator<=>(const FaceBits& a, const FaceBits& b) {
        return a.w <=> b.w;
    }
};

// Lexicographic order of the ascending index sequences; this is the order
// canonical facet lists are sorted in.
inline bool index_lex_less(const FaceBits& a, const FaceBits& b) {
    auto ia = a.indices(), ib = b.indices();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

}  // namespace bcross
