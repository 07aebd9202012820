#pragma once

// Dense bitset over the 2^n vertices of the Boolean cube, with the
// bit-parallel coordinate-flip shift that all boundary/compression
// operators are built from.

#include <cassert>
#include <cstdint>
#include <vector>

namespace iso {

inline int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

struct CubeBits {
    int n = 0;
    std::vector<std::uint64_t> w;  // bit x set <=> vertex mask x is a member

    CubeBits() = default;
    explicit CubeBits(int n_) : n(n_), w(words_for(n_), 0) { assert(n >= 0 && n <= 30); }

    static std::size_t words_for(int n) { return n <= 6 ? 1 : (std::size_t(1) << (n - 6)); }
    std::uint64_t universe() const { return std::uint64_t(1) << n; }

    bool test(std::uint32_t x) const { return (w[x >> 6] >> (x & 63)) & 1; }
    void set(std::uint32_t x) { w[x >> 6] |= std::uint64_t(1) << (x & 63); }
    void reset(std::uint32_t x) { w[x >> 6] &= ~(std::uint64_t(1) << (x & 63)); }

    std::uint64_t count() const {
        std::uint64_t c = 0;
        for (std::uint64_t v : w) c += std::uint64_t(popcount64(v));
        return c;
    }
    bool none() const {
        for (std::uint64_t v : w)
            if (v) return false;
        return true;
    }

    bool operator==(const CubeBits& o) const { return n == o.n && w == o.w; }

    CubeBits& operator|=(const CubeBits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
        return *this;
    }
    CubeBits& operator&=(const CubeBits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
        return *this;
    }
    CubeBits& operator^=(const CubeBits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
        return *this;
    }
    // this &= ~o
    CubeBits& andnot_assign(const CubeBits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
        return *this;
    }

    // Repeating 64-bit patterns: positions x with index bit b clear, b < 6.
    static constexpr std::uint64_t kLow[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
        0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};

    // 64-bit mask of positions in word `wi` whose global index has bit b set.
    static std::uint64_t coord_pattern(int b, std::size_t wi) {
        if (b < 6) return ~kLow[b];
        return ((wi >> (b - 6)) & 1) ? ~0ull : 0ull;
    }

    // image of the member set under x -> x ^ (1 << b)
    CubeBits shifted(int b) const {
        assert(b >= 0 && b < n);
        CubeBits r(n);
        if (b < 6) {
            const std::uint64_t lo = kLow[b];
            const int s = 1 << b;
            for (std::size_t i = 0; i < w.size(); ++i)
                r.w[i] = ((w[i] & lo) << s) | ((w[i] >> s) & lo);
        } else {
            const std::size_t d = std::size_t(1) << (b - 6);
            for (std::size_t i = 0; i < w.size(); ++i) r.w[i] = w[i ^ d];
        }
        return r;
    }

    // image under x -> x ^ c
    CubeBits xor_translate(std::uint32_t c) const {
        CubeBits r = *this;
        for (int b = 0; b < n; ++b)
            if ((c >> b) & 1) r = r.shifted(b);
        return r;
    }

    // members A with U subset A and V disjoint from A (U, V as element masks)
    CubeBits restrict_subcube(std::uint32_t umask, std::uint32_t vmask) const {
        CubeBits r = *this;
        for (int b = 0; b < n; ++b) {
            bool inU = (umask >> b) & 1, inV = (vmask >> b) & 1;
            if (!inU && !inV) continue;
            for (std::size_t i = 0; i < r.w.size(); ++i) {
                std::uint64_t p = coord_pattern(b, i);
                r.w[i] &= inU ? p : ~p;
            }
        }
        return r;
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::uint64_t v = w[i];
            while (v) {
                int b = __builtin_ctzll(v);
                v &= v - 1;
                f(std::uint32_t((i << 6) | unsigned(b)));
            }
        }
    }

    std::vector<std::uint32_t> members() const {
        std::vector<std::uint32_t> m;
        m.reserve(std::size_t(count()));
        for_each([&](std::uint32_t x) { m.push_back(x); });
        return m;
    }
};

// deterministic splittable RNG; instance streams are derived by counter so
// results do not depend on how work is split across threads
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    static Rng for_instance(std::uint64_t seed, std::uint64_t idx) {
        return Rng(splitmix64(seed ^ (0xabcd1234ull + idx * 0x9e3779b97f4a7c15ull)));
    }
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t m) { return m ? next() % m : 0; }
    double real01() { return double(next() >> 11) * 0x1.0p-53; }
};

}  // namespace iso
