#include "iso/orders.hpp"

#include "iso/binomials.hpp"

namespace iso {

Ordering colex_compare(const Subset& a, const Subset& b) {
    if (popcount64(a.mask) != popcount64(b.mask))
        throw std::invalid_argument("colex_compare: sets must have equal size");
    if (a.mask == b.mask) return Ordering::Equal;
    return a.mask < b.mask ? Ordering::Less : Ordering::Greater;
}

Ordering simplicial_compare(const Subset& a, const Subset& b) {
    int sa = popcount64(a.mask), sb = popcount64(b.mask);
    if (sa != sb) return sa > sb ? Ordering::Less : Ordering::Greater;
    if (a.mask == b.mask) return Ordering::Equal;
    return a.mask < b.mask ? Ordering::Less : Ordering::Greater;
}

u128 colex_rank(const Subset& a) {
    u128 r = 0;
    int i = 0;
    std::uint64_t v = a.mask;
    while (v) {
        int b = __builtin_ctzll(v);
        v &= v - 1;
        ++i;  // b is the i-th smallest element minus one
        r += binom_exact(b, i);
    }
    return r;
}

Subset colex_unrank(int n, int k, u128 rank) {
    if (k < 0 || k > n) throw std::invalid_argument("colex_unrank: bad k");
    if (rank >= binom_exact(n, k)) throw std::invalid_argument("colex_unrank: rank out of range");
    std::uint64_t mask = 0;
    for (int i = k; i >= 1; --i) {
        // largest a with C(a-1, i) <= rank gives the i-th smallest element a
        int a = i;  // C(i-1, i) = 0 <= rank always
        while (a + 1 <= n && binom_exact(a, i) <= rank) ++a;
        mask |= std::uint64_t(1) << (a - 1);
        rank -= binom_exact(a - 1, i);
    }
    return Subset(mask, n);
}

u128 simplicial_rank(const Subset& a) {
    u128 r = 0;
    for (int i = popcount64(a.mask) + 1; i <= a.n; ++i) r += binom_exact(a.n, i);
    return r + colex_rank(a);
}

Subset simplicial_unrank(int n, u128 rank) {
    u128 total = u128(1) << n;
    if (rank >= total) throw std::invalid_argument("simplicial_unrank: rank out of range");
    int size = n;
    while (rank >= binom_exact(n, size)) {
        rank -= binom_exact(n, size);
        --size;
    }
    return colex_unrank(n, size, rank);
}

std::uint64_t next_colex_mask(std::uint64_t v) {
    std::uint64_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (__builtin_ctzll(v) + 1));
}

UniformFamily initial_segment_colex(int n, int k, u128 m) {
    if (k < 0 || k > n) throw std::invalid_argument("initial_segment_colex: bad k");
    if (m > binom_exact(n, k)) throw std::invalid_argument("initial_segment_colex: m out of range");
    UniformFamily f(n, k);
    f.members.reserve(std::size_t(m));
    if (m == 0) return f;
    if (k == 0) {
        f.members.push_back(0);
        return f;
    }
    std::uint64_t v = (std::uint64_t(1) << k) - 1;
    for (u128 i = 0; i < m; ++i) {
        f.members.push_back(v);
        v = next_colex_mask(v);
    }
    return f;
}

CubeFamily initial_segment_simplicial(int n, u128 m) {
    if (m > (u128(1) << n)) throw std::invalid_argument("initial_segment_simplicial: m out of range");
    CubeFamily f(n);
    for (int size = n; size >= 0 && m > 0; --size) {
        u128 layer = binom_exact(n, size);
        u128 take = m < layer ? m : layer;
        if (size == 0) {
            f.add(0);
        } else {
            std::uint64_t v = (std::uint64_t(1) << size) - 1;
            for (u128 i = 0; i < take; ++i) {
                f.add(std::uint32_t(v));
                v = next_colex_mask(v);
            }
        }
        m -= take;
    }
    return f;
}

bool is_initial_segment_colex(const UniformFamily& f) {
    if (f.members.empty()) return true;
    if (f.k == 0) return true;
    std::uint64_t v = (std::uint64_t(1) << f.k) - 1;
    for (std::uint64_t m : f.members) {
        if (m != v) return false;
        v = next_colex_mask(v);
    }
    return true;
}

bool is_initial_segment_simplicial(const CubeFamily& f) {
    return f == initial_segment_simplicial(f.n, f.size());
}

}  // namespace iso
