#include "iso/subsets.hpp"

#include <algorithm>

namespace iso {

Subset Subset::of(const std::vector<int>& elems, int n) {
    std::uint64_t m = 0;
    for (int e : elems) {
        if (e < 1 || e > n) throw std::invalid_argument("Subset: element out of range");
        std::uint64_t b = std::uint64_t(1) << (e - 1);
        if (m & b) throw std::invalid_argument("Subset: duplicate element");
        m |= b;
    }
    return Subset(m, n);
}

CubeFamily CubeFamily::from_members(int n, const std::vector<std::uint32_t>& masks) {
    CubeFamily f(n);
    for (auto m : masks) f.add(m);
    return f;
}

CubeFamily CubeFamily::full(int n) {
    CubeFamily f(n);
    std::uint64_t u = f.bits.universe();
    for (std::size_t i = 0; i < f.bits.w.size(); ++i) f.bits.w[i] = ~0ull;
    if (u < 64) f.bits.w[0] = (std::uint64_t(1) << u) - 1;
    return f;
}

UniformFamily UniformFamily::from_members(int n, int k, std::vector<std::uint64_t> masks) {
    UniformFamily f(n, k);
    std::sort(masks.begin(), masks.end());
    for (std::size_t i = 0; i < masks.size(); ++i) {
        std::uint64_t m = masks[i];
        if (popcount64(m) != k) throw std::invalid_argument("UniformFamily: member has wrong size");
        if (n < 64 && (m >> n) != 0) throw std::invalid_argument("UniformFamily: member out of range");
        if (i > 0 && masks[i - 1] == m) throw std::invalid_argument("UniformFamily: duplicate member");
    }
    f.members = std::move(masks);
    return f;
}

bool UniformFamily::contains(std::uint64_t mask) const {
    return std::binary_search(members.begin(), members.end(), mask);
}

CubeFamily vertex_boundary(const CubeFamily& f) {
    CubeFamily r(f.n);
    for (int b = 0; b < f.n; ++b) r.bits |= f.bits.shifted(b);
    r.bits.andnot_assign(f.bits);
    return r;
}

UniformFamily lower_shadow(const UniformFamily& f) {
    if (f.k == 0) throw std::invalid_argument("lower_shadow: k = 0 has no shadow layer");
    std::vector<std::uint64_t> out;
    out.reserve(f.members.size() * std::size_t(f.k));
    for (std::uint64_t m : f.members) {
        std::uint64_t v = m;
        while (v) {
            std::uint64_t low = v & (~v + 1);
            out.push_back(m ^ low);
            v ^= low;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    UniformFamily r(f.n, f.k - 1);
    r.members = std::move(out);
    return r;
}

CubeFamily iterated_neighborhood(const CubeFamily& f, int i) {
    if (i < 0) throw std::invalid_argument("iterated_neighborhood: i must be >= 0");
    CubeFamily cur = f;
    for (int step = 0; step < i; ++step) {
        CubeBits acc = cur.bits;
        for (int b = 0; b < cur.n; ++b) acc |= cur.bits.shifted(b);
        if (acc == cur.bits) break;  // stabilized
        cur.bits = acc;
    }
    return cur;
}

std::pair<CubeFamily, CubeFamily> sections(const CubeFamily& f, int coord) {
    if (f.n < 2) throw std::invalid_argument("sections: n must be >= 2");
    if (coord < 1 || coord > f.n) throw std::invalid_argument("sections: coord out of range");
    CubeFamily a0(f.n - 1), a1(f.n - 1);
    const std::uint32_t lowmask = (std::uint32_t(1) << (coord - 1)) - 1;
    f.bits.for_each([&](std::uint32_t x) {
        std::uint32_t y = (x & lowmask) | ((x >> coord) << (coord - 1));
        if ((x >> (coord - 1)) & 1)
            a1.add(y);
        else
            a0.add(y);
    });
    return {a0, a1};
}

namespace {
template <class Masks>
bool pairwise_t_intersecting(const Masks& ms, int t) {
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (popcount64(ms[i]) < t) return false;  // covers A = B
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (popcount64(std::uint64_t(ms[i]) & std::uint64_t(ms[j])) < t) return false;
    }
    return true;
}
}  // namespace

bool is_t_intersecting(const CubeFamily& f, int t) {
    if (t < 1) throw std::invalid_argument("is_t_intersecting: t must be >= 1");
    return pairwise_t_intersecting(f.members(), t);
}

bool is_t_intersecting(const UniformFamily& f, int t) {
    if (t < 1) throw std::invalid_argument("is_t_intersecting: t must be >= 1");
    return pairwise_t_intersecting(f.members, t);
}

namespace {
bool matching_dfs(const std::vector<std::uint64_t>& ms, std::size_t idx, std::uint64_t used,
                  int have, int want, int n, int k) {
    if (have == want) return true;
    // not enough free elements left for the missing members
    if (k > 0 && (n - popcount64(used)) / k < want - have) return false;
    for (std::size_t i = idx; i < ms.size(); ++i) {
        if (ms.size() - i < std::size_t(want - have)) return false;
        if (ms[i] & used) continue;
        if (matching_dfs(ms, i + 1, used | ms[i], have + 1, want, n, k)) return true;
    }
    return false;
}
}  // namespace

bool has_matching_of_size(const UniformFamily& f, int s) {
    if (s <= 0) return true;
    if (std::uint64_t(s) > f.size()) return false;
    if (std::int64_t(s) * f.k > f.n) return false;
    return matching_dfs(f.members, 0, 0, 0, s, f.n, f.k);
}

std::uint64_t symdiff_size(const CubeFamily& f, const CubeFamily& g) {
    if (f.n != g.n) throw std::invalid_argument("symdiff_size: mismatched n");
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < f.bits.w.size(); ++i)
        c += std::uint64_t(popcount64(f.bits.w[i] ^ g.bits.w[i]));
    return c;
}

bool is_upset(const CubeFamily& f) {
    for (int b = 0; b < f.n; ++b) {
        // members without element b+1, pushed up one coordinate
        CubeBits lo = f.bits;
        for (std::size_t i = 0; i < lo.w.size(); ++i)
            lo.w[i] &= ~CubeBits::coord_pattern(b, i);
        CubeBits up = lo.shifted(b);
        up.andnot_assign(f.bits);
        if (!up.none()) return false;
    }
    return true;
}

namespace {
std::uint64_t apply_perm(std::uint64_t m, const std::vector<int>& perm) {
    std::uint64_t r = 0;
    std::uint64_t v = m;
    while (v) {
        int b = __builtin_ctzll(v);
        v &= v - 1;
        r |= std::uint64_t(1) << (perm[b] - 1);
    }
    return r;
}
void check_perm(const std::vector<int>& perm, int n) {
    if (int(perm.size()) != n) throw std::invalid_argument("relabel: permutation size != n");
    std::uint64_t seen = 0;
    for (int v : perm) {
        if (v < 1 || v > n) throw std::invalid_argument("relabel: permutation value out of range");
        std::uint64_t b = std::uint64_t(1) << (v - 1);
        if (seen & b) throw std::invalid_argument("relabel: permutation not injective");
        seen |= b;
    }
}
}  // namespace

CubeFamily relabel(const CubeFamily& f, const std::vector<int>& perm) {
    check_perm(perm, f.n);
    CubeFamily r(f.n);
    f.bits.for_each([&](std::uint32_t x) { r.add(std::uint32_t(apply_perm(x, perm))); });
    return r;
}

UniformFamily relabel(const UniformFamily& f, const std::vector<int>& perm) {
    check_perm(perm, f.n);
    std::vector<std::uint64_t> ms;
    ms.reserve(f.members.size());
    for (std::uint64_t m : f.members) ms.push_back(apply_perm(m, perm));
    return UniformFamily::from_members(f.n, f.k, std::move(ms));
}

CubeFamily translate(const CubeFamily& f, std::uint32_t c) {
    if (c >> f.n) throw std::invalid_argument("translate: mask out of range");
    CubeFamily r(f.n);
    r.bits = f.bits.xor_translate(c);
    return r;
}

UniformFamily cube_to_uniform(const CubeFamily& f) {
    auto ms = f.members();
    if (ms.empty()) throw std::invalid_argument("cube_to_uniform: empty family has no uniform size");
    int k = popcount64(ms[0]);
    std::vector<std::uint64_t> out;
    out.reserve(ms.size());
    for (auto m : ms) {
        if (popcount64(m) != k) throw std::invalid_argument("cube_to_uniform: family is not uniform");
        out.push_back(m);
    }
    return UniformFamily::from_members(f.n, k, std::move(out));
}

CubeFamily uniform_to_cube(const UniformFamily& f) {
    if (f.n > 30) throw std::invalid_argument("uniform_to_cube: n > 30");
    CubeFamily r(f.n);
    for (auto m : f.members) r.add(std::uint32_t(m));
    return r;
}

}  // namespace iso
