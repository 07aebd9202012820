#include "iso/constructions.hpp"

#include <algorithm>

#include "iso/binomials.hpp"
#include "iso/orders.hpp"

namespace iso {

CubeFamily hamming_ball(int n, int radius, const Subset& center) {
    if (center.n != n) throw std::invalid_argument("hamming_ball: center has wrong ground set");
    if (radius < 0 || radius > n) throw std::invalid_argument("hamming_ball: radius out of range");
    CubeFamily f(n);
    std::uint32_t c = std::uint32_t(center.mask);
    for (std::uint32_t x = 0; x < (std::uint32_t(1) << n); ++x)
        if (popcount64(x ^ c) <= radius) f.add(x);
    return f;
}

namespace {
void add_clique_layer(CubeFamily& f, int s, int k) {
    // all k-subsets of [s]
    if (k == 0) {
        f.add(0);
        return;
    }
    if (k > s) return;
    std::uint64_t v = (std::uint64_t(1) << k) - 1;
    u128 cnt = binom_exact(s, k);
    for (u128 i = 0; i < cnt; ++i) {
        f.add(std::uint32_t(v));
        v = next_colex_mask(v);
    }
}
void add_upper_layers(CubeFamily& f, int n, int from) {
    for (int i = from; i <= n; ++i) add_clique_layer(f, n, i);
}
}  // namespace

CubeFamily gen_ball_G1(int n, int k, int s) {
    if (!(1 <= k && k <= s && s <= n)) throw std::invalid_argument("gen_ball_G1: need k <= s <= n");
    CubeFamily f(n);
    add_upper_layers(f, n, k + 1);
    add_clique_layer(f, s, k);
    return f;
}

CubeFamily gen_ball_G2(int n, int k, int s) {
    if (!(1 <= k && k + 1 <= s && s <= n))
        throw std::invalid_argument("gen_ball_G2: need k+1 <= s <= n");
    CubeFamily f(n);
    add_upper_layers(f, n, k + 1);
    add_clique_layer(f, s - 1, k);
    add_clique_layer(f, s - 1, k - 1);
    return f;
}

CubeFamily perturbed_segment_J(int n, u128 m, u128 D, u128 E) {
    if (D > m) throw std::invalid_argument("perturbed_segment_J: D > m");
    if (m + E > (u128(1) << n)) throw std::invalid_argument("perturbed_segment_J: m + E > 2^n");
    CubeFamily f = initial_segment_simplicial(n, m + E);
    CubeFamily mid = initial_segment_simplicial(n, m);
    CubeFamily low = initial_segment_simplicial(n, m - D);
    // keep I_{m-D} plus the slice I_{m+E} \ I_m
    f.bits.andnot_assign(mid.bits);
    f.bits |= low.bits;
    return f;
}

UniformFamily perturbed_clique_Jk(int n, int k, int s, u128 E1, u128 E2) {
    if (!(1 <= k && k <= s)) throw std::invalid_argument("perturbed_clique_Jk: need k <= s");
    u128 cap = binom_exact(s - 1, k - 1);
    if (E1 > cap || E2 > cap)
        throw std::invalid_argument("perturbed_clique_Jk: E1, E2 must be <= C(s-1,k-1)");
    if (s > n || binom_exact(s, k) + E2 > binom_exact(n, k))
        throw std::invalid_argument("perturbed_clique_Jk: family does not fit in C(n,k)");
    UniformFamily head = initial_segment_colex(n, k, binom_exact(s - 1, k) + E1);
    UniformFamily wide = initial_segment_colex(n, k, binom_exact(s, k) + E2);
    std::vector<std::uint64_t> ms(head.members);
    ms.insert(ms.end(), wide.members.begin() + std::size_t(binom_exact(s, k)), wide.members.end());
    return UniformFamily::from_members(n, k, std::move(ms));
}

CubeFamily projected_ball(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("projected_ball: n must be odd and >= 3");
    int k = (n + 1) / 2;
    std::uint32_t core = (std::uint32_t(1) << (n - 2)) - 1;
    CubeFamily f(n);
    for (std::uint32_t x = 0; x < (std::uint32_t(1) << n); ++x)
        if (popcount64(x & core) >= k - 1) f.add(x);
    return f;
}

UniformFamily star(int n, int k, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("star: element out of range");
    if (k < 1 || k > n) throw std::invalid_argument("star: bad k");
    std::vector<std::uint64_t> ms;
    std::uint64_t bit = std::uint64_t(1) << (i - 1);
    UniformFamily rest = initial_segment_colex(n - 1, k - 1, binom_exact(n - 1, k - 1));
    ms.reserve(rest.members.size());
    for (std::uint64_t r : rest.members) {
        // embed [n-1] as [n] \ {i}
        std::uint64_t lo = r & (bit - 1);
        std::uint64_t hi = (r >> (i - 1)) << i;
        ms.push_back(lo | hi | bit);
    }
    return UniformFamily::from_members(n, k, std::move(ms));
}

UniformFamily cover_ST(int n, int k, const Subset& T) {
    if (T.n != n) throw std::invalid_argument("cover_ST: T has wrong ground set");
    if (k < 1 || k > n) throw std::invalid_argument("cover_ST: bad k");
    std::vector<std::uint64_t> ms;
    UniformFamily layer = initial_segment_colex(n, k, binom_exact(n, k));
    for (std::uint64_t m : layer.members)
        if (m & T.mask) ms.push_back(m);
    return UniformFamily::from_members(n, k, std::move(ms));
}

UniformFamily ekr_extremal_F(int n, int k, u128 E) {
    if (!(2 * k < n)) throw std::invalid_argument("ekr_extremal_F: requires 2k < n");
    if (E > binom_exact(n - 2, k - 1))
        throw std::invalid_argument("ekr_extremal_F: E out of range");
    // final E colex k-sets avoiding element 1
    std::vector<std::uint64_t> avoid1;
    UniformFamily layer = initial_segment_colex(n, k, binom_exact(n, k));
    for (std::uint64_t m : layer.members)
        if (!(m & 1)) avoid1.push_back(m);
    std::vector<std::uint64_t> f_out(avoid1.end() - std::size_t(E), avoid1.end());
    // star sets meeting every member of f_out
    std::vector<std::uint64_t> ms;
    for (std::uint64_t m : star(n, k, 1).members) {
        bool hits_all = true;
        for (std::uint64_t b : f_out)
            if (!(m & b)) {
                hits_all = false;
                break;
            }
        if (hits_all) ms.push_back(m);
    }
    ms.insert(ms.end(), f_out.begin(), f_out.end());
    return UniformFamily::from_members(n, k, std::move(ms));
}

KatonaG katona_extremal_G(int n, int k, u128 E) {
    int t = 2 * k - n;
    if (t < 2) throw std::invalid_argument("katona_extremal_G: requires t = 2k - n >= 2");
    if (E > binom_exact(n - 1, k - 1)) throw std::invalid_argument("katona_extremal_G: E out of range");
    u128 layer_k = binom_exact(n, k);
    u128 budget = binom_exact(n, n - k + 1) - E;
    // minimum E' with |shadow^{t-1}(I^(k)_{C(n,k)-E'})| <= C(n,n-k+1) - E;
    // the scanned quantity must be non-increasing in E'
    u128 eprime = 0;
    u128 prev = ~u128(0);
    for (;; ++eprime) {
        if (eprime > layer_k) throw std::runtime_error("katona_extremal_G: no feasible E'");
        u128 sh = kk_iterated_shadow(n, k, layer_k - eprime, t - 1);
        if (sh > prev) throw std::runtime_error("katona_extremal_G: shadow scan not monotone");
        prev = sh;
        if (sh <= budget) break;
    }
    CubeFamily f(n);
    add_upper_layers(f, n, k);
    UniformFamily add = initial_segment_colex(n, k - 1, E);
    for (std::uint64_t m : add.members) f.add(std::uint32_t(m));
    // delete the final E' colex k-sets
    UniformFamily full = initial_segment_colex(n, k, layer_k);
    for (u128 i = 0; i < eprime; ++i)
        f.remove(std::uint32_t(full.members[full.members.size() - 1 - std::size_t(i)]));
    return KatonaG{f, eprime};
}

}  // namespace iso
