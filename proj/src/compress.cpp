#include "iso/compress.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "iso/binomials.hpp"
#include "iso/orders.hpp"

namespace iso {

namespace {

void check_pair(const Subset& U, const Subset& V, int n) {
    if (U.n != n || V.n != n) throw std::invalid_argument("compression: U, V must live on [n]");
    if (U.mask & V.mask) throw std::invalid_argument("compression: U and V must be disjoint");
}

// dst = src shifted along coordinate bit b
void shift_into(const CubeBits& src, int b, CubeBits& dst) {
    if (b < 6) {
        const std::uint64_t lo = CubeBits::kLow[b];
        const int s = 1 << b;
        for (std::size_t i = 0; i < src.w.size(); ++i)
            dst.w[i] = ((src.w[i] & lo) << s) | ((src.w[i] >> s) & lo);
    } else {
        const std::size_t d = std::size_t(1) << (b - 6);
        for (std::size_t i = 0; i < src.w.size(); ++i) dst.w[i] = src.w[i ^ d];
    }
}

void xor_translate_inplace(CubeBits& a, std::uint32_t c, CubeBits& scratch) {
    CubeBits* cur = &a;
    CubeBits* oth = &scratch;
    int b = 0;
    for (std::uint32_t m = c; m; m >>= 1, ++b) {
        if (m & 1) {
            shift_into(*cur, b, *oth);
            std::swap(cur, oth);
        }
    }
    if (cur != &a) a.w = cur->w;
}

void restrict_subcube_inplace(CubeBits& a, std::uint32_t umask, std::uint32_t vmask) {
    int b = 0;
    for (std::uint32_t m = umask | vmask; m; m >>= 1, ++b) {
        if (!(m & 1)) continue;
        bool inU = (umask >> b) & 1;
        for (std::size_t i = 0; i < a.w.size(); ++i) {
            std::uint64_t p = CubeBits::coord_pattern(b, i);
            a.w[i] &= inU ? p : ~p;
        }
    }
}

// scratch-buffer engine for the schedules
struct Engine {
    int n;
    CubeBits f;
    CubeBits t1, t2, t3;

    explicit Engine(int n_, const CubeBits& f_) : n(n_), f(f_), t1(n_), t2(n_), t3(n_) {}

    // if C_{U,V} moves f, leave the moved target vertices in t1
    bool effective(std::uint32_t u, std::uint32_t v) {
        t1.w = f.w;
        restrict_subcube_inplace(t1, u, v);
        bool any = false;
        for (std::uint64_t x : t1.w)
            if (x) {
                any = true;
                break;
            }
        if (!any) return false;
        xor_translate_inplace(t1, u | v, t2);
        t1.andnot_assign(f);
        for (std::uint64_t x : t1.w)
            if (x) return true;
        return false;
    }

    bool fixed(std::uint32_t u, std::uint32_t v) { return !effective(u, v); }

    // all (|U|-1, |V|-1) sub-pairs fix f; vacuous when U or V is empty
    bool subcondition(std::uint32_t u, std::uint32_t v) {
        if (u == 0 || v == 0) return true;
        for (std::uint32_t ub = u; ub;) {
            std::uint32_t ulow = ub & (~ub + 1);
            ub ^= ulow;
            for (std::uint32_t vb = v; vb;) {
                std::uint32_t vlow = vb & (~vb + 1);
                vb ^= vlow;
                if (!fixed(u ^ ulow, v ^ vlow)) return false;
            }
        }
        return true;
    }

    // apply the move whose targets are in t1
    std::uint64_t apply(std::uint32_t u, std::uint32_t v) {
        std::uint64_t moved = t1.count();
        t3.w = t1.w;
        xor_translate_inplace(t3, u | v, t2);  // sources
        f.andnot_assign(t3);
        f |= t1;
        return moved;
    }

    std::uint64_t boundary_size() {
        t1.w.assign(t1.w.size(), 0);
        for (int b = 0; b < n; ++b) {
            shift_into(f, b, t2);
            t1 |= t2;
        }
        t1.andnot_assign(f);
        return t1.count();
    }

    std::uint64_t shadow_size() {
        t1.w.assign(t1.w.size(), 0);
        f.for_each([&](std::uint32_t m) {
            std::uint32_t v = m;
            while (v) {
                std::uint32_t low = v & (~v + 1);
                t1.set(m ^ low);
                v ^= low;
            }
        });
        return t1.count();
    }

    bool upset() const {
        for (int b = 0; b < n; ++b) {
            CubeBits lo = f;
            for (std::size_t i = 0; i < lo.w.size(); ++i)
                lo.w[i] &= ~CubeBits::coord_pattern(b, i);
            CubeBits up(n);
            shift_into(lo, b, up);
            up.andnot_assign(f);
            if (!up.none()) return false;
        }
        return true;
    }
};

std::vector<int> mask_elements(std::uint32_t m) {
    std::vector<int> r;
    for (int e = 1; m; ++e, m >>= 1)
        if (m & 1) r.push_back(e);
    return r;
}

[[noreturn]] void stall(const CompressionTrace& t, const char* what) {
    std::ostringstream os;
    os << what << "; trace: " << t.to_json();
    throw std::runtime_error(os.str());
}

void audit(bool ok, const CompressionTrace& t, const char* what) {
    if (!ok) stall(t, what);
}

}  // namespace

std::string CompressionTrace::to_json() const {
    nlohmann::json j;
    j["schedule"] = schedule;
    j["n"] = n;
    if (k >= 0) j["k"] = k;
    if (schedule == "harper" || schedule == "monotonize") j["l0"] = l0;
    auto fam = [](const std::vector<std::uint64_t>& ms) {
        nlohmann::json a = nlohmann::json::array();
        for (auto m : ms) a.push_back(mask_elements(std::uint32_t(m)));
        return a;
    };
    j["initial"] = fam(initial_members);
    j["final"] = fam(final_members);
    nlohmann::json steps_j = nlohmann::json::array();
    for (const auto& s : steps) {
        nlohmann::json sj;
        sj["u"] = mask_elements(s.u_mask);
        sj["v"] = mask_elements(s.v_mask);
        sj["size_before"] = s.size_before;
        sj["size_after"] = s.size_after;
        sj["boundary_before"] = s.boundary_before;
        sj["boundary_after"] = s.boundary_after;
        sj["moved"] = s.moved;
        steps_j.push_back(sj);
    }
    j["steps"] = steps_j;
    return j.dump();
}

CubeFamily compress_UV(const CubeFamily& f, const Subset& U, const Subset& V) {
    check_pair(U, V, f.n);
    Engine e(f.n, f.bits);
    CubeFamily out = f;
    if (e.effective(std::uint32_t(U.mask), std::uint32_t(V.mask))) {
        e.apply(std::uint32_t(U.mask), std::uint32_t(V.mask));
        out.bits = e.f;
    }
    return out;
}

UniformFamily compress_UV(const UniformFamily& f, const Subset& U, const Subset& V) {
    check_pair(U, V, f.n);
    if (popcount64(U.mask) != popcount64(V.mask))
        throw std::invalid_argument("compress_UV: |U| != |V| does not preserve uniformity");
    std::vector<std::uint64_t> out;
    out.reserve(f.members.size());
    const std::uint64_t c = U.mask | V.mask;
    for (std::uint64_t m : f.members) {
        if ((m & U.mask) == U.mask && !(m & V.mask) && !f.contains(m ^ c))
            out.push_back(m ^ c);
        else
            out.push_back(m);
    }
    return UniformFamily::from_members(f.n, f.k, std::move(out));
}

bool is_UV_fixed(const CubeFamily& f, const Subset& U, const Subset& V) {
    check_pair(U, V, f.n);
    Engine e(f.n, f.bits);
    return e.fixed(std::uint32_t(U.mask), std::uint32_t(V.mask));
}

bool is_UV_fixed(const UniformFamily& f, const Subset& U, const Subset& V) {
    check_pair(U, V, f.n);
    const std::uint64_t c = U.mask | V.mask;
    for (std::uint64_t m : f.members)
        if ((m & U.mask) == U.mask && !(m & V.mask) && !f.contains(m ^ c)) return false;
    return true;
}

bool subcompression_condition(const CubeFamily& f, const Subset& U, const Subset& V) {
    check_pair(U, V, f.n);
    Engine e(f.n, f.bits);
    return e.subcondition(std::uint32_t(U.mask), std::uint32_t(V.mask));
}

bool subcompression_condition(const UniformFamily& f, const Subset& U, const Subset& V) {
    check_pair(U, V, f.n);
    if (U.mask == 0 || V.mask == 0) return true;  // no sub-pairs exist
    for (std::uint64_t ub = U.mask; ub;) {
        std::uint64_t ulow = ub & (~ub + 1);
        ub ^= ulow;
        for (std::uint64_t vb = V.mask; vb;) {
            std::uint64_t vlow = vb & (~vb + 1);
            vb ^= vlow;
            if (!is_UV_fixed(f, Subset(U.mask ^ ulow, f.n), Subset(V.mask ^ vlow, f.n)))
                return false;
        }
    }
    return true;
}

namespace {

CompressionStep make_step(std::uint32_t u, std::uint32_t v, std::uint64_t sb, std::uint64_t sa,
                          std::uint64_t bb, std::uint64_t ba, std::uint64_t moved) {
    CompressionStep s;
    s.u_mask = u;
    s.v_mask = v;
    s.size_before = sb;
    s.size_after = sa;
    s.boundary_before = bb;
    s.boundary_after = ba;
    s.moved = moved;
    return s;
}

// enumerate disjoint (U,V) masks of the given sizes in (colex V, colex U)
// order and call fn(u, v); fn returns true to stop
template <class Fn>
bool scan_pairs(int n, int usize, int vsize, Fn fn) {
    const std::uint64_t top = std::uint64_t(1) << n;
    std::uint64_t v = vsize == 0 ? 0 : (std::uint64_t(1) << vsize) - 1;
    do {
        if (usize == 0) {
            if (fn(0u, std::uint32_t(v))) return true;
        } else {
            std::uint64_t u = (std::uint64_t(1) << usize) - 1;
            for (; u < top; u = next_colex_mask(u)) {
                if (u & v) continue;
                if (fn(std::uint32_t(u), std::uint32_t(v))) return true;
            }
        }
        if (vsize == 0) break;
        v = next_colex_mask(v);
    } while (v < top);
    return false;
}

}  // namespace

std::pair<CubeFamily, CompressionTrace> monotonize(const CubeFamily& f) {
    CompressionTrace t;
    t.schedule = "monotonize";
    t.n = f.n;
    for (auto m : f.members()) t.initial_members.push_back(m);
    Engine e(f.n, f.bits);
    std::uint64_t size = e.f.count();
    std::uint64_t bnd = e.boundary_size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= f.n; ++i) {
            std::uint32_t v = std::uint32_t(1) << (i - 1);
            if (!e.effective(0, v)) continue;
            std::uint64_t moved = e.apply(0, v);
            std::uint64_t nsize = e.f.count();
            std::uint64_t nbnd = e.boundary_size();
            t.steps.push_back(make_step(0, v, size, nsize, bnd, nbnd, moved));
            audit(nsize == size, t, "monotonize: size changed");
            audit(nbnd <= bnd, t, "monotonize: vertex boundary increased");
            bnd = nbnd;
            changed = true;
        }
    }
    t.l0 = t.steps.size();
    CubeFamily out(f.n);
    out.bits = e.f;
    audit(is_upset(out), t, "monotonize: result is not an upset");
    for (auto m : out.members()) t.final_members.push_back(m);
    return {out, t};
}

CompressionTrace kk_compression_schedule(const UniformFamily& f) {
    if (f.k < 1) throw std::invalid_argument("kk_compression_schedule: k must be >= 1");
    if (f.n > 24) throw std::invalid_argument("kk_compression_schedule: n > 24 not supported");
    CompressionTrace t;
    t.schedule = "kk";
    t.n = f.n;
    t.k = f.k;
    t.initial_members = f.members;

    CubeBits bits(f.n);
    for (auto m : f.members) bits.set(std::uint32_t(m));
    Engine e(f.n, bits);
    std::uint64_t size = e.f.count();
    std::uint64_t shadow = e.shadow_size();
    u128 potential = 0;
    for (auto m : f.members) potential += m;

    UniformFamily target = initial_segment_colex(f.n, f.k, f.size());
    CubeBits target_bits(f.n);
    for (auto m : target.members) target_bits.set(std::uint32_t(m));

    while (!(e.f == target_bits)) {
        std::uint32_t bu = 0, bv = 0;
        bool found = false;
        for (int u = 1; u <= f.k && !found; ++u) {
            found = scan_pairs(f.n, u, u, [&](std::uint32_t um, std::uint32_t vm) {
                if (vm >= um) return false;  // need V before U in colex
                if (!e.effective(um, vm)) return false;
                if (!e.subcondition(um, vm)) return false;
                // effective() left the moved targets in t1; recompute at apply
                bu = um;
                bv = vm;
                return true;
            });
        }
        if (!found) stall(t, "kk_compression_schedule: no eligible pair but family is not an initial segment");
        e.effective(bu, bv);  // reload targets into t1
        std::uint64_t moved = e.apply(bu, bv);
        std::uint64_t nsize = e.f.count();
        std::uint64_t nshadow = e.shadow_size();
        u128 npot = 0;
        e.f.for_each([&](std::uint32_t m) { npot += m; });
        t.steps.push_back(make_step(bu, bv, size, nsize, shadow, nshadow, moved));
        audit(nsize == size, t, "kk_compression_schedule: size changed");
        audit(nshadow <= shadow, t, "kk_compression_schedule: shadow increased");
        audit(npot < potential, t, "kk_compression_schedule: rank-sum potential did not decrease");
        shadow = nshadow;
        potential = npot;
    }
    e.f.for_each([&](std::uint32_t m) { t.final_members.push_back(m); });
    return t;
}

bool is_ball_like(const CubeFamily& f) {
    auto ms = f.members();
    if (ms.empty()) return true;
    int kmin = f.n;
    for (auto m : ms) kmin = std::min(kmin, popcount64(m));
    u128 above = 0;
    for (auto m : ms)
        if (popcount64(m) > kmin) ++above;
    return above == binom_ge(f.n, kmin + 1);
}

CompressionTrace harper_compression_schedule(const CubeFamily& f) {
    auto [upset_fam, mono_trace] = monotonize(f);
    CompressionTrace t;
    t.schedule = "harper";
    t.n = f.n;
    for (auto m : f.members()) t.initial_members.push_back(m);
    t.steps = mono_trace.steps;
    t.l0 = mono_trace.l0;

    Engine e(f.n, upset_fam.bits);
    std::uint64_t size = e.f.count();
    std::uint64_t bnd = e.boundary_size();

    while (true) {
        CubeFamily cur(f.n);
        cur.bits = e.f;
        if (is_ball_like(cur)) break;
        std::uint32_t bu = 0, bv = 0;
        bool found = false;
        for (int u = 0; u + 1 <= f.n && !found; ++u) {
            found = scan_pairs(f.n, u, u + 1, [&](std::uint32_t um, std::uint32_t vm) {
                if (!e.effective(um, vm)) return false;
                if (!e.subcondition(um, vm)) return false;
                bu = um;
                bv = vm;
                return true;
            });
        }
        if (!found) stall(t, "harper_compression_schedule: stalled before reaching a ball-like family");
        e.effective(bu, bv);
        std::uint64_t moved = e.apply(bu, bv);
        std::uint64_t nsize = e.f.count();
        std::uint64_t nbnd = e.boundary_size();
        t.steps.push_back(make_step(bu, bv, size, nsize, bnd, nbnd, moved));
        audit(nsize == size, t, "harper_compression_schedule: size changed");
        audit(nbnd <= bnd, t, "harper_compression_schedule: vertex boundary increased");
        audit(e.upset(), t, "harper_compression_schedule: upset not preserved");
        bnd = nbnd;
    }
    e.f.for_each([&](std::uint32_t m) { t.final_members.push_back(m); });
    return t;
}

UniformFamily trace_final_uniform(const CompressionTrace& t) {
    return UniformFamily::from_members(t.n, t.k, t.final_members);
}

CubeFamily trace_final_cube(const CompressionTrace& t) {
    CubeFamily f(t.n);
    for (auto m : t.final_members) f.add(std::uint32_t(m));
    return f;
}

}  // namespace iso
