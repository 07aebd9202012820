#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "iso/binomials.hpp"
#include "iso/compress.hpp"
#include "iso/constructions.hpp"
#include "iso/orders.hpp"
#include "iso/verify.hpp"

namespace iso {

std::string SuiteReport::to_json(bool with_timing) const {
    nlohmann::json j;
    j["suite"] = suite;
    j["instances"] = instances;
    j["violations"] = violations;
    j["equality_witnesses"] = equality_witnesses;
    j["hypothesis_vacuous"] = hypothesis_vacuous;
    j["notes"] = notes;
    if (with_timing) j["wall_ms"] = wall_ms;
    return j.dump();
}

std::string SuiteReport::to_text(bool with_timing) const {
    std::ostringstream os;
    os << suite << ": instances=" << instances << " violations=" << violations
       << " equality_witnesses=" << equality_witnesses;
    if (hypothesis_vacuous) os << " hypothesis_vacuous=" << hypothesis_vacuous;
    if (with_timing) os << " wall_ms=" << wall_ms;
    for (const auto& s : notes) os << "\n  " << s;
    return os.str();
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void note_violation(SuiteReport& r, const std::string& what) {
    ++r.violations;
    if (r.notes.size() < 8) r.notes.push_back(what);
}

// single-word cube helpers for n <= 6 (universe fits in one 64-bit word)
inline std::uint64_t word_shift(std::uint64_t m, int b) {
    const std::uint64_t lo = CubeBits::kLow[b];
    const int s = 1 << b;
    return ((m & lo) << s) | ((m >> s) & lo);
}
inline std::uint64_t word_boundary(std::uint64_t m, int n) {
    std::uint64_t acc = 0;
    for (int b = 0; b < n; ++b) acc |= word_shift(m, b);
    std::uint64_t uni = n == 6 ? ~0ull : (std::uint64_t(1) << (1 << n)) - 1;
    return acc & ~m & uni;
}

// run fn(i) for i in [0, total) over `threads` workers, merging reports
template <class Fn>
void parallel_instances(std::uint64_t total, int threads, SuiteReport& report, Fn fn) {
    threads = std::max(1, threads);
    if (threads == 1) {
        for (std::uint64_t i = 0; i < total; ++i) fn(i, report);
        report.instances += total;
        return;
    }
    std::vector<SuiteReport> parts(threads);
    std::vector<std::thread> ws;
    std::atomic<std::uint64_t> next{0};
    const std::uint64_t chunk = 256;
    for (int w = 0; w < threads; ++w) {
        ws.emplace_back([&, w] {
            for (;;) {
                std::uint64_t b = next.fetch_add(chunk);
                if (b >= total) break;
                std::uint64_t e = std::min(total, b + chunk);
                for (std::uint64_t i = b; i < e; ++i) fn(i, parts[w]);
            }
        });
    }
    for (auto& t : ws) t.join();
    // merge in worker order so note lists are deterministic given the seed
    for (auto& p : parts) {
        report.violations += p.violations;
        report.equality_witnesses += p.equality_witnesses;
        report.hypothesis_vacuous += p.hypothesis_vacuous;
        for (auto& s : p.notes)
            if (report.notes.size() < 8) report.notes.push_back(s);
    }
    report.instances += total;
}

}  // namespace

CubeFamily random_cube_family_of_size(int n, std::uint64_t size, Rng& rng) {
    std::uint64_t uni = std::uint64_t(1) << n;
    if (size > uni) throw std::invalid_argument("random_cube_family_of_size: size > 2^n");
    // partial Fisher-Yates over the vertex indices
    std::vector<std::uint32_t> idx(uni);
    for (std::uint64_t i = 0; i < uni; ++i) idx[i] = std::uint32_t(i);
    CubeFamily f(n);
    for (std::uint64_t i = 0; i < size; ++i) {
        std::uint64_t j = i + rng.below(uni - i);
        std::swap(idx[i], idx[j]);
        f.add(idx[i]);
    }
    return f;
}

CubeFamily random_cube_family_bernoulli(int n, Rng& rng) {
    CubeFamily f(n);
    for (auto& w : f.bits.w) w = rng.next();
    std::uint64_t uni = std::uint64_t(1) << n;
    if (uni < 64) f.bits.w[0] &= (std::uint64_t(1) << uni) - 1;
    return f;
}

UniformFamily random_uniform_family(int n, int k, std::uint64_t size, Rng& rng) {
    u128 layer = binom_exact(n, k);
    if (u128(size) > layer) throw std::invalid_argument("random_uniform_family: size too large");
    UniformFamily all = initial_segment_colex(n, k, layer);
    std::vector<std::uint64_t>& pool = all.members;
    std::vector<std::uint64_t> picked;
    for (std::uint64_t i = 0; i < size; ++i) {
        std::uint64_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
        picked.push_back(pool[i]);
    }
    return UniformFamily::from_members(n, k, std::move(picked));
}

CubeFamily planted_cube(const CubeFamily& base, double p, Rng& rng) {
    CubeFamily f = base;
    std::uint64_t uni = std::uint64_t(1) << base.n;
    for (std::uint64_t x = 0; x < uni; ++x)
        if (rng.real01() < p) {
            if (f.contains(std::uint32_t(x)))
                f.remove(std::uint32_t(x));
            else
                f.add(std::uint32_t(x));
        }
    // repair the size back to |base|
    std::uint64_t want = base.size();
    while (f.size() > want) {
        std::uint32_t x = std::uint32_t(rng.below(uni));
        if (f.contains(x)) f.remove(x);
    }
    while (f.size() < want) {
        std::uint32_t x = std::uint32_t(rng.below(uni));
        if (!f.contains(x)) f.add(x);
    }
    return f;
}

SuiteReport suite_harper_exhaustive(int n) {
    Timer timer;
    SuiteReport r;
    r.suite = "harper_exhaustive";
    if (n < 1 || n > 4) throw std::invalid_argument("suite_harper_exhaustive: n must be in [1,4]");
    const int uni = 1 << n;
    std::vector<std::uint64_t> exact(uni + 1);
    for (int m = 0; m <= uni; ++m) exact[m] = std::uint64_t(harper_exact_bound(n, u128(m)));
    std::vector<std::uint64_t> minb(uni + 1, ~0ull);
    const std::uint64_t families = std::uint64_t(1) << uni;
    for (std::uint64_t fam = 0; fam < families; ++fam) {
        int size = popcount64(fam);
        std::uint64_t b = std::uint64_t(popcount64(word_boundary(fam, n)));
        if (b < exact[size]) {
            std::ostringstream os;
            os << "family mask " << fam << " has boundary " << b << " < " << exact[size];
            note_violation(r, os.str());
        }
        if (b == exact[size]) ++r.equality_witnesses;
        minb[size] = std::min(minb[size], b);
    }
    for (int m = 0; m <= uni; ++m)
        if (minb[m] != exact[m]) {
            std::ostringstream os;
            os << "minimum boundary at size " << m << " is " << minb[m] << ", expected "
               << exact[m];
            note_violation(r, os.str());
        }
    r.instances = families;
    r.wall_ms = timer.ms();
    return r;
}

SuiteReport suite_submodularity(int n, std::uint64_t trials, int max_i, std::uint64_t seed,
                                int threads) {
    Timer timer;
    SuiteReport r;
    r.suite = "submodularity";
    if (n < 1 || n > 12) throw std::invalid_argument("suite_submodularity: n must be in [1,12]");
    parallel_instances(trials, threads, r, [&](std::uint64_t idx, SuiteReport& part) {
        Rng rng = Rng::for_instance(seed, idx);
        CubeFamily a = random_cube_family_bernoulli(n, rng);
        CubeFamily g = random_cube_family_bernoulli(n, rng);
        CubeFamily lo(n), hi(n);
        lo.bits = a.bits;
        lo.bits &= g.bits;
        hi.bits = a.bits;
        hi.bits |= g.bits;
        CubeFamily na = a, ng = g, nlo = lo, nhi = hi;
        for (int i = 0; i <= max_i; ++i) {
            std::uint64_t lhs = na.size() + ng.size();
            std::uint64_t rhs = nlo.size() + nhi.size();
            if (lhs < rhs) {
                std::ostringstream os;
                os << "instance " << idx << " i=" << i << ": " << lhs << " < " << rhs;
                note_violation(part, os.str());
            }
            if (lhs == rhs) ++part.equality_witnesses;
            if (i < max_i) {
                na = iterated_neighborhood(na, 1);
                ng = iterated_neighborhood(ng, 1);
                nlo = iterated_neighborhood(nlo, 1);
                nhi = iterated_neighborhood(nhi, 1);
            }
        }
    });
    r.wall_ms = timer.ms();
    return r;
}

SuiteReport suite_plJ_identity(int n) {
    Timer timer;
    SuiteReport r;
    r.suite = "plJ_identity";
    if (n < 1 || n > 8) throw std::invalid_argument("suite_plJ_identity: n must be in [1,8]");
    for (int k = 1; k <= n; ++k) {
        for (int t = k; t <= n; ++t) {
            u128 m = binom_ge(n, k + 1) + binom_exact(t, k);
            std::uint64_t cap = std::uint64_t(binom_exact(t - 1, k - 1));
            for (std::uint64_t D = 0; D <= cap; ++D) {
                for (std::uint64_t E = 0; E <= cap; ++E) {
                    CubeFamily j = perturbed_segment_J(n, m, D, E);
                    CubeFamily im = initial_segment_simplicial(n, m);
                    CubeFamily ilo = initial_segment_simplicial(n, m - D);
                    CubeFamily ihi = initial_segment_simplicial(n, m + E);
                    for (int i = 0; i <= k; ++i) {
                        ++r.instances;
                        std::uint64_t lhs =
                            iterated_neighborhood(j, i).size() + iterated_neighborhood(im, i).size();
                        std::uint64_t rhs = iterated_neighborhood(ilo, i).size() +
                                            iterated_neighborhood(ihi, i).size();
                        if (lhs != rhs) {
                            std::ostringstream os;
                            os << "n=" << n << " k=" << k << " t=" << t << " D=" << D << " E=" << E
                               << " i=" << i << ": " << lhs << " != " << rhs;
                            note_violation(r, os.str());
                        }
                    }
                }
            }
        }
    }
    r.wall_ms = timer.ms();
    return r;
}

namespace {

// shadow of a k-uniform family with the k = 0 layer mapped to the empty
// family (suite-internal convention for degenerate corners)
UniformFamily shadow_or_empty(const UniformFamily& f) {
    if (f.k == 0 || f.members.empty()) return UniformFamily(f.n, std::max(0, f.k - 1));
    return lower_shadow(f);
}

UniformFamily add_element_to_all(const UniformFamily& f, int e) {
    std::vector<std::uint64_t> ms;
    ms.reserve(f.members.size());
    for (auto m : f.members) {
        std::uint64_t bit = std::uint64_t(1) << (e - 1);
        if (m & bit) throw std::logic_error("add_element_to_all: element already present");
        ms.push_back(m | bit);
    }
    return UniformFamily::from_members(f.n, f.k + 1, std::move(ms));
}

UniformFamily union_families(const UniformFamily& a, const UniformFamily& b) {
    std::vector<std::uint64_t> ms(a.members);
    ms.insert(ms.end(), b.members.begin(), b.members.end());
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    UniformFamily r(a.n, a.k);
    r.members = std::move(ms);
    return r;
}

}  // namespace

SuiteReport suite_kkprops(int n) {
    Timer timer;
    SuiteReport r;
    r.suite = "kkprops";
    if (n < 2 || n > 10) throw std::invalid_argument("suite_kkprops: n must be in [2,10]");
    // (i)-(iii): shadow decompositions of segments, slices and their unions
    for (int k = 1; k <= n - 1; ++k) {
        for (int s = k; s <= n - 1; ++s) {
            std::uint64_t cap = std::uint64_t(binom_exact(s - 1, k - 1));
            u128 mclique = binom_exact(s, k);
            u128 mprev = binom_exact(s - 1, k);
            for (std::uint64_t e1 = 0; e1 <= cap; ++e1) {
                UniformFamily head = initial_segment_colex(n, k, mprev + e1);
                UniformFamily tail1 = initial_segment_colex(n, k - 1, e1);
                if (!(s == k && e1 == 0)) {  // degenerate: empty head but nonempty clique claim
                    ++r.instances;
                    UniformFamily lhs = shadow_or_empty(head);
                    UniformFamily rhs = union_families(
                        initial_segment_colex(n, k - 1, binom_exact(s - 1, k - 1)),
                        tail1.members.empty() ? UniformFamily(n, k - 1)
                                              : add_element_to_all(shadow_or_empty(tail1), s));
                    if (!(lhs == rhs)) note_violation(r, "segment shadow decomposition failed");
                }
                for (std::uint64_t e2 = 0; e2 <= cap; ++e2) {
                    // slice between the clique sizes
                    UniformFamily wide = initial_segment_colex(n, k, mclique + e2);
                    UniformFamily slice(n, k);
                    slice.members.assign(wide.members.begin() + std::size_t(mclique),
                                         wide.members.end());
                    UniformFamily tail2 = initial_segment_colex(n, k - 1, e2);
                    {
                        ++r.instances;
                        UniformFamily lhs = shadow_or_empty(slice);
                        UniformFamily rhs = union_families(
                            tail2, tail2.members.empty()
                                       ? UniformFamily(n, k - 1)
                                       : add_element_to_all(shadow_or_empty(tail2), s + 1));
                        if (!(lhs == rhs)) note_violation(r, "slice shadow decomposition failed");
                    }
                    if (!(s == k && e1 == 0 && e2 > 0)) {
                        ++r.instances;
                        UniformFamily j = perturbed_clique_Jk(n, k, s, e1, e2);
                        UniformFamily lhs = shadow_or_empty(j);
                        UniformFamily rhs = union_families(
                            shadow_or_empty(head),
                            tail2.members.empty()
                                ? UniformFamily(n, k - 1)
                                : add_element_to_all(shadow_or_empty(tail2), s + 1));
                        if (!(lhs == rhs))
                            note_violation(r, "perturbed clique shadow decomposition failed");
                    }
                }
            }
        }
    }
    // (iv): shadow subadditivity over segment sizes, strict for k >= 2, a >= b > 0
    for (int k = 1; k <= n; ++k) {
        std::uint64_t layer = std::uint64_t(binom_exact(n, k));
        for (std::uint64_t a = 0; a <= layer; ++a) {
            for (std::uint64_t b = 0; b <= a && a + b <= layer; ++b) {
                ++r.instances;
                u128 both = kk_exact_bound(n, k, a + b);
                u128 parts = kk_exact_bound(n, k, a) + kk_exact_bound(n, k, b);
                bool strict_needed = k >= 2 && b > 0;
                if (both > parts || (strict_needed && both == parts)) {
                    std::ostringstream os;
                    os << "subadditivity failed: k=" << k << " a=" << a << " b=" << b;
                    note_violation(r, os.str());
                }
                if (both == parts) ++r.equality_witnesses;
            }
        }
    }
    r.wall_ms = timer.ms();
    return r;
}

SuiteReport suite_local_stability_kk(int n, int k) {
    Timer timer;
    SuiteReport r;
    r.suite = "local_stability_kk";
    if (n < 2 || n > 6 || k < 2 || k > n)
        throw std::invalid_argument("suite_local_stability_kk: need 2 <= k <= n <= 6");
    UniformFamily layer = initial_segment_colex(n, k, binom_exact(n, k));
    const int L = int(layer.members.size());
    if (L > 24) throw std::invalid_argument("suite_local_stability_kk: layer too large");
    // per-member shadow masks over the 2^n cube (single word for n <= 6)
    std::vector<std::uint64_t> shmask(L, 0);
    for (int i = 0; i < L; ++i) {
        std::uint64_t m = layer.members[i];
        std::uint64_t v = m;
        while (v) {
            std::uint64_t low = v & (~v + 1);
            v ^= low;
            shmask[i] |= std::uint64_t(1) << (m ^ low);
        }
    }
    // clique membership masks and the J shadow tables, per s
    std::vector<std::uint32_t> clique(n + 1, 0);
    for (int s = k; s <= n; ++s)
        for (int i = 0; i < L; ++i)
            if ((layer.members[i] >> s) == 0) clique[s] |= std::uint32_t(1) << i;
    std::vector<std::vector<std::uint64_t>> head_shadow(n + 1), tail_shadow(n + 1);
    for (int s = k; s <= n; ++s) {
        std::uint64_t cap = std::uint64_t(binom_exact(s - 1, k - 1));
        head_shadow[s].resize(cap + 1);
        tail_shadow[s].resize(cap + 1);
        for (std::uint64_t e = 0; e <= cap; ++e) {
            head_shadow[s][e] =
                std::uint64_t(kk_exact_bound(n, k, binom_exact(s - 1, k) + e));
            tail_shadow[s][e] = e == 0 ? 0 : std::uint64_t(kk_exact_bound(n, k - 1, e));
        }
    }
    const std::uint64_t families = std::uint64_t(1) << L;
    for (std::uint64_t fam = 0; fam < families; ++fam) {
        std::uint64_t sh = 0;
        std::uint64_t f = fam;
        while (f) {
            int i = __builtin_ctzll(f);
            f &= f - 1;
            sh |= shmask[i];
        }
        std::uint64_t shadow_size = std::uint64_t(popcount64(sh));
        int total = popcount64(fam);
        for (int s = k; s <= n; ++s) {
            std::int64_t a1 = popcount64(fam & clique[s]);
            std::int64_t e1 = a1 - std::int64_t(binom_exact(s - 1, k));
            std::int64_t e2 = total - a1;
            std::int64_t cap = std::int64_t(binom_exact(s - 1, k - 1));
            if (e1 < 0 || e1 > cap || e2 > cap) continue;
            ++r.instances;
            std::uint64_t rhs = head_shadow[s][e1] + tail_shadow[s][e2];
            if (shadow_size < rhs) {
                std::ostringstream os;
                os << "family " << fam << " s=" << s << ": shadow " << shadow_size << " < " << rhs;
                note_violation(r, os.str());
            }
            if (shadow_size == rhs) ++r.equality_witnesses;
        }
    }
    r.wall_ms = timer.ms();
    return r;
}

std::vector<std::uint64_t> nonmono_table(int n, int k, int dmax) {
    if (dmax < 0) dmax = n - 1;
    u128 m = binom_ge(n, k);
    std::vector<std::uint64_t> out;
    for (int d = 0; d <= dmax; ++d) {
        CubeFamily j = perturbed_segment_J(n, m, u128(d), u128(d));
        out.push_back(vertex_boundary(j).size());
    }
    return out;
}

SuiteReport suite_ball_local_stability(std::uint64_t random_trials, std::uint64_t seed,
                                       int threads) {
    Timer timer;
    SuiteReport r;
    r.suite = "ball_local_stability";
    const int n = 5;
    const std::uint32_t uni_mask = 0xffffffffu;
    // the 32 Hamming balls of size 16 (radius 2)
    std::uint32_t ball0 = 0;
    for (std::uint32_t x = 0; x < 32; ++x)
        if (popcount64(x) <= 2) ball0 |= std::uint32_t(1) << x;
    std::vector<std::uint32_t> balls(32);
    {
        CubeBits b(5);
        for (std::uint32_t x = 0; x < 32; ++x)
            if ((ball0 >> x) & 1) b.set(x);
        for (std::uint32_t c = 0; c < 32; ++c) {
            CubeBits t = b.xor_translate(c);
            balls[c] = std::uint32_t(t.w[0]);
        }
    }
    // reference boundaries of the two-sided perturbed segments
    u128 m = binom_ge(5, 3);
    std::vector<std::uint64_t> jb(17);
    for (int d = 0; d <= 16; ++d)
        jb[d] = vertex_boundary(perturbed_segment_J(5, m, u128(d), u128(d))).size();

    auto family_boundary = [&](std::uint32_t fam) {
        std::uint64_t w = fam;
        return std::uint64_t(popcount64(word_boundary(w, 5)));
    };
    auto check_family = [&](std::uint32_t fam, SuiteReport& part) {
        int dmin = 32;
        for (std::uint32_t c = 0; c < 32; ++c)
            dmin = std::min(dmin, popcount64(fam & ~balls[c]));
        std::uint64_t b = family_boundary(fam);
        if (b < jb[dmin]) {
            std::ostringstream os;
            os << "family mask " << fam << " D=" << dmin << ": boundary " << b << " < " << jb[dmin];
            note_violation(part, os.str());
        }
        if (b == jb[dmin]) ++part.equality_witnesses;
    };

    // exhaustive two-sided perturbations of the half-cube ball, D' <= 3
    std::uint32_t base = 0;
    for (std::uint32_t x = 0; x < 32; ++x)
        if (popcount64(x) >= 3) base |= std::uint32_t(1) << x;
    std::vector<int> inb, outb;
    for (int x = 0; x < 32; ++x) ((base >> x) & 1 ? inb : outb).push_back(x);
    for (int d = 0; d <= 3; ++d) {
        // choose d positions to drop and d to add
        std::vector<int> drop(d), add(d);
        std::function<void(int, int)> choose_add = [&](int start, int left) {
            if (left == 0) {
                std::uint32_t fam = base;
                for (int i = 0; i < d; ++i) fam &= ~(std::uint32_t(1) << inb[drop[i]]);
                for (int i = 0; i < d; ++i) fam |= std::uint32_t(1) << outb[add[i]];
                ++r.instances;
                check_family(fam, r);
                return;
            }
            for (int i = start; i + left <= int(outb.size()); ++i) {
                add[d - left] = i;
                choose_add(i + 1, left - 1);
            }
        };
        std::function<void(int, int)> choose_drop = [&](int start, int left) {
            if (left == 0) {
                choose_add(0, d);
                return;
            }
            for (int i = start; i + left <= int(inb.size()); ++i) {
                drop[d - left] = i;
                choose_drop(i + 1, left - 1);
            }
        };
        choose_drop(0, d);
    }
    // random size-16 families
    parallel_instances(random_trials, threads, r, [&](std::uint64_t idx, SuiteReport& part) {
        Rng rng = Rng::for_instance(seed, idx);
        std::uint32_t fam = 0;
        int placed = 0;
        std::uint32_t pool = uni_mask;
        while (placed < 16) {
            std::uint32_t x = std::uint32_t(rng.below(32));
            std::uint32_t bit = std::uint32_t(1) << x;
            if (pool & bit) {
                pool &= ~bit;
                fam |= bit;
                ++placed;
            }
        }
        check_family(fam, part);
    });
    r.wall_ms = timer.ms();
    return r;
}

SuiteReport suite_ball_intersection_monotone(int nmax) {
    Timer timer;
    SuiteReport r;
    r.suite = "ball_intersection_monotone";
    if (nmax < 1 || nmax > 8)
        throw std::invalid_argument("suite_ball_intersection_monotone: nmax must be in [1,8]");
    for (int n = 1; n <= nmax; ++n) {
        for (int k = 1; k <= n; ++k) {
            int radius = n - k;
            for (int t = 0; t <= n - 1; ++t) {
                ++r.instances;
                std::uint32_t full = (std::uint32_t(1) << n) - 1;
                std::uint32_t c1 = full;
                std::uint32_t ct = full & ~((std::uint32_t(1) << t) - 1);
                std::uint32_t ct1 = full & ~((std::uint32_t(1) << (t + 1)) - 1);
                CubeFamily b0 = hamming_ball(n, radius, Subset(c1, n));
                CubeFamily bt = hamming_ball(n, radius, Subset(ct, n));
                CubeFamily bt1 = hamming_ball(n, radius, Subset(ct1, n));
                CubeFamily i1(n), i2(n);
                i1.bits = b0.bits;
                i1.bits &= bt.bits;
                i2.bits = b0.bits;
                i2.bits &= bt1.bits;
                std::uint64_t ft = i1.size(), ft1 = i2.size();
                // sets A in [n-1] with |A| = |A xor [t]| = k-1
                std::uint64_t dcount = 0;
                std::uint32_t tmask = (std::uint32_t(1) << t) - 1;
                for (std::uint32_t a = 0; a < (std::uint32_t(1) << (n - 1)); ++a)
                    if (popcount64(a) == k - 1 && popcount64(a ^ tmask) == k - 1) ++dcount;
                if (ft < ft1 || ft - ft1 != dcount) {
                    std::ostringstream os;
                    os << "n=" << n << " k=" << k << " t=" << t << ": " << ft << "-" << ft1
                       << " != " << dcount;
                    note_violation(r, os.str());
                }
                if (ft == ft1) ++r.equality_witnesses;
            }
        }
    }
    r.wall_ms = timer.ms();
    return r;
}

SuiteReport suite_compression_audit(std::uint64_t kk_trials, std::uint64_t harper_trials,
                                    std::uint64_t seed, int threads) {
    Timer timer;
    SuiteReport r;
    r.suite = "compression_audit";
    parallel_instances(kk_trials, threads, r, [&](std::uint64_t idx, SuiteReport& part) {
        Rng rng = Rng::for_instance(seed, idx);
        int n = 2 + int(rng.below(9));                        // 2..10
        int k = 1 + int(rng.below(std::min(4, n)));           // 1..min(4,n)
        std::uint64_t layer = std::uint64_t(binom_exact(n, k));
        std::uint64_t size = rng.below(layer + 1);
        UniformFamily f = random_uniform_family(n, k, size, rng);
        try {
            CompressionTrace t = kk_compression_schedule(f);
            if (!is_initial_segment_colex(trace_final_uniform(t)))
                note_violation(part, "kk schedule: terminal family is not an initial segment");
        } catch (const std::exception& e) {
            note_violation(part, std::string("kk schedule failed: ") + e.what());
        }
    });
    parallel_instances(harper_trials, threads, r, [&](std::uint64_t idx, SuiteReport& part) {
        Rng rng = Rng::for_instance(seed ^ 0x9e3779b97f4a7c15ull, idx);
        int n = 2 + int(rng.below(7));  // 2..8
        CubeFamily f = random_cube_family_bernoulli(n, rng);
        try {
            CompressionTrace t = harper_compression_schedule(f);
            if (!is_ball_like(trace_final_cube(t)))
                note_violation(part, "harper schedule: terminal family is not ball-like");
        } catch (const std::exception& e) {
            note_violation(part, std::string("harper schedule failed: ") + e.what());
        }
    });
    r.wall_ms = timer.ms();
    return r;
}

SuiteReport suite_extremal_spotcheck(std::uint64_t trials, std::uint64_t seed) {
    Timer timer;
    SuiteReport r;
    r.suite = "extremal_spotcheck";
    // intersecting families at (7,3): random greedy maximal families must not
    // beat the extremal size for their distance E from the best star
    {
        const int n = 7, k = 3;
        UniformFamily layer = initial_segment_colex(n, k, binom_exact(n, k));
        std::uint64_t ecap = std::uint64_t(binom_exact(n - 2, k - 1));
        for (std::uint64_t it = 0; it < trials; ++it) {
            Rng rng = Rng::for_instance(seed, it);
            std::vector<std::uint64_t> pool = layer.members;
            for (std::size_t i = pool.size(); i > 1; --i)
                std::swap(pool[i - 1], pool[rng.below(i)]);
            std::vector<std::uint64_t> fam;
            for (auto m : pool) {
                bool ok = true;
                for (auto x : fam)
                    if (!(x & m)) {
                        ok = false;
                        break;
                    }
                if (ok) fam.push_back(m);
            }
            ++r.instances;
            std::uint64_t best_star = 0, best_i = 1;
            for (int i = 1; i <= n; ++i) {
                std::uint64_t bit = std::uint64_t(1) << (i - 1), c = 0;
                for (auto m : fam)
                    if (m & bit) ++c;
                if (c > best_star) {
                    best_star = c;
                    best_i = std::uint64_t(i);
                }
            }
            (void)best_i;
            std::uint64_t E = fam.size() - best_star;
            if (E > ecap) {
                ++r.hypothesis_vacuous;  // outside the regime the bound addresses
                continue;
            }
            std::uint64_t cap = ekr_extremal_F(n, k, E).size();
            if (fam.size() > cap) {
                std::ostringstream os;
                os << "intersecting family of size " << fam.size() << " exceeds " << cap
                   << " at E=" << E;
                note_violation(r, os.str());
            }
            if (fam.size() == cap) ++r.equality_witnesses;
        }
    }
    // t-intersecting families at (6,4), t = 2
    {
        const int n = 6, k = 4, t = 2;
        std::uint64_t ecap = std::uint64_t(binom_exact(n - 1, k - 1));
        CubeFamily ball(n);
        for (std::uint32_t x = 0; x < 64; ++x)
            if (popcount64(x) >= k) ball.add(x);
        for (std::uint64_t it = 0; it < trials; ++it) {
            Rng rng = Rng::for_instance(seed ^ 0x5bf03635ull, it);
            std::vector<std::uint32_t> pool;
            for (std::uint32_t x = 0; x < 64; ++x)
                if (popcount64(x) >= t) pool.push_back(x);
            for (std::size_t i = pool.size(); i > 1; --i)
                std::swap(pool[i - 1], pool[rng.below(i)]);
            std::vector<std::uint32_t> fam;
            for (auto m : pool) {
                bool ok = true;
                for (auto x : fam)
                    if (popcount64(x & m) < t) {
                        ok = false;
                        break;
                    }
                if (ok) fam.push_back(m);
            }
            ++r.instances;
            std::uint64_t E = 0;
            for (auto m : fam)
                if (!ball.contains(m)) ++E;
            if (E > ecap) {
                ++r.hypothesis_vacuous;
                continue;
            }
            std::uint64_t cap = katona_extremal_G(n, k, E).family.size();
            if (fam.size() > cap) {
                std::ostringstream os;
                os << "t-intersecting family of size " << fam.size() << " exceeds " << cap
                   << " at E=" << E;
                note_violation(r, os.str());
            }
            if (fam.size() == cap) ++r.equality_witnesses;
        }
    }
    r.wall_ms = timer.ms();
    return r;
}

std::vector<ExploreWitness> explore_dense_conjecture(int n, double epsilon, std::uint64_t trials,
                                                     std::uint64_t seed) {
    if (n < 3 || n > 12) throw std::invalid_argument("explore_dense_conjecture: n must be in [3,12]");
    std::vector<std::pair<ExploreWitness, CubeFamily>> all;
    auto consider = [&](const CubeFamily& f, const std::string& desc) {
        if (double(f.size()) < epsilon * double(std::uint64_t(1) << n)) return;
        ExploreWitness w;
        w.desc = desc;
        w.size = f.size();
        w.boundary = vertex_boundary(f).size();
        try {
            LovaszBound b = blov_bound(n, u128(f.size()));
            w.blov = b.value;
            w.excess = w.blov > 0 ? double(w.boundary) / w.blov - 1.0 : 0.0;
        } catch (const std::exception&) {
            return;  // size outside the k >= 2 window
        }
        all.emplace_back(w, f);
    };
    // product constructions: a half-cube ball in the first n-d coordinates
    for (int d = 0; d + 3 <= n; ++d) {
        int nd = n - d;
        if (nd % 2 == 0) continue;
        CubeFamily f(n);
        int kk = (nd + 1) / 2;
        for (std::uint32_t x = 0; x < (std::uint32_t(1) << n); ++x)
            if (popcount64(x & ((std::uint32_t(1) << nd) - 1)) >= kk) f.add(x);
        std::ostringstream os;
        os << "half-cube ball x cube, d=" << d;
        consider(f, os.str());
    }
    // the ball itself (excess 0, distance 0 reference)
    {
        CubeFamily f(n);
        for (std::uint32_t x = 0; x < (std::uint32_t(1) << n); ++x)
            if (popcount64(x) >= (n + 1) / 2) f.add(x);
        consider(f, "half-cube ball");
    }
    for (std::uint64_t i = 0; i < trials; ++i) {
        Rng rng = Rng::for_instance(seed, i);
        std::uint64_t uni = std::uint64_t(1) << n;
        std::uint64_t lo = std::uint64_t(epsilon * double(uni));
        std::uint64_t size = lo + rng.below(uni - lo + 1);
        CubeFamily f = random_cube_family_of_size(n, size, rng);
        std::ostringstream os;
        os << "random size " << size << " (instance " << i << ")";
        consider(f, os.str());
    }
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a.first.excess < b.first.excess; });
    if (all.size() > 20) all.resize(20);
    // exact nearest-ball distance, over every center and radius, for the survivors
    std::vector<ExploreWitness> out;
    for (auto& [w, f] : all) {
        std::uint64_t best = ~0ull;
        for (std::uint32_t c = 0; c < (std::uint32_t(1) << n); ++c) {
            CubeFamily shifted = translate(f, c);
            // after the translation the candidate ball is centered at 0, so
            // the distance only depends on layer counts
            std::vector<std::uint64_t> layer(n + 1, 0);
            shifted.bits.for_each([&](std::uint32_t x) { ++layer[popcount64(x)]; });
            for (int rad = 0; rad <= n; ++rad) {
                std::uint64_t inside = 0, ball_size = 0;
                for (int i = 0; i <= rad; ++i) {
                    inside += layer[i];
                    ball_size += std::uint64_t(binom_exact(n, i));
                }
                std::uint64_t d = (w.size - inside) + (ball_size - inside);
                best = std::min(best, d);
            }
        }
        w.ball_distance = best;
        out.push_back(w);
    }
    return out;
}

}  // namespace iso
