// Hypothesis/conclusion checkers for the six stability statements.  These
// are per-instance checkers, not provers: each evaluates the hypothesis
// inequality with its stated constant and searches exhaustively for the
// nearest extremal structure to decide the conclusion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "iso/binomials.hpp"
#include "iso/constructions.hpp"
#include "iso/orders.hpp"
#include "iso/verify.hpp"

namespace iso {

namespace {

// stability constants, one per statement
constexpr double kBallC = 1e-3;      // c = 1e-3 * delta
constexpr double kCliqueC = 1e-9;    // c = 1e-9 * delta0
constexpr double kGenBallC = 1e-10;  // c = 1e-10 * delta
constexpr double kStarC = 1e-12;     // c = 1e-12 * theta
constexpr double kTBallTheta = 1e-6; // theta = min(1e-6 * t/n * e^{t^2/n}, 1)
constexpr double kMatchC = 1e-10;    // c = 1e-10 * delta

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace

TheoremId theorem_id_from_string(const std::string& s) {
    if (s == "ball") return TheoremId::BallStability;
    if (s == "clique") return TheoremId::CliqueStability;
    if (s == "genball") return TheoremId::GenBallStability;
    if (s == "star") return TheoremId::StarStability;
    if (s == "tball") return TheoremId::TBallStability;
    if (s == "matching") return TheoremId::MatchingStability;
    throw std::invalid_argument("unknown theorem id: " + s);
}

std::string theorem_id_name(TheoremId id) {
    switch (id) {
        case TheoremId::BallStability: return "ball";
        case TheoremId::CliqueStability: return "clique";
        case TheoremId::GenBallStability: return "genball";
        case TheoremId::StarStability: return "star";
        case TheoremId::TBallStability: return "tball";
        case TheoremId::MatchingStability: return "matching";
    }
    return "?";
}

std::string PredicateReport::to_json() const {
    nlohmann::json j;
    j["theorem"] = theorem;
    j["shape_ok"] = shape_ok;
    j["hypothesis"] = hypothesis;
    j["conclusion"] = conclusion;
    if (has_furthermore) j["furthermore"] = furthermore;
    j["detail"] = detail;
    return j.dump();
}

std::string PredicateReport::to_text() const {
    std::ostringstream os;
    os << theorem << ": shape=" << (shape_ok ? "ok" : "bad") << " hypothesis="
       << (hypothesis ? "true" : "false") << " conclusion=" << (conclusion ? "true" : "false");
    if (has_furthermore) os << " furthermore=" << (furthermore ? "true" : "false");
    if (!detail.empty()) os << "\n  " << detail;
    return os.str();
}

namespace {

PredicateReport ball_stability(const CubeFamily& a, const StabilityParams& p) {
    PredicateReport rep;
    rep.theorem = "ball";
    int n = a.n;
    if (n > 12) {
        rep.detail = "exhaustive center search needs n <= 12";
        return rep;
    }
    std::uint64_t sz = a.size();
    int k = -1;
    for (int kk = 0; kk <= n; ++kk)
        if (u128(sz) == binom_ge(n, kk)) {
            k = kk;
            break;
        }
    if (k < 1) {
        rep.detail = "size is not a ball size";
        return rep;
    }
    rep.shape_ok = true;
    double c = kBallC * p.delta;
    std::uint64_t bnd = vertex_boundary(a).size();
    double cap = (1 + c / n) * double(binom_exact(n, k - 1));
    rep.hypothesis = double(bnd) <= cap;
    // nearest Hamming ball of the same size over every center
    std::uint64_t best = ~0ull;
    std::uint32_t best_c = 0;
    for (std::uint32_t cmask = 0; cmask < (std::uint32_t(1) << n); ++cmask) {
        CubeFamily h = hamming_ball(n, n - k, Subset(cmask, n));
        std::uint64_t d = symdiff_size(a, h);
        if (d < best) {
            best = d;
            best_c = cmask;
        }
    }
    rep.conclusion = double(best) <= p.delta * double(binom_exact(n - 1, k - 1));
    rep.has_furthermore = true;
    std::uint64_t D = best / 2;
    u128 m = binom_ge(n, k);
    std::uint64_t jb = vertex_boundary(perturbed_segment_J(n, m, D, D)).size();
    rep.furthermore = bnd >= jb;
    std::ostringstream os;
    os << "k=" << k << " boundary=" << bnd << " cap=" << fmt(cap) << " dist=" << best
       << " best_center_mask=" << best_c << " two_sided_bound=" << jb;
    rep.detail = os.str();
    return rep;
}

PredicateReport clique_stability(const UniformFamily& a, const StabilityParams& p) {
    PredicateReport rep;
    rep.theorem = "clique";
    int n = a.n, k = a.k;
    if (n > 16 || k < 1 || a.members.empty()) {
        rep.detail = "needs a nonempty k-uniform family with n <= 16";
        return rep;
    }
    rep.shape_ok = true;
    double x = x_from_size(double(a.size()), k);
    std::uint64_t sh = lower_shadow(a).size();
    double c = kCliqueC * p.delta;
    double cap = (1 + c / x) * binom_real(x, k - 1);
    rep.hypothesis = double(sh) <= cap;
    // nearest clique over every support S with |S| >= k
    std::uint64_t best = ~0ull;
    std::uint64_t best_s = 0;
    bool concl = false;
    for (std::uint64_t smask = 0; smask < (std::uint64_t(1) << n); ++smask) {
        int ssz = popcount64(smask);
        if (ssz < k) continue;
        std::uint64_t inside = 0;
        for (auto mm : a.members)
            if ((mm & ~smask) == 0) ++inside;
        std::uint64_t cl = std::uint64_t(binom_exact(ssz, k));
        std::uint64_t d = (a.size() - inside) + (cl - inside);
        if (d < best) {
            best = d;
            best_s = smask;
        }
        if (double(d) <= p.delta * double(binom_exact(ssz - 1, k - 1))) concl = true;
    }
    rep.conclusion = concl;
    // sharp two-part bound at the nearest support
    int s = popcount64(best_s);
    std::uint64_t inside = 0;
    for (auto mm : a.members)
        if ((mm & ~best_s) == 0) ++inside;
    std::int64_t e1 = std::int64_t(inside) - std::int64_t(binom_exact(s - 1, k));
    std::int64_t e2 = std::int64_t(a.size() - inside);
    std::int64_t capE = std::int64_t(binom_exact(s - 1, k - 1));
    std::ostringstream os;
    os << "x=" << fmt(x) << " shadow=" << sh << " cap=" << fmt(cap) << " dist=" << best
       << " support_size=" << s;
    if (e1 >= 0 && e1 <= capE && e2 <= capE) {
        rep.has_furthermore = true;
        u128 jb = kk_exact_bound(n, k, binom_exact(s - 1, k) + u128(e1)) +
                  (e2 > 0 ? kk_exact_bound(n, k - 1, u128(e2)) : 0);
        rep.furthermore = u128(sh) >= jb;
        os << " e1=" << e1 << " e2=" << e2 << " perturbed_bound=" << to_string(jb);
    }
    rep.detail = os.str();
    return rep;
}

PredicateReport genball_stability(const CubeFamily& a, const StabilityParams& p) {
    PredicateReport rep;
    rep.theorem = "genball";
    int n = a.n;
    if (n > 12) {
        rep.detail = "exhaustive support search needs n <= 12";
        return rep;
    }
    std::uint64_t sz = a.size();
    LovaszBound lb;
    try {
        lb = blov_bound(n, u128(sz));
    } catch (const std::exception&) {
        rep.detail = "size outside the k >= 2 window";
        return rep;
    }
    rep.shape_ok = true;
    int k = lb.k;
    double x = lb.x_root;
    std::uint64_t bnd = vertex_boundary(a).size();
    double c = kGenBallC * p.delta;
    double cap = lb.value + c * k * (x - k) / (x * x * x) * binom_real(x, k - 1);
    rep.hypothesis = double(bnd) <= cap;
    // nearest generalised Hamming ball over kind and support
    std::vector<std::uint32_t> layer_k, layer_k1;
    std::uint64_t in_upper = 0;
    a.bits.for_each([&](std::uint32_t mm) {
        int pc = popcount64(mm);
        if (pc == k)
            layer_k.push_back(mm);
        else if (pc == k - 1)
            layer_k1.push_back(mm);
        else if (pc >= k + 1)
            ++in_upper;
    });
    u128 upper = binom_ge(n, k + 1);
    std::uint64_t best = ~0ull;
    int best_kind = 0, best_s = 0;
    std::uint64_t best_gsize = 0;
    bool concl = false;
    for (std::uint64_t smask = 0; smask < (std::uint64_t(1) << n); ++smask) {
        int ssz = popcount64(smask);
        // kind 1 with support S, |S| in [k, n]
        if (ssz >= k) {
            std::uint64_t inside = 0;
            for (auto mm : layer_k)
                if ((mm & ~smask) == 0) ++inside;
            std::uint64_t gsz = std::uint64_t(upper) + std::uint64_t(binom_exact(ssz, k));
            std::uint64_t d = (sz - in_upper - inside) + std::uint64_t(upper) - in_upper +
                              (std::uint64_t(binom_exact(ssz, k)) - inside);
            if (d < best) {
                best = d;
                best_kind = 1;
                best_s = ssz;
                best_gsize = gsz;
            }
            if (double(d) <= p.delta * binom_real(x - 3, k - 2)) concl = true;
        }
        // kind 2 with support T, |T| = s-1 in [k, n-1]
        if (ssz >= k && ssz <= n - 1) {
            std::uint64_t inside_k = 0, inside_k1 = 0;
            for (auto mm : layer_k)
                if ((mm & ~smask) == 0) ++inside_k;
            for (auto mm : layer_k1)
                if ((mm & ~smask) == 0) ++inside_k1;
            std::uint64_t extra = std::uint64_t(binom_exact(ssz, k) + binom_exact(ssz, k - 1));
            std::uint64_t gsz = std::uint64_t(upper) + extra;
            std::uint64_t inter = in_upper + inside_k + inside_k1;
            std::uint64_t d = (sz - inter) + (std::uint64_t(upper) + extra - inter);
            if (d < best) {
                best = d;
                best_kind = 2;
                best_s = ssz + 1;
                best_gsize = gsz;
            }
            if (double(d) <= p.delta * binom_real(x - 3, k - 2)) concl = true;
        }
    }
    rep.conclusion = concl;
    rep.has_furthermore = true;
    // D and E against the nearest generalised ball
    std::uint64_t inter = (sz + best_gsize - best) / 2;
    std::uint64_t D = best_gsize - inter;
    std::uint64_t E = sz - inter;
    std::uint64_t jb =
        vertex_boundary(perturbed_segment_J(n, u128(best_gsize), u128(D), u128(E))).size();
    rep.furthermore = bnd >= jb;
    std::ostringstream os;
    os << "k=" << k << " x=" << fmt(x) << " boundary=" << bnd << " cap=" << fmt(cap)
       << " dist=" << best << " kind=" << best_kind << " s=" << best_s << " D=" << D << " E=" << E
       << " two_sided_bound=" << jb;
    rep.detail = os.str();
    return rep;
}

PredicateReport star_stability(const UniformFamily& a, const StabilityParams& p) {
    PredicateReport rep;
    rep.theorem = "star";
    int n = a.n, k = a.k;
    if (!(2 * k < n) || !is_t_intersecting(a, 1)) {
        rep.detail = "needs an intersecting family with 2k < n";
        return rep;
    }
    rep.shape_ok = true;
    double c = kStarC * p.delta;  // delta plays the role of the closeness parameter
    double floor_sz = (1 - c * double(n - 2 * k) / n) * double(binom_exact(n - 1, k - 1));
    rep.hypothesis = double(a.size()) >= floor_sz;
    std::uint64_t bestE = ~0ull;
    for (int i = 1; i <= n; ++i) {
        std::uint64_t bit = std::uint64_t(1) << (i - 1), outside = 0;
        for (auto mm : a.members)
            if (!(mm & bit)) ++outside;
        bestE = std::min(bestE, outside);
    }
    double star_sz = double(binom_exact(n - 1, k - 1));
    rep.conclusion = double(bestE) <= 2 * p.delta * star_sz;
    std::ostringstream os;
    os << "size=" << a.size() << " floor=" << fmt(floor_sz) << " E=" << bestE;
    if (u128(bestE) <= binom_exact(n - 2, k - 1)) {
        rep.has_furthermore = true;
        std::uint64_t capsz = ekr_extremal_F(n, k, u128(bestE)).size();
        rep.furthermore = a.size() <= capsz;
        os << " extremal_size=" << capsz;
    }
    rep.detail = os.str();
    return rep;
}

PredicateReport tball_stability(const CubeFamily& a, const StabilityParams& p) {
    PredicateReport rep;
    rep.theorem = "tball";
    int n = a.n;
    int k = p.k;
    if (k < 0) k = (n + 2) / 2 + (n % 2);  // smallest k with 2k - n >= 2
    int t = 2 * k - n;
    if (t < 2 || !is_t_intersecting(a, t)) {
        rep.detail = "needs a t-intersecting family with t = 2k - n >= 2";
        return rep;
    }
    rep.shape_ok = true;
    double theta = std::min(kTBallTheta * t / double(n) * std::exp(double(t) * t / n), 1.0);
    double td = theta * p.delta;
    double y = double(binom_exact(n - 1, k - 1));
    rep.hypothesis = double(a.size()) >= double(binom_ge(n, k)) - td * y;
    std::uint64_t E = 0, D = 0;
    a.bits.for_each([&](std::uint32_t mm) {
        if (popcount64(mm) < k) ++E;
    });
    D = std::uint64_t(binom_ge(n, k)) - (a.size() - E);
    rep.conclusion = double(E) <= 5 * td * y && double(D + E) <= 11 * td * y;
    std::ostringstream os;
    os << "t=" << t << " theta=" << fmt(theta) << " E=" << E << " D=" << D;
    if (u128(E) <= binom_exact(n - 1, k - 1)) {
        rep.has_furthermore = true;
        std::uint64_t capsz = katona_extremal_G(n, k, u128(E)).family.size();
        rep.furthermore = a.size() <= capsz;
        os << " extremal_size=" << capsz;
    }
    rep.detail = os.str();
    return rep;
}

PredicateReport matching_stability(const UniformFamily& a, const StabilityParams& p) {
    PredicateReport rep;
    rep.theorem = "matching";
    int n = a.n, k = a.k, t = p.t, rr = p.r;
    if (rr > k || !(n > (2 * t + 1) * (k + rr) - t) || has_matching_of_size(a, t + 1)) {
        rep.detail = "needs a family with no matching of size t+1 and n > (2t+1)(k+r)-t";
        return rep;
    }
    rep.shape_ok = true;
    double c = kMatchC * p.delta;
    double floor_sz = double(binom_exact(n, k)) -
                      (1 + rr * c / n) * double(binom_exact(n - t, k));
    rep.hypothesis = double(a.size()) > floor_sz;
    // nearest cover over all t-element supports
    std::uint64_t best = ~0ull;
    UniformFamily tsets = initial_segment_colex(n, t, binom_exact(n, t));
    for (auto tm : tsets.members) {
        std::uint64_t inter = 0;
        for (auto mm : a.members)
            if (mm & tm) ++inter;
        std::uint64_t cover_sz = std::uint64_t(binom_exact(n, k) - binom_exact(n - t, k));
        std::uint64_t d = (a.size() - inter) + (cover_sz - inter);
        best = std::min(best, d);
    }
    rep.conclusion = double(best) < 3 * p.delta * double(binom_exact(n - t - 1, k - 1));
    std::ostringstream os;
    os << "size=" << a.size() << " floor=" << fmt(floor_sz) << " cover_dist=" << best;
    rep.detail = os.str();
    return rep;
}

}  // namespace

PredicateReport theorem_predicate(const CubeFamily& a, TheoremId which,
                                  const StabilityParams& p) {
    switch (which) {
        case TheoremId::BallStability: return ball_stability(a, p);
        case TheoremId::GenBallStability: return genball_stability(a, p);
        case TheoremId::TBallStability: return tball_stability(a, p);
        case TheoremId::CliqueStability:
        case TheoremId::StarStability:
        case TheoremId::MatchingStability:
            return theorem_predicate(cube_to_uniform(a), which, p);
    }
    throw std::logic_error("theorem_predicate: bad id");
}

PredicateReport theorem_predicate(const UniformFamily& a, TheoremId which,
                                  const StabilityParams& p) {
    switch (which) {
        case TheoremId::CliqueStability: return clique_stability(a, p);
        case TheoremId::StarStability: return star_stability(a, p);
        case TheoremId::MatchingStability: return matching_stability(a, p);
        case TheoremId::BallStability:
        case TheoremId::GenBallStability:
        case TheoremId::TBallStability:
            return theorem_predicate(uniform_to_cube(a), which, p);
    }
    throw std::logic_error("theorem_predicate: bad id");
}

SuiteReport suite_predicate_sweep(TheoremId which, int n, int k, std::uint64_t trials,
                                  std::uint64_t seed, const StabilityParams& params) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport r;
    r.suite = "predicate_sweep_" + theorem_id_name(which);
    if (n > 12) throw std::invalid_argument("suite_predicate_sweep: n must be <= 12");
    StabilityParams p = params;
    p.k = k;
    const double noise[3] = {0.01, 0.05, 0.1};
    for (std::uint64_t it = 0; it < trials; ++it) {
        Rng rng = Rng::for_instance(seed, it);
        PredicateReport rep;
        switch (which) {
            case TheoremId::BallStability: {
                CubeFamily base(n);
                for (std::uint32_t x = 0; x < (std::uint32_t(1) << n); ++x)
                    if (popcount64(x) >= k) base.add(x);
                CubeFamily a = it % 4 == 0 ? base : planted_cube(base, noise[it % 3], rng);
                rep = theorem_predicate(a, which, p);
                break;
            }
            case TheoremId::GenBallStability: {
                int s = k + int(rng.below(std::uint64_t(n - k + 1)));
                CubeFamily base = gen_ball_G1(n, k, s);
                CubeFamily a = it % 4 == 0 ? base : planted_cube(base, noise[it % 3], rng);
                rep = theorem_predicate(a, which, p);
                break;
            }
            case TheoremId::CliqueStability: {
                std::uint64_t size = 1 + rng.below(std::uint64_t(binom_exact(n, k)));
                UniformFamily a = random_uniform_family(n, k, size, rng);
                rep = theorem_predicate(a, which, p);
                break;
            }
            case TheoremId::StarStability: {
                // random subfamily of a star plus a few random extras kept
                // only if the family stays intersecting
                UniformFamily s1 = star(n, k, 1);
                std::vector<std::uint64_t> fam;
                for (auto m : s1.members)
                    if (rng.real01() > noise[it % 3]) fam.push_back(m);
                UniformFamily all = initial_segment_colex(n, k, binom_exact(n, k));
                for (int extra = 0; extra < 4; ++extra) {
                    std::uint64_t m = all.members[rng.below(all.members.size())];
                    bool ok = true;
                    for (auto x : fam)
                        if (!(x & m) || x == m) {
                            ok = false;
                            break;
                        }
                    if (ok) fam.push_back(m);
                }
                rep = theorem_predicate(UniformFamily::from_members(n, k, fam), which, p);
                break;
            }
            case TheoremId::TBallStability: {
                int kk = p.k >= 0 ? p.k : (n + 3) / 2;
                CubeFamily base = katona_extremal_G(n, kk, 0).family;
                // drop members only; dropping preserves t-intersection
                CubeFamily a(n);
                base.bits.for_each([&](std::uint32_t m) {
                    if (rng.real01() > noise[it % 3]) a.add(m);
                });
                rep = theorem_predicate(a, which, p);
                break;
            }
            case TheoremId::MatchingStability: {
                UniformFamily base = cover_ST(n, k, Subset((std::uint64_t(1) << p.t) - 1, n));
                std::vector<std::uint64_t> fam;
                for (auto m : base.members)
                    if (rng.real01() > noise[it % 3]) fam.push_back(m);
                rep = theorem_predicate(UniformFamily::from_members(n, k, fam), which, p);
                break;
            }
        }
        ++r.instances;
        if (!rep.shape_ok || !rep.hypothesis) {
            ++r.hypothesis_vacuous;
            continue;
        }
        bool concl = rep.conclusion && (!rep.has_furthermore || rep.furthermore);
        if (!concl) {
            ++r.violations;
            if (r.notes.size() < 8)
                r.notes.push_back("instance " + std::to_string(it) + ": " + rep.to_text());
        }
    }
    r.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace iso
