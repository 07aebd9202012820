#pragma once

// Brute-force and sampled verification suites for the exactly checkable
// identities and inequalities, plus hypothesis/conclusion predicate
// checkers for the stability statements at desk scale.

#include <cstdint>
#include <string>
#include <vector>

#include "iso/subsets.hpp"
#include "iso/u128.hpp"

namespace iso {

struct SuiteReport {
    std::string suite;
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;
    std::uint64_t equality_witnesses = 0;
    std::uint64_t hypothesis_vacuous = 0;
    double wall_ms = 0;  // measured, not serialized by default (reports must be reproducible)
    std::vector<std::string> notes;  // first few violation descriptions

    bool pass() const { return violations == 0; }
    std::string to_json(bool with_timing = false) const;
    std::string to_text(bool with_timing = false) const;
};

// --- deterministic samplers (counter-derived streams) ---
CubeFamily random_cube_family_of_size(int n, std::uint64_t size, Rng& rng);
CubeFamily random_cube_family_bernoulli(int n, Rng& rng);
UniformFamily random_uniform_family(int n, int k, std::uint64_t size, Rng& rng);
// membership noise at rate p, then size repaired back to |base|
CubeFamily planted_cube(const CubeFamily& base, double p, Rng& rng);

// --- suites ---
SuiteReport suite_harper_exhaustive(int n);
SuiteReport suite_submodularity(int n, std::uint64_t trials, int max_i, std::uint64_t seed,
                                int threads = 1);
SuiteReport suite_plJ_identity(int n);
SuiteReport suite_kkprops(int n);
SuiteReport suite_local_stability_kk(int n, int k);
SuiteReport suite_ball_local_stability(std::uint64_t random_trials, std::uint64_t seed,
                                       int threads = 1);
SuiteReport suite_ball_intersection_monotone(int nmax);
SuiteReport suite_estimates_numeric(std::uint64_t seed);
SuiteReport suite_compression_audit(std::uint64_t kk_trials, std::uint64_t harper_trials,
                                    std::uint64_t seed, int threads = 1);
SuiteReport suite_extremal_spotcheck(std::uint64_t trials, std::uint64_t seed);

// |vertex boundary of J_{m,D,D}| for D = 0..dmax, with m = C(n,>=k);
// dmax defaults to n-1
std::vector<std::uint64_t> nonmono_table(int n, int k, int dmax = -1);

// --- stability predicate checkers (checkers, not provers) ---

enum class TheoremId {
    BallStability,      // ball-sized families vs Hamming balls
    CliqueStability,    // k-uniform families vs cliques (shadow)
    GenBallStability,   // general families vs generalised Hamming balls
    StarStability,      // intersecting families vs stars
    TBallStability,     // t-intersecting families vs the half-cube ball
    MatchingStability,  // matching-free families vs covers
};

TheoremId theorem_id_from_string(const std::string& s);
std::string theorem_id_name(TheoremId id);

struct StabilityParams {
    double delta = 0.1;  // also used as delta0 / theta depending on the theorem
    int k = -1;          // layer parameter where the shape needs one
    int t = 1;           // matching: forbidden matching size minus one
    int r = 1;           // matching: shadow depth
};

struct PredicateReport {
    std::string theorem;
    bool shape_ok = false;
    bool hypothesis = false;
    bool conclusion = false;
    bool has_furthermore = false;
    bool furthermore = false;
    std::string detail;

    std::string to_json() const;
    std::string to_text() const;
};

PredicateReport theorem_predicate(const CubeFamily& a, TheoremId which, const StabilityParams& p);
PredicateReport theorem_predicate(const UniformFamily& a, TheoremId which,
                                  const StabilityParams& p);

// randomized sweep: no instance may satisfy the hypothesis and fail the
// conclusion; instances that fail the hypothesis count as vacuous
SuiteReport suite_predicate_sweep(TheoremId which, int n, int k, std::uint64_t trials,
                                  std::uint64_t seed, const StabilityParams& p);

// --- exploratory search (no pass/fail semantics) ---
struct ExploreWitness {
    std::string desc;
    std::uint64_t size = 0;
    std::uint64_t boundary = 0;
    double blov = 0;
    double excess = 0;          // boundary / blov - 1
    std::uint64_t ball_distance = 0;
};
std::vector<ExploreWitness> explore_dense_conjecture(int n, double epsilon, std::uint64_t trials,
                                                     std::uint64_t seed);

}  // namespace iso
