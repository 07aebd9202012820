// Sampled verification of the real-variable binomial estimates: ratio
// sandwiches, shift approximations, concavity, the Taylor/defect bounds and
// their instances, and the phi lemma.  All checks are inequalities over
// grids inside each statement's domain, at 1e-9 relative tolerance.

#include <chrono>
#include <cmath>
#include <sstream>

#include "iso/binomials.hpp"
#include "iso/verify.hpp"

namespace iso {

namespace {

struct NTimer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

constexpr double kRel = 1e-9;

double scale_of(double a, double b) { return std::max({1.0, std::abs(a), std::abs(b)}); }

void check_ge(SuiteReport& r, double lhs, double rhs, const char* tag) {
    ++r.instances;
    if (lhs < rhs - kRel * scale_of(lhs, rhs)) {
        ++r.violations;
        if (r.notes.size() < 8) {
            std::ostringstream os;
            os << tag << ": " << lhs << " < " << rhs;
            r.notes.push_back(os.str());
        }
    }
}

void check_eq(SuiteReport& r, double lhs, double rhs, const char* tag) {
    ++r.instances;
    if (std::abs(lhs - rhs) > kRel * scale_of(lhs, rhs)) {
        ++r.violations;
        if (r.notes.size() < 8) {
            std::ostringstream os;
            os << tag << ": " << lhs << " != " << rhs;
            r.notes.push_back(os.str());
        }
    }
}

// -f_k'' is decreasing in t, so its minimum over [a, a+w] is at a+w
double neg_second_at(double t, int k) { return -f_k_derivatives(t, k).second; }

}  // namespace

SuiteReport suite_estimates_numeric(std::uint64_t seed) {
    NTimer timer;
    SuiteReport r;
    r.suite = "estimates_numeric";

    // binomial identities
    for (std::uint64_t i = 0; i < 5000; ++i) {
        Rng rng = Rng::for_instance(seed, 1000000 + i);
        int k = 1 + int(rng.below(12));
        double x = k + 0.1 + rng.real01() * (40.0 - k - 0.1);
        check_eq(r, binom_real(x, k), binom_real(x - 1, k) + binom_real(x - 1, k - 1),
                 "pascal");
        check_eq(r, binom_real(x - 1, k) / binom_real(x, k), (x - k) / x, "ratio-shift-up");
        check_eq(r, binom_real(x, k - 1) / binom_real(x, k), k / (x - k + 1), "ratio-lower");
        check_eq(r, binom_real(x - 1, k - 1) / binom_real(x, k), k / x, "ratio-diag");
        if (k >= 2 && x > k + 1e-6) {
            check_eq(r, binom_real(x - 2, k - 1) / binom_real(x, k), k * (x - k) / (x * (x - 1)),
                     "ratio-two-step");
            check_ge(r, x / (4 * (x - 1)), binom_real(x - 2, k - 1) / binom_real(x, k),
                     "ratio-two-step-cap");
            check_eq(r, binom_real(x - 1, k - 1),
                     (x - 1) * (x - 2) / ((k - 1) * (x - k)) * binom_real(x - 3, k - 2),
                     "ratio-three-step");
        }
    }

    // ratio sandwich and its consequences
    for (std::uint64_t i = 0; i < 5000; ++i) {
        Rng rng = Rng::for_instance(seed, 2000000 + i);
        int k = 1 + int(rng.below(12));
        double y = k - 1 + 0.05 + rng.real01() * (40.0 - k);
        double x = y + rng.real01() * (40.0 - y);
        double ratio = binom_real(x, k) / binom_real(y, k);
        check_ge(r, ratio, std::pow(x / y, k), "sandwich-lower");
        check_ge(r, std::pow((x - k + 1) / (y - k + 1), k), ratio, "sandwich-upper");
        // growth consequence: y >= (1+a)k and C(x,k) >= (1+th)C(y,k) force x up
        double a = 0.1 + rng.real01() * 2.0;
        double yy = (1 + a) * k + rng.real01() * 10.0;
        double th = rng.real01();
        double xx = x_from_size((1 + th) * binom_real(yy, k), k);
        check_ge(r, xx, (1 + a * th / (2 * k * (1 + a))) * yy, "growth");
    }

    // shift approximation
    for (std::uint64_t i = 0; i < 5000; ++i) {
        Rng rng = Rng::for_instance(seed, 3000000 + i);
        int k = 2 + int(rng.below(11));
        double y = k - 1 + 0.05 + rng.real01() * (40.0 - k);
        double c = 0.001 + rng.real01() * 0.498;
        double factor = 1 + rng.real01() * c;  // in [1, 1+c], so x >= y
        double x = x_from_size(factor * binom_real(y, k), k);
        double q1 = binom_real(x - 1, k - 1) / binom_real(y - 1, k - 1);
        check_ge(r, 1 + c, q1, "shift-kminus-upper");
        check_ge(r, q1, 1 - c, "shift-kminus-lower");
        if (y > k + 1e-3) {
            double cc = (y + k) / (y - k) * c;
            double q2 = binom_real(x - 1, k) / binom_real(y - 1, k);
            check_ge(r, 1 + cc, q2, "shift-up-upper");
            check_ge(r, q2, 1 - cc, "shift-up-lower");
        }
        double q3 = binom_real(x + 1, k) / binom_real(y + 1, k);
        check_ge(r, 1 + c, q3, "shift-down-upper");
        check_ge(r, q3, 1 - c, "shift-down-lower");
    }

    // mean value bound C(x+c,k) >= C(x,k) + c C(x-1,k-1)
    for (std::uint64_t i = 0; i < 20000; ++i) {
        Rng rng = Rng::for_instance(seed, 4000000 + i);
        int k = 1 + int(rng.below(12));
        double x = k - 1 + rng.real01() * (40.0 - k + 1);
        double c = rng.real01() * 10.0;
        ++r.instances;
        if (!mvt_lower(x, c, k)) {
            ++r.violations;
            if (r.notes.size() < 8) r.notes.push_back("mvt violation");
        }
    }

    // derivative formulas vs central finite differences (1e-6 relative)
    for (std::uint64_t i = 0; i < 3000; ++i) {
        Rng rng = Rng::for_instance(seed, 5000000 + i);
        int k = 2 + int(rng.below(9));
        double x = k - 1 + 0.2 + rng.real01() * (3.0 * k - 0.2 - (k - 1));
        double t = binom_real(x, k);
        double h = 1e-4 * t;
        FkDerivs d = f_k_derivatives(t, k);
        double fp = (f_k(t + h, k) - f_k(t - h, k)) / (2 * h);
        double fpp = (f_k(t + h, k) - 2 * f_k(t, k) + f_k(t - h, k)) / (h * h);
        ++r.instances;
        if (std::abs(fp - d.first) > 1e-6 * std::max(1e-300, std::abs(d.first))) {
            ++r.violations;
            if (r.notes.size() < 8) r.notes.push_back("f' finite-difference mismatch");
        }
        ++r.instances;
        if (std::abs(fpp - d.second) > 1e-6 * std::max(1e-300, std::abs(d.second))) {
            ++r.violations;
            if (r.notes.size() < 8) r.notes.push_back("f'' finite-difference mismatch");
        }
        // concavity and the effective second-derivative lower bound
        ++r.instances;
        if (!(d.second < 0)) {
            ++r.violations;
            if (r.notes.size() < 8) r.notes.push_back("f'' not negative");
        }
        double alpha = x - (k - 1);
        double bound = 1.0 / ((2 + 1 / alpha) * (2 + 1 / alpha) * (x - k + 1) * t);
        check_ge(r, -d.second, bound * (1 + 1e-12), "second-derivative-bound");
        if (x >= k) {
            double b1 = 1.0 / (9.0 * (x - k + 1) * t);
            check_ge(r, -d.second, b1, "second-derivative-bound-unit");
        }
    }

    // concavity of f_k (chord test) and the two-function corollary
    for (std::uint64_t i = 0; i < 5000; ++i) {
        Rng rng = Rng::for_instance(seed, 6000000 + i);
        int k = 2 + int(rng.below(11));
        double t1 = rng.real01() * 1000.0;
        double t3 = t1 + 0.5 + rng.real01() * 1000.0;
        double u = rng.real01();
        double t2 = t1 + u * (t3 - t1);
        check_ge(r, f_k(t2, k), f_k(t1, k) + u * (f_k(t3, k) - f_k(t1, k)), "concavity-chord");
        int l = 2 + int(rng.below(11));
        double x = l + rng.real01() * (20.0 - l);
        double z = rng.real01() * binom_real(x - 1, l - 1);
        check_ge(r, f_k(binom_real(x, l) - z, l) + f_k(z, l - 1), binom_real(x, l - 1),
                 "split-concavity");
    }

    // chord-gap lower bound (concave g = f_k minus its chord on [a,b])
    for (std::uint64_t i = 0; i < 3000; ++i) {
        Rng rng = Rng::for_instance(seed, 7000000 + i);
        int k = 2 + int(rng.below(9));
        double xa = k - 0.5 + rng.real01() * 20.0;
        double xb = xa + 0.5 + rng.real01() * (41.0 - xa);
        double a = binom_real(xa, k), b = binom_real(xb, k);
        double w = (0.05 + 0.95 * rng.real01()) * (b - a) / 2;
        double m = neg_second_at(a + w, k);
        double fa = f_k(a, k), fb = f_k(b, k);
        auto chord = [&](double t) { return fa + (t - a) / (b - a) * (fb - fa); };
        double d = rng.real01() * w;
        check_ge(r, f_k(a + d, k) - chord(a + d), d * w * m / 4, "chord-gap");
        // defect transfer: a near-chord pair forces y close to an endpoint
        double y = a + rng.real01() * (b - a) / 2;
        double z = a + b - y;
        double gap = f_k(y, k) + f_k(z, k) - fa - fb;
        double phi_budget = gap * (1 + 1e-12) + 1e-9 * scale_of(fa, fb);
        check_ge(r, 4 * phi_budget / (m * w), y - a, "defect-transfer");
    }

    // near-chord sums of f_k and f_{k-1} pin y near an endpoint
    for (std::uint64_t i = 0; i < 3000; ++i) {
        Rng rng = Rng::for_instance(seed, 8000000 + i);
        int k = 3 + int(rng.below(10));
        double x = k + rng.real01() * (40.0 - k);
        double X = binom_real(x - 1, k), Y = binom_real(x - 1, k - 1);
        double c = 1e-4 + rng.real01() * 7e-4;
        double ylo = 600 * c * Y, yhi = (1 - 600 * c) * Y;
        if (ylo < yhi) {
            double y = ylo + rng.real01() * (yhi - ylo);
            check_ge(r, f_k(X + y, k) + f_k(Y - y, k - 1),
                     (1 + c / x) * binom_real(x, k - 1) * (1 - kRel), "mixed-sum");
        }
        if (x >= k + 1) {
            double ylo2 = 1e7 * c * binom_real(x - 2, k - 1);
            if (ylo2 < yhi) {
                double y = ylo2 + rng.real01() * (yhi - ylo2);
                check_ge(r, f_k(X + y, k) + f_k(Y - y, k - 1),
                         (1 + c / x) * binom_real(x, k - 1) * (1 - kRel), "mixed-sum-wide");
            }
        }
    }

    // defect instances: splitting a total X between two segment sizes
    for (std::uint64_t i = 0; i < 3000; ++i) {
        Rng rng = Rng::for_instance(seed, 9000000 + i);
        int l = 2 + int(rng.below(7));
        double x = l + 0.5 + rng.real01() * (30.0 - l);
        int n = int(std::ceil(x)) + int(rng.below(10));
        if (n > 40) n = 40;
        double cnl = double(binom_exact(n, l));
        double cxl = binom_real(x, l);
        double c = 1e-6 + rng.real01() * 1e-3;
        // (a) X just below the full layer
        {
            double Xlo = cnl - 0.25 * cxl;
            double X = std::floor(Xlo + rng.real01() * (cnl - Xlo));
            double B = 400 * c * binom_real(x - 1, l - 1);
            double y = std::floor(B) + 1 + rng.below(8);
            if (y <= X / 2) {
                check_ge(r, f_k(y, l) + f_k(X - y, l),
                         1 + f_k(X, l) + (c / x) * binom_real(x, l - 1), "defect-layer");
            } else {
                ++r.hypothesis_vacuous;
            }
        }
        // (b) X just above the full layer
        {
            double E = std::floor(1 + rng.real01() * (0.25 * cxl - 1));
            if (E >= 1) {
                double B = E + 400 * c * binom_real(x - 1, l - 1);
                double y = std::floor(B) + 1 + rng.below(8);
                double z = cnl + E - y;
                if (y <= z) {
                    check_ge(r, f_k(y, l) + f_k(z, l),
                             f_k(E, l) + double(binom_exact(n, l - 1)) +
                                 (c / x) * binom_real(x, l - 1),
                             "defect-layer-over");
                } else {
                    ++r.hypothesis_vacuous;
                }
            }
        }
        // (c) y pinned just above C(x,l)
        if (cnl > cxl * 1.02) {
            double theta = cnl / cxl - 1;
            double B = cxl + 72 * c / theta * binom_real(x - 1, l - 1);
            double total = cxl + cnl;
            if (B < total / 2) {
                double y = B + (total / 2 - B) * (1e-6 + rng.real01());
                if (y > total / 2) y = total / 2;
                double z = total - y;
                check_ge(r, f_k(y, l) + f_k(z, l),
                         binom_real(x, l - 1) + double(binom_exact(n, l - 1)) + (c / x) * cxl,
                         "defect-two-cliques");
            } else {
                ++r.hypothesis_vacuous;
            }
        }
    }

    // phi: endpoints, the value at 2, and concavity
    for (int k = 3; k <= 30; ++k) {
        check_eq(r, phi(1.0, k), 0.0, "phi-left-zero");
        check_eq(r, phi(double(k + 1), k), 0.0, "phi-right-zero");
        check_ge(r, phi(2.0, k), 0.75 * (1 + 1e-12), "phi-at-two");
    }
    for (std::uint64_t i = 0; i < 3000; ++i) {
        Rng rng = Rng::for_instance(seed, 10000000 + i);
        int k = 3 + int(rng.below(28));
        double t1 = 1 + rng.real01() * k;
        double t3 = t1 + (k + 1 - t1) * rng.real01();
        if (t3 - t1 < 1e-6) continue;
        double u = rng.real01();
        double t2 = t1 + u * (t3 - t1);
        check_ge(r, phi(t2, k), phi(t1, k) + u * (phi(t3, k) - phi(t1, k)), "phi-concavity");
    }

    r.wall_ms = timer.ms();
    return r;
}

}  // namespace iso
