#include "iso/binomials.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace iso {

u128 binom_exact(std::int64_t a, std::int64_t b) {
    if (b < 0) return 0;
    if (a < 0) throw std::invalid_argument("binom_exact: negative upper argument");
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    u128 r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        u128 f = u128(a - b + i);
        if (r > ~u128(0) / f) throw std::overflow_error("binom_exact: exceeds 128 bits");
        r = r * f / u128(i);  // divisible at every step
    }
    return r;
}

u128 binom_ge(int n, int k) {
    u128 s = 0;
    for (int i = k < 0 ? 0 : k; i <= n; ++i) s += binom_exact(n, i);
    return s;
}

double binom_real(double x, int k) {
    if (k < 0) return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= (x - i) / (i + 1);
    return r;
}

double x_from_size(double t, int k) {
    if (k < 1) throw std::invalid_argument("x_from_size: k must be >= 1");
    if (t < 0) throw std::invalid_argument("x_from_size: t must be >= 0");
    if (t == 0) return double(k - 1);
    // exact pass-through at integer clique sizes
    if (t == std::floor(t) && t <= 9.2e18) {
        u128 ti = u128(t);
        std::int64_t lo = k, hi = k;
        while (binom_exact(hi, k) < ti && hi < (std::int64_t(1) << 40)) hi *= 2;
        while (lo < hi) {
            std::int64_t mid = lo + (hi - lo) / 2;
            if (binom_exact(mid, k) < ti)
                lo = mid + 1;
            else
                hi = mid;
        }
        if (binom_exact(lo, k) == ti) return double(lo);
    }
    // bracketed Newton with bisection fallback
    double lo = double(k - 1);
    double hi = k - 1 + std::max(2.0, 2.0 * std::pow(t, 1.0 / k));
    while (binom_real(hi, k) < t) hi = k - 1 + 2.0 * (hi - (k - 1));
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double v = binom_real(x, k) - t;
        if (v == 0) return x;
        if (v > 0)
            hi = x;
        else
            lo = x;
        double d = binom_real(x, k) * g_k(x, k);  // derivative of C(x,k), x > k-1 here
        double nx = d > 0 ? x - v / d : 0.5 * (lo + hi);
        if (!(nx > lo && nx < hi)) nx = 0.5 * (lo + hi);
        if (std::abs(nx - x) < 1e-12) return nx;
        x = nx;
    }
    return x;
}

double f_k(double t, int k) {
    if (k < 1) throw std::invalid_argument("f_k: k must be >= 1");
    if (t < 0) throw std::invalid_argument("f_k: t must be >= 0");
    if (k == 1) return 1.0;
    return binom_real(x_from_size(t, k), k - 1);
}

double g_k(double x, int k) {
    if (k < 1) throw std::invalid_argument("g_k: k must be >= 1");
    if (!(x > k - 1)) throw std::invalid_argument("g_k: requires x > k-1");
    double s = 0;
    for (int i = 0; i < k; ++i) s += 1.0 / (x - i);
    return s;
}

FkDerivs f_k_derivatives(double t, int k) {
    if (k < 2) throw std::invalid_argument("f_k_derivatives: k must be >= 2");
    if (!(t > 0)) throw std::invalid_argument("f_k_derivatives: t must be > 0");
    double x = x_from_size(t, k);
    double gk = g_k(x, k);
    double gk1 = g_k(x, k - 1);
    double dgk1 = 0;
    for (int i = 0; i < k - 1; ++i) dgk1 -= 1.0 / ((x - i) * (x - i));
    FkDerivs d;
    d.first = k * gk1 / ((x - k + 1) * gk);
    d.second = k * (dgk1 - gk1 * gk1) / (t * (x - k + 1) * (x - k + 1) * gk * gk * gk);
    return d;
}

bool mvt_lower(double x, double c, int k) {
    if (c < 0 || x < k - 1) throw std::invalid_argument("mvt_lower: domain violation");
    double lhs = binom_real(x + c, k);
    double rhs = binom_real(x, k) + c * binom_real(x - 1, k - 1);
    return lhs >= rhs - 1e-9 * std::max(1.0, std::abs(rhs));
}

u128 kk_exact_bound(int n, int k, u128 m) {
    if (k < 1 || k > n) throw std::invalid_argument("kk_exact_bound: bad k");
    if (m > binom_exact(n, k)) throw std::invalid_argument("kk_exact_bound: m out of range");
    u128 shadow = 0;
    u128 r = m;
    for (int j = k; j >= 1 && r > 0; --j) {
        std::int64_t a = j;
        while (binom_exact(a + 1, j) <= r) ++a;
        r -= binom_exact(a, j);
        shadow += binom_exact(a, j - 1);
    }
    return shadow;
}

u128 kk_iterated_shadow(int n, int k, u128 m, int i) {
    if (i < 0 || i > k) throw std::invalid_argument("kk_iterated_shadow: bad iteration count");
    u128 cur = m;
    for (int step = 0; step < i; ++step) {
        cur = kk_exact_bound(n, k - step, cur);
    }
    return cur;
}

u128 harper_exact_bound(int n, u128 m) {
    if (n < 1 || n > 64) throw std::invalid_argument("harper_exact_bound: bad n");
    u128 total = u128(1) << n;
    if (m > total) throw std::invalid_argument("harper_exact_bound: m out of range");
    if (m == 0 || m == total) return 0;
    // locate the layer window: C(n,>=k+1) <= m < C(n,>=k)
    int k = n;
    u128 above = 0;  // C(n, >= k+1)
    while (k >= 0) {
        u128 next = above + binom_exact(n, k);
        if (m < next) break;
        above = next;
        --k;
    }
    u128 mprime = m - above;
    u128 r = binom_exact(n, k) - mprime;
    if (mprime > 0 && k >= 1) r += kk_exact_bound(n, k, mprime);
    return r;
}

LovaszBound blov_bound(int n, u128 m) {
    if (m == 0) throw std::invalid_argument("blov_bound: m must be positive");
    if (m > (u128(1) << n)) throw std::invalid_argument("blov_bound: m out of range");
    // window C(n,>=k+1) < m <= C(n,>=k); the top edge goes to the larger k
    int k = n;
    u128 above = 0;
    while (k >= 0) {
        u128 next = above + binom_exact(n, k);
        if (m <= next) break;
        above = next;
        --k;
    }
    if (k < 2) throw std::invalid_argument("blov_bound: size window requires k >= 2");
    u128 t = m - above;
    LovaszBound b;
    b.k = k;
    b.x_root = x_from_size(double(t), k);
    b.value = double(binom_exact(n, k)) - double(t) + binom_real(b.x_root, k - 1);
    return b;
}

LovaszBound lovasz_kk_bound(int k, u128 m) {
    if (k < 1) throw std::invalid_argument("lovasz_kk_bound: k must be >= 1");
    LovaszBound b;
    b.k = k;
    b.x_root = x_from_size(double(m), k);
    b.value = f_k(double(m), k);
    return b;
}

double lym_plus_bound(int n, int k, double size) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("lym_plus_bound: bad k");
    double base = double(binom_exact(n - 1, k));
    double layer = double(binom_exact(n - 1, k - 1));
    double alpha = (size - base) / layer;
    if (alpha < -1e-9 || alpha > 1 + 1e-9)
        throw std::invalid_argument("lym_plus_bound: size outside representable window");
    alpha = std::min(1.0, std::max(0.0, alpha));
    return layer + alpha * double(binom_exact(n - 1, k - 2));
}

double phi(double t, int k) {
    if (k < 3) throw std::invalid_argument("phi: k must be >= 3");
    if (t < 1 || t > k + 1) throw std::invalid_argument("phi: t out of [1, k+1]");
    double x = x_from_size(t, k);
    return k - (t - 1) / 2.0 - double(k) / (x - k + 1);
}

}  // namespace iso
