#pragma once

// Exact integer binomials, the real-variable binomial C(x,k), the transfer
// function f_k with its derivatives, and the closed-form lower bounds
// (exact shadow/boundary minima and their Lovasz-form relaxations).

#include <cstdint>

#include "iso/u128.hpp"

namespace iso {

// C(a,b) exactly; b < 0 gives 0.  Throws on overflow past 128 bits.
u128 binom_exact(std::int64_t a, std::int64_t b);

// sum_{i=k}^{n} C(n,i)
u128 binom_ge(int n, int k);

// C(x,k) = x(x-1)...(x-k+1)/k! as a polynomial in real x
double binom_real(double x, int k);

// unique x >= k-1 with C(x,k) = t (t >= 0); exact at integer clique sizes
double x_from_size(double t, int k);

// f_k(C(x,k)) = C(x,k-1); f_1 == 1
double f_k(double t, int k);

// g_k(x) = sum_{i=0}^{k-1} 1/(x-i), for x > k-1
double g_k(double x, int k);

struct FkDerivs {
    double first;
    double second;
};
// closed-form f_k' and f_k'' at t = C(x,k); requires k >= 2, t > 0
FkDerivs f_k_derivatives(double t, int k);

// checks C(x+c,k) >= C(x,k) + c*C(x-1,k-1)
bool mvt_lower(double x, double c, int k);

// |shadow| of the colex initial segment of m k-sets, via the cascade
// representation (no family is materialized)
u128 kk_exact_bound(int n, int k, u128 m);

// |shadow^i| of the colex initial segment, iterating the cascade
u128 kk_iterated_shadow(int n, int k, u128 m, int i);

// exact minimum vertex boundary for a family of m subsets of [n]
u128 harper_exact_bound(int n, u128 m);

struct LovaszBound {
    int k = 0;        // layer determined by the size window
    double x_root = 0;
    double value = 0;
};

// Lovasz form of the vertex isoperimetric bound:
// with m = C(n,>=k+1) + C(x,k), the bound is C(n,k) - C(x,k) + C(x,k-1).
// k is chosen by the window C(n,>=k+1) < m <= C(n,>=k); requires k >= 2.
LovaszBound blov_bound(int n, u128 m);

// Lovasz form of the shadow bound: C(x,k-1) with C(x,k) = m
LovaszBound lovasz_kk_bound(int k, u128 m);

// size = C(n-1,k) + a*C(n-1,k-1) with a in [0,1]  ->  C(n-1,k-1) + a*C(n-1,k-2)
double lym_plus_bound(int n, int k, double size);

// phi(t) = k - (t-1)/2 - k/(x-k+1) with C(x,k) = t, t in [1,k+1], k >= 3
double phi(double t, int k);

}  // namespace iso
