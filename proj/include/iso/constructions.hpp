#pragma once

// The named families: Hamming balls, generalised balls, perturbed initial
// segments, projected balls, stars, covers, and the two extremal families
// for intersecting / t-intersecting stability.

#include "iso/subsets.hpp"
#include "iso/u128.hpp"

namespace iso {

// all vertices within Hamming distance `radius` of `center`
CubeFamily hamming_ball(int n, int radius, const Subset& center);

// G1 = [n]^{>=k+1} u [s]^{(k)};  G2 = [n]^{>=k+1} u [s-1]^{(k)} u [s-1]^{(k-1)}
CubeFamily gen_ball_G1(int n, int k, int s);
CubeFamily gen_ball_G2(int n, int k, int s);

// I_{m-D} u (I_{m+E} \ I_m) in the simplicial order
CubeFamily perturbed_segment_J(int n, u128 m, u128 D, u128 E);

// I^(k)_{C(s-1,k)+E1} u (I^(k)_{C(s,k)+E2} \ I^(k)_{C(s,k)}) in colex
UniformFamily perturbed_clique_Jk(int n, int k, int s, u128 E1, u128 E2);

// {A subset [n] : |A ^ [n-2]| >= k-1} with n odd, k = (n+1)/2
CubeFamily projected_ball(int n);

UniformFamily star(int n, int k, int i);
UniformFamily cover_ST(int n, int k, const Subset& T);

// extremal intersecting family: final E colex sets avoiding element 1,
// plus every star set meeting all of them
UniformFamily ekr_extremal_F(int n, int k, u128 E);

struct KatonaG {
    CubeFamily family;
    u128 e_prime = 0;  // number of top colex k-sets removed
};
// extremal t-intersecting family (t = 2k-n >= 2): the half-cube ball plus
// the first E colex (k-1)-sets, minus the final E' colex k-sets with E'
// minimal so that the (t-1)-iterated shadow still fits
KatonaG katona_extremal_G(int n, int k, u128 E);

}  // namespace iso
