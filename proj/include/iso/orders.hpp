#pragma once

// Colex order on k-sets and the simplicial order on P[n]:
// comparison, exact rank/unrank, initial segments, segment recognition.
//
// Colex: A < B iff max(A triangle B) in B; on equal-size sets this is
// numeric order of the bit masks.  Simplicial: decreasing size first,
// colex inside each layer.

#include <cstdint>

#include "iso/subsets.hpp"
#include "iso/u128.hpp"

namespace iso {

enum class Ordering { Less, Equal, Greater };

Ordering colex_compare(const Subset& a, const Subset& b);  // requires |a| == |b|
Ordering simplicial_compare(const Subset& a, const Subset& b);

u128 colex_rank(const Subset& a);
Subset colex_unrank(int n, int k, u128 rank);

u128 simplicial_rank(const Subset& a);
Subset simplicial_unrank(int n, u128 rank);

// the m colex-smallest k-subsets of [n]
UniformFamily initial_segment_colex(int n, int k, u128 m);
// the m simplicially-smallest subsets of [n]
CubeFamily initial_segment_simplicial(int n, u128 m);

bool is_initial_segment_colex(const UniformFamily& f);
bool is_initial_segment_simplicial(const CubeFamily& f);

// next k-set mask in colex order (Gosper)
std::uint64_t next_colex_mask(std::uint64_t v);

}  // namespace iso
