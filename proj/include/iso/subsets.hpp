#pragma once

// Subsets of [n] and families over {0,1}^n.  Elements are 1-based
// throughout: element i of [n] is bit (i-1) of a mask.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "iso/bits.hpp"

namespace iso {

struct Subset {
    std::uint64_t mask = 0;
    int n = 0;

    Subset() = default;
    Subset(std::uint64_t mask_, int n_) : mask(mask_), n(n_) {
        if (n < 0 || n > 64) throw std::invalid_argument("Subset: n out of range");
        if (n < 64 && (mask >> n) != 0) throw std::invalid_argument("Subset: mask uses bits above n");
    }
    static Subset of(const std::vector<int>& elems, int n);

    int size() const { return popcount64(mask); }
    bool contains(int e) const { return e >= 1 && e <= n && ((mask >> (e - 1)) & 1); }
    std::vector<int> elements() const {
        std::vector<int> r;
        for (int e = 1; e <= n; ++e)
            if ((mask >> (e - 1)) & 1) r.push_back(e);
        return r;
    }
    bool operator==(const Subset& o) const { return mask == o.mask && n == o.n; }
};

// A family over {0,1}^n, dense bitset over all 2^n vertices.  n <= 30.
struct CubeFamily {
    int n = 0;
    CubeBits bits;

    CubeFamily() = default;
    explicit CubeFamily(int n_) : n(n_), bits(n_) {
        if (n < 1 || n > 30) throw std::invalid_argument("CubeFamily: n must be in [1,30]");
    }
    static CubeFamily from_members(int n, const std::vector<std::uint32_t>& masks);
    static CubeFamily full(int n);

    std::uint64_t size() const { return bits.count(); }
    bool contains(std::uint32_t mask) const { return bits.test(mask); }
    void add(std::uint32_t mask) {
        if (mask >> n) throw std::invalid_argument("CubeFamily: member mask out of range");
        bits.set(mask);
    }
    void remove(std::uint32_t mask) { bits.reset(mask); }
    std::vector<std::uint32_t> members() const { return bits.members(); }
    bool operator==(const CubeFamily& o) const { return n == o.n && bits == o.bits; }
};

// A k-uniform family as a strictly sorted list of masks.  Supports n <= 64
// (shadow-only pipelines do not need the dense cube).
struct UniformFamily {
    int n = 0;
    int k = 0;
    std::vector<std::uint64_t> members;  // strictly ascending, popcount == k each

    UniformFamily() = default;
    UniformFamily(int n_, int k_) : n(n_), k(k_) {
        if (n < 1 || n > 64) throw std::invalid_argument("UniformFamily: n must be in [1,64]");
        if (k < 0 || k > n) throw std::invalid_argument("UniformFamily: k must be in [0,n]");
    }
    static UniformFamily from_members(int n, int k, std::vector<std::uint64_t> masks);

    std::uint64_t size() const { return members.size(); }
    bool contains(std::uint64_t mask) const;
    bool operator==(const UniformFamily& o) const {
        return n == o.n && k == o.k && members == o.members;
    }
};

// -------- boundary / shadow / neighborhood operators --------

CubeFamily vertex_boundary(const CubeFamily& f);
UniformFamily lower_shadow(const UniformFamily& f);
CubeFamily iterated_neighborhood(const CubeFamily& f, int i);

// splits along coordinate `coord` (1-based): (A0, A1) over n-1 coordinates
std::pair<CubeFamily, CubeFamily> sections(const CubeFamily& f, int coord);

bool is_t_intersecting(const CubeFamily& f, int t);
bool is_t_intersecting(const UniformFamily& f, int t);

// true iff f contains s pairwise disjoint members (exact branch and bound)
bool has_matching_of_size(const UniformFamily& f, int s);

std::uint64_t symdiff_size(const CubeFamily& f, const CubeFamily& g);

bool is_upset(const CubeFamily& f);

// relabeling by a permutation of [n]; perm[i-1] is the image of element i
CubeFamily relabel(const CubeFamily& f, const std::vector<int>& perm);
UniformFamily relabel(const UniformFamily& f, const std::vector<int>& perm);
// cube automorphism x -> x ^ c
CubeFamily translate(const CubeFamily& f, std::uint32_t c);

UniformFamily cube_to_uniform(const CubeFamily& f);   // requires all members same size
CubeFamily uniform_to_cube(const UniformFamily& f);   // requires n <= 30

}  // namespace iso
