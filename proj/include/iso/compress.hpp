#pragma once

// The C_{U,V} compression operator and the two audited compression
// schedules: shadow-safe compression of a k-uniform family to a colex
// initial segment, and boundary-safe compression of a cube family to a
// ball-like family.  Every safety property is checked at run time; a
// schedule that cannot make progress fails loudly with its trace.

#include <string>
#include <utility>
#include <vector>

#include "iso/subsets.hpp"

namespace iso {

struct CompressionStep {
    std::uint32_t u_mask = 0;
    std::uint32_t v_mask = 0;
    std::uint64_t size_before = 0;
    std::uint64_t size_after = 0;
    std::uint64_t boundary_before = 0;  // vertex boundary, or shadow for the colex schedule
    std::uint64_t boundary_after = 0;
    std::uint64_t moved = 0;
};

struct CompressionTrace {
    std::string schedule;  // "kk" | "harper" | "monotonize"
    int n = 0;
    int k = -1;                   // colex schedule only
    std::uint64_t l0 = 0;         // harper: number of leading |U| = 0 steps
    std::vector<std::uint64_t> initial_members;
    std::vector<std::uint64_t> final_members;
    std::vector<CompressionStep> steps;

    std::string to_json() const;
};

// family-level C_{U,V}: an eligible member moves to (A \ U) u V unless the
// target is already a member; size is always preserved
CubeFamily compress_UV(const CubeFamily& f, const Subset& U, const Subset& V);
UniformFamily compress_UV(const UniformFamily& f, const Subset& U, const Subset& V);

bool is_UV_fixed(const CubeFamily& f, const Subset& U, const Subset& V);
bool is_UV_fixed(const UniformFamily& f, const Subset& U, const Subset& V);

// C_{U',V'}(F) = F for every U' in U with |U'| = |U|-1 and V' in V with
// |V'| = |V|-1
bool subcompression_condition(const CubeFamily& f, const Subset& U, const Subset& V);
bool subcompression_condition(const UniformFamily& f, const Subset& U, const Subset& V);

// cyclic C_{empty,{i}} passes until fixed; result is an upset of equal size
std::pair<CubeFamily, CompressionTrace> monotonize(const CubeFamily& f);

// compress a k-uniform family to the colex initial segment of its size;
// audited: size preserved, shadow non-increasing, rank-sum strictly decreasing
CompressionTrace kk_compression_schedule(const UniformFamily& f);

// compress a cube family to a ball-like family; phase 1 monotonizes, phase 2
// applies minimal |V| = |U|+1 compressions; audited: size preserved, vertex
// boundary non-increasing, upsets preserved in phase 2
CompressionTrace harper_compression_schedule(const CubeFamily& f);

UniformFamily trace_final_uniform(const CompressionTrace& t);
CubeFamily trace_final_cube(const CompressionTrace& t);

bool is_ball_like(const CubeFamily& f);

}  // namespace iso
