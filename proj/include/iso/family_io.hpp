#pragma once

// Text format for set families.
//
//   n=<n>\n
//   k=<k>\n          (optional; present iff the family is k-uniform)
//   <set line>\n     one per member: comma-separated 1-based elements,
//                    ascending; an empty line is the empty set
//
// Members are written in ascending mask (colex) order, so serialization is
// canonical.  The parser rejects duplicate elements, out-of-range elements
// and duplicate sets.

#include <iosfwd>
#include <string>
#include <variant>

#include "iso/subsets.hpp"

namespace iso {

using AnyFamily = std::variant<CubeFamily, UniformFamily>;

AnyFamily read_family(std::istream& in);
AnyFamily read_family_file(const std::string& path);

void write_family(std::ostream& out, const CubeFamily& f);
void write_family(std::ostream& out, const UniformFamily& f);
void write_family_file(const std::string& path, const AnyFamily& f);

// uniform view of either variant (throws if a cube family is not uniform)
UniformFamily as_uniform(const AnyFamily& f);
// cube view (throws if n > 30)
CubeFamily as_cube(const AnyFamily& f);

}  // namespace iso
