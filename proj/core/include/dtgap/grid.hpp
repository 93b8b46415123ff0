#pragma once

// Instance grids for verification sweeps: every normalized instance with a
// given shape is determined by its multiset of element neighborhoods, and
// normalization forces those to be distinct and non-empty, so the grid is
// exactly the u-subsets of the non-empty subsets of [n].

#include <cstdint>
#include <vector>

#include "dtgap/setcover.hpp"

namespace dtgap {

// All normalized instances with exactly n sets and u elements, neighborhoods
// ascending as masks, enumerated in lexicographic order of the mask tuple.
// Empty when the shape admits no normalized instance (1 + ceil(log2 u) > n).
// Identifiers are s0..s{n-1} / e0..e{u-1}.
std::vector<SetCoverInstance> enumerate_instances(int n, int u);

// How many instances enumerate_instances(n, u) yields, without building them.
std::uint64_t count_instances(int n, int u);

// One normalized instance with the given shape, drawn reproducibly from the
// seed (distinct random non-empty neighborhoods, sorted ascending).  Throws
// when the shape admits none.
SetCoverInstance random_instance(int n, int u, std::uint64_t seed);

}  // namespace dtgap
