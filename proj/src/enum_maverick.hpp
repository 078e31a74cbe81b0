#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graph.hpp"

namespace minev {

// An occurrence of the augmented-path attachment pattern inside a graph:
// u1 has degree 2 with a leaf neighbour u2, u0 is the other neighbour of u1,
// and uc is a leaf on u0 distinct from u1 and u2. Removing {u0, u1, u2, uc}
// and rooting the remainder at the neighbours of u0 exhibits the graph as a
// zero-length augmented-path extension of a smaller rooted graph.
struct Witness {
    int u0, u1, u2, uc;

    auto operator<=>(const Witness&) const = default;
};

// All augmented-path witnesses, ordered by (u1, u2, uc) ascending.
std::vector<Witness> ape_witnesses(const Graph& g);

struct MaverickResult {
    std::vector<Graph> mavericks;      // discovery order
    std::map<int, int> level_members;  // order -> search-level size
    std::map<int, int> histogram;      // order -> mavericks of that order
};

// Enumerates the mavericks: connected graphs with smallest adjacency
// eigenvalue in the open interval between -lambda* and -2 that are not
// augmented-path extensions of anything smaller. The search grows one vertex
// at a time from a single edge, attaching each new vertex to a tracked list
// of candidate neighbourhoods; a neighbourhood survives into the next level
// only if the grown graph still passes the interval gate. Levels of
// isomorphic children are merged, pooling their neighbourhood lists through
// the isomorphism. The search closes at order 19.
//
// If checkpoint_dir is nonempty, a resumable snapshot is written after each
// level and an existing complete snapshot is used as the starting point.
MaverickResult enumerate_mavericks(int jobs = 0, const std::string& checkpoint_dir = {});

}  // namespace minev
