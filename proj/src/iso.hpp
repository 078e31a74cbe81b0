#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace minev {

// Invariant of a single-rooted connected bipartite graph under root-preserving
// isomorphism: root degree, then the sorted degree sequences of the root's
// part and of the opposite part.
struct SingleRootedKey {
    int root_degree = 0;
    std::vector<int> part_root;
    std::vector<int> part_other;
    auto operator<=>(const SingleRootedKey&) const = default;
};

SingleRootedKey hash_single_rooted(const SingleRootedGraph& h);

// Invariant under plain isomorphism: the sorted multiset of
// (degree of v, number of edges inside N(v)) pairs.
using GraphKey = std::vector<std::pair<int, int>>;
GraphKey hash_graph(const Graph& g);

// Vertex bijection a -> b preserving adjacency (and roots / the root, for the
// rooted overloads), or nullopt. For connected bipartite single-rooted graphs
// pinning root to root forces part to map to part, so no part constraint is
// needed beyond the pin.
std::optional<std::vector<int>> isomorphic(const Graph& a, const Graph& b);
std::optional<std::vector<int>> isomorphic(const RootedGraph& a, const RootedGraph& b);
std::optional<std::vector<int>> isomorphic(const SingleRootedGraph& a, const SingleRootedGraph& b);

// Canonical relabelling (same string for isomorphic inputs): vertices are
// classed by iterated degree refinement, classes laid out in signature order,
// and the lexicographically smallest adjacency ordering is chosen within
// classes by backtracking. The result is the edge string of the relabelled
// graph; for the rooted form the root is always position 0 ('r').
std::string canonical_edge_string(const Graph& g);
std::string canonical_edge_string(const SingleRootedGraph& h);

}  // namespace minev
