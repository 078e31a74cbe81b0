#pragma once

#include <map>
#include <vector>

#include "enum_maverick.hpp"
#include "graph.hpp"

namespace minev {

// An occurrence of the twisted-path attachment pattern: adjacent degree-2
// vertices u1 < u2 sharing their remaining neighbour u0 (a triangle on
// u0, u1, u2), with a leaf uc on u0 distinct from u1 and u2. Removing
// {u0, u1, u2, uc} and rooting the remainder at the other neighbours of u0
// exhibits the graph as a zero-length twisted-path extension.
std::vector<Witness> tpe_witnesses(const Graph& g);

// The rooted graph left after deleting a witness's four pattern vertices:
// roots are the neighbours of u0 outside the pattern, reindexed.
RootedGraph witness_host(const Graph& g, const Witness& w);

// Checks that rebuilding from the witness host with a zero-length augmented-
// (resp. twisted-) path extension gives back a graph isomorphic to g.
bool verify_ape_reconstruction(const Graph& g, const Witness& w);
bool verify_tpe_reconstruction(const Graph& g, const Witness& w);

struct TwistedEntry {
    Graph g;
    Witness w;  // the graph's unique twisted-path witness
};

// The twisted mavericks: mavericks carrying a twisted-path witness. Each is
// expected to carry exactly one; a second witness raises std::logic_error.
std::vector<TwistedEntry> filter_twisted(const std::vector<Graph>& mavericks);

std::map<int, int> twisted_histogram(const std::vector<TwistedEntry>& entries);

}  // namespace minev
