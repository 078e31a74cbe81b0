#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace minev {

struct RootedEntry {
    SingleRootedGraph h;
    int size = 0;    // edge count
    int ell0 = -1;   // filled in by annotate_ell0
    bool maximal = false;
    std::string canonical;  // canonical edge string
};

struct RootedCatalog {
    std::vector<RootedEntry> entries;  // sorted by (size, canonical string)
    std::vector<int> size_histogram;   // entry count per size, index = size
};

// Breadth-first closure of the seed family {one-vertex graph, two-edge star}
// under single-edge growth (a missing edge between the two colour classes, or
// a new pendant vertex), keeping the bipartition fixed and the root interior.
// A candidate is admitted when the classification gate places the order-0 ape
// extension of its line graph above -lambda*; an entry is maximal when no
// one-edge growth passes that gate (for this, the interior-root requirement is
// ignored — it only bites for the one-vertex seed, whose sole growth is a
// pendant on the root).
RootedCatalog enumerate_rooted(int jobs = 0);

// Fills each entry's ell0: the smallest path length at which the entry's line
// graph leaves the PSD-at--2 region under ape extension.
void annotate_ell0(RootedCatalog& catalog, int jobs = 0);

// True iff every connected general subgraph (any edge subset, plus the root)
// of every maximal entry with interior root is isomorphic to a catalog entry.
bool check_general_subgraph_closure(const RootedCatalog& catalog);

}  // namespace minev
