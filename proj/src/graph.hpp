#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace minev {

// Undirected simple graph on at most 64 vertices; one adjacency bitmask per
// vertex. Vertices are dense indices 0..n-1.
struct Graph {
    static constexpr int kMaxVertices = 64;

    int n = 0;
    std::vector<uint64_t> adj;

    Graph() = default;
    explicit Graph(int n_);

    int add_vertex();
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj[u] >> v & 1u; }
    int degree(int v) const { return __builtin_popcountll(adj[v]); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // (u, v) with u < v, sorted

    uint64_t vertex_mask() const { return n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1; }
    uint64_t component_of(int v) const;  // mask of v's connected component
    bool connected() const;

    // Subgraph induced on the vertices of `mask`, reindexed densely in
    // ascending old-index order; `old_index` (if given) receives the map
    // new index -> old index.
    Graph induced(uint64_t mask, std::vector<int>* old_index = nullptr) const;

    std::vector<int> leaves() const;  // degree-1 vertices, ascending
    bool has_induced_claw() const;
    bool has_induced_diamond() const;
};

bool operator==(const Graph& a, const Graph& b);

// Graph with a set of root vertices (possibly empty, e.g. the empty graph).
struct RootedGraph {
    Graph g;
    uint64_t roots = 0;
};

// Connected graph with one distinguished root vertex.
struct SingleRootedGraph {
    Graph g;
    int root = 0;
};

// The two colour classes of a connected bipartite graph, with `first`
// containing `root`; nullopt when the graph has an odd cycle.
std::optional<std::pair<uint64_t, uint64_t>> bipartition(const Graph& g, int root);

// ---- extensions -----------------------------------------------------------
//
// All extensions append their new vertices after the host graph's, in this
// order: path vertices v_0..v_ell, then any clique / gadget / second-graph
// vertices. The path is attached by joining v_0 to every root of F; `ell` is
// the number of path edges, so ell = 0 means the single vertex v_0.

enum class ExtKind { Path, PathClique, Clique, PathAugment, Ape, Tpe };

struct Extension {
    ExtKind kind;
    int ell = 0;     // path edges (Path, PathClique, PathAugment, Ape, Tpe)
    int clique = 0;  // clique order (PathClique, Clique)
    RootedGraph other;  // second graph (PathAugment)
};

Extension path_ext(int ell);
Extension path_clique_ext(int ell, int clique);
Extension clique_ext(int clique);
Extension path_augment(int ell, RootedGraph other);
Extension ape_ext(int ell);  // v_ell gains roots a, b of (a-c plus isolated b); pendant c on a
Extension tpe_ext(int ell);  // triangle on v_ell, u1, u2 plus pendant u_c on v_ell

Graph extend(const RootedGraph& f, const Extension& e);

// Line graph of H: one vertex per edge of H in lexicographic (u, v) order,
// adjacent when the edges share an endpoint; roots are the edges at H's root.
RootedGraph line_graph(const SingleRootedGraph& h);

// ---- edge-string format ----------------------------------------------------
//
// A graph is written as a concatenation of two-character edges. Labels are
// 'r' (the root), then '0'-'9' and 'a'-'j' for the remaining vertices. When
// parsing, 'r' becomes vertex 0 and other labels are indexed by first
// appearance; when serializing, non-root vertices are labelled in index
// order and edges are emitted sorted by (lower, higher) vertex index.

RootedGraph parse_edges(const std::string& s);  // roots = {0} iff 'r' occurs
std::string serialize_edges(const Graph& g);
std::string serialize_edges(const SingleRootedGraph& h);

// ---- named families ---------------------------------------------------------

Graph build_path(int n);
Graph build_cycle(int n);
Graph build_complete(int n);

// E_n (n >= 4): a path on n-1 vertices with a pendant vertex attached to the
// third vertex from one end. E'_n (n >= 4): a path v_0..v_{n-4} ending in a
// triangle with a pendant vertex on the junction, i.e. tpe_ext(n-4) over the
// empty graph.
Graph build_e(int n);
Graph build_e_prime(int n);

}  // namespace minev
