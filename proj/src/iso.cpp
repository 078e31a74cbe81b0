#include "iso.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace minev {

namespace {

std::vector<int> sorted_degrees(const Graph& g, uint64_t mask) {
    std::vector<int> out;
    for (uint64_t m = mask; m; m &= m - 1) out.push_back(g.degree(__builtin_ctzll(m)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SingleRootedKey hash_single_rooted(const SingleRootedGraph& h) {
    auto parts = bipartition(h.g, h.root);
    if (!parts) throw std::invalid_argument("hash_single_rooted: not connected bipartite");
    return {h.g.degree(h.root), sorted_degrees(h.g, parts->first), sorted_degrees(h.g, parts->second)};
}

GraphKey hash_graph(const Graph& g) {
    GraphKey key;
    key.reserve(g.n);
    for (int v = 0; v < g.n; ++v) {
        int inside = 0;
        for (uint64_t m = g.adj[v]; m; m &= m - 1)
            inside += __builtin_popcountll(g.adj[__builtin_ctzll(m)] & g.adj[v]);
        key.emplace_back(g.degree(v), inside / 2);
    }
    std::sort(key.begin(), key.end());
    return key;
}

namespace {

// Iterated neighbourhood-colour refinement. `init` must be isomorphism-
// invariant small ints; the result ranks vertices by their stable signature.
std::vector<int> wl_colors(const Graph& g, std::vector<int> color) {
    for (int round = 0; round < g.n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> s{color[v]};
            for (uint64_t m = g.adj[v]; m; m &= m - 1) s.push_back(color[__builtin_ctzll(m)]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& [s, v] : sig) rank.emplace(s, 0);
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        std::vector<int> refined(g.n);
        for (const auto& [s, v] : sig) refined[v] = rank[s];
        if (refined == color) break;
        color = std::move(refined);
    }
    return color;
}

struct IsoSolver {
    const Graph& a;
    const Graph& b;
    std::vector<int> acolor, bcolor;
    std::vector<int> order;    // a's vertices, assignment order
    std::vector<int> mapping;  // a -> b, -1 unassigned
    uint64_t used_b = 0;
    uint64_t assigned_a = 0;

    IsoSolver(const Graph& a_, const Graph& b_, std::vector<int> ac, std::vector<int> bc)
        : a(a_), b(b_), acolor(std::move(ac)), bcolor(std::move(bc)), mapping(a.n, -1) {
        // Assign high-degree vertices early, preferring ones attached to the
        // already-ordered prefix so partial mappings are tightly constrained.
        uint64_t placed = 0;
        for (int step = 0; step < a.n; ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < a.n; ++v) {
                if (placed >> v & 1) continue;
                int links = __builtin_popcountll(a.adj[v] & placed);
                int deg = a.degree(v);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            order.push_back(best);
            placed |= uint64_t(1) << best;
        }
    }

    bool search(size_t idx) {
        if (idx == order.size()) return true;
        int u = order[idx];
        uint64_t mapped_nbrs = 0;
        for (uint64_t m = a.adj[u] & assigned_a; m; m &= m - 1)
            mapped_nbrs |= uint64_t(1) << mapping[__builtin_ctzll(m)];
        for (int v = 0; v < b.n; ++v) {
            if (used_b >> v & 1) continue;
            if (bcolor[v] != acolor[u] || b.degree(v) != a.degree(u)) continue;
            if ((b.adj[v] & used_b) != mapped_nbrs) continue;
            mapping[u] = v;
            used_b |= uint64_t(1) << v;
            assigned_a |= uint64_t(1) << u;
            if (search(idx + 1)) return true;
            mapping[u] = -1;
            used_b &= ~(uint64_t(1) << v);
            assigned_a &= ~(uint64_t(1) << u);
        }
        return false;
    }
};

std::optional<std::vector<int>> colored_isomorphic(const Graph& a, const Graph& b,
                                                   std::vector<int> ainit, std::vector<int> binit) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return std::nullopt;
    auto ac = wl_colors(a, std::move(ainit));
    auto bc = wl_colors(b, std::move(binit));
    auto amulti = ac, bmulti = bc;
    std::sort(amulti.begin(), amulti.end());
    std::sort(bmulti.begin(), bmulti.end());
    if (amulti != bmulti) return std::nullopt;
    IsoSolver solver(a, b, std::move(ac), std::move(bc));
    if (!solver.search(0)) return std::nullopt;
    return solver.mapping;
}

std::vector<int> degree_colors(const Graph& g, uint64_t pinned) {
    std::vector<int> c(g.n);
    for (int v = 0; v < g.n; ++v) c[v] = (pinned >> v & 1) ? g.degree(v) : g.n + g.degree(v);
    return c;
}

}  // namespace

std::optional<std::vector<int>> isomorphic(const Graph& a, const Graph& b) {
    return colored_isomorphic(a, b, degree_colors(a, 0), degree_colors(b, 0));
}

std::optional<std::vector<int>> isomorphic(const RootedGraph& a, const RootedGraph& b) {
    if (__builtin_popcountll(a.roots) != __builtin_popcountll(b.roots)) return std::nullopt;
    return colored_isomorphic(a.g, b.g, degree_colors(a.g, a.roots), degree_colors(b.g, b.roots));
}

std::optional<std::vector<int>> isomorphic(const SingleRootedGraph& a, const SingleRootedGraph& b) {
    return colored_isomorphic(a.g, b.g, degree_colors(a.g, uint64_t(1) << a.root),
                              degree_colors(b.g, uint64_t(1) << b.root));
}

namespace {

// Lexicographically smallest adjacency ordering within the fixed class layout.
// Row p is the adjacency of position p to positions 0..p-1, read as bits with
// position 0 most significant, so rows compare as integers.
struct CanonSolver {
    const Graph& g;
    std::vector<std::vector<int>> class_members;  // by class rank
    std::vector<int> slot_class;                  // class rank per position
    std::vector<int> perm;                        // position -> vertex
    std::vector<int> best;                        // best perm found
    std::vector<uint64_t> rows, best_rows;
    uint64_t used = 0;
    bool have_best = false;

    explicit CanonSolver(const Graph& g_, const std::vector<int>& color) : g(g_) {
        std::map<int, std::vector<int>> classes;
        for (int v = 0; v < g.n; ++v) classes[color[v]].push_back(v);
        for (auto& [c, members] : classes) {
            for (size_t i = 0; i < members.size(); ++i) slot_class.push_back(int(class_members.size()));
            class_members.push_back(members);
        }
        perm.assign(g.n, -1);
        rows.assign(g.n, 0);
    }

    // `tied` is true while rows[0..pos-1] equals best_rows[0..pos-1]; only a
    // tied branch can be pruned by comparing against the incumbent.
    void search(int pos, bool tied) {
        if (pos == g.n) {
            if (!have_best || rows < best_rows) {
                best_rows = rows;
                best = perm;
                have_best = true;
            }
            return;
        }
        uint64_t min_row = ~uint64_t(0);
        std::vector<int> ties;
        for (int v : class_members[slot_class[pos]]) {
            if (used >> v & 1) continue;
            uint64_t row = 0;
            for (int i = 0; i < pos; ++i)
                row |= uint64_t(g.has_edge(v, perm[i])) << (63 - i);
            if (row < min_row) {
                min_row = row;
                ties.assign(1, v);
            } else if (row == min_row) {
                ties.push_back(v);
            }
        }
        bool next_tied = tied;
        if (have_best && tied) {
            if (min_row > best_rows[pos]) return;
            next_tied = (min_row == best_rows[pos]);
        }
        rows[pos] = min_row;
        for (int v : ties) {
            perm[pos] = v;
            used |= uint64_t(1) << v;
            search(pos + 1, next_tied);
            used &= ~(uint64_t(1) << v);
        }
        perm[pos] = -1;
    }
};

std::vector<int> canonical_positions(const Graph& g, std::vector<int> init) {
    auto color = wl_colors(g, std::move(init));
    CanonSolver solver(g, color);
    solver.search(0, true);
    std::vector<int> position(g.n);
    for (int p = 0; p < g.n; ++p) position[solver.best[p]] = p;
    return position;
}

Graph relabel(const Graph& g, const std::vector<int>& position) {
    Graph out(g.n);
    for (auto [u, v] : g.edges()) out.add_edge(position[u], position[v]);
    return out;
}

}  // namespace

std::string canonical_edge_string(const Graph& g) {
    auto position = canonical_positions(g, degree_colors(g, 0));
    return serialize_edges(relabel(g, position));
}

std::string canonical_edge_string(const SingleRootedGraph& h) {
    // The root's colour class sorts first (degree_colors pins it below all
    // non-root colours), so it lands at position 0.
    auto position = canonical_positions(h.g, degree_colors(h.g, uint64_t(1) << h.root));
    return serialize_edges(SingleRootedGraph{relabel(h.g, position), position[h.root]});
}

}  // namespace minev
