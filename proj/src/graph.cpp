#include "graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace minev {

namespace {

constexpr const char* kLabels = "0123456789abcdefghij";

int label_index(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'j') return 10 + (c - 'a');
    return -1;
}

uint64_t mask_above(int i) { return i >= 63 ? 0 : ~uint64_t(0) << (i + 1); }

}  // namespace

Graph::Graph(int n_) : n(n_) {
    if (n_ < 0 || n_ > kMaxVertices) throw std::invalid_argument("Graph: bad order");
    adj.assign(n_, 0);
}

int Graph::add_vertex() {
    if (n == kMaxVertices) throw std::length_error("Graph: vertex capacity exceeded");
    adj.push_back(0);
    return n++;
}

void Graph::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("Graph::add_edge: bad endpoints");
    adj[u] |= uint64_t(1) << v;
    adj[v] |= uint64_t(1) << u;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u) {
        uint64_t higher = adj[u] >> (u + 1) << (u + 1);
        while (higher) {
            int v = __builtin_ctzll(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

uint64_t Graph::component_of(int v) const {
    uint64_t seen = uint64_t(1) << v;
    uint64_t frontier = seen;
    while (frontier) {
        uint64_t next = 0;
        while (frontier) {
            int u = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            next |= adj[u];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

bool Graph::connected() const {
    if (n <= 1) return true;
    return component_of(0) == vertex_mask();
}

Graph Graph::induced(uint64_t mask, std::vector<int>* old_index) const {
    mask &= vertex_mask();
    std::vector<int> verts;
    for (uint64_t m = mask; m; m &= m - 1) verts.push_back(__builtin_ctzll(m));
    Graph out(int(verts.size()));
    for (int i = 0; i < out.n; ++i)
        for (int j = i + 1; j < out.n; ++j)
            if (has_edge(verts[i], verts[j])) out.add_edge(i, j);
    if (old_index) *old_index = std::move(verts);
    return out;
}

std::vector<int> Graph::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (degree(v) == 1) out.push_back(v);
    return out;
}

bool Graph::has_induced_claw() const {
    for (int v = 0; v < n; ++v) {
        uint64_t nbrs = adj[v];
        if (__builtin_popcountll(nbrs) < 3) continue;
        for (uint64_t ma = nbrs; ma; ma &= ma - 1) {
            int a = __builtin_ctzll(ma);
            uint64_t after_a = nbrs & ~adj[a] & mask_above(a);
            for (uint64_t mb = after_a; mb; mb &= mb - 1) {
                int b = __builtin_ctzll(mb);
                if (after_a & ~adj[b] & mask_above(b)) return true;
            }
        }
    }
    return false;
}

bool Graph::has_induced_diamond() const {
    for (auto [u, v] : edges()) {
        uint64_t common = adj[u] & adj[v];
        for (uint64_t mx = common; mx; mx &= mx - 1) {
            int x = __builtin_ctzll(mx);
            if (common & ~adj[x] & mask_above(x)) return true;
        }
    }
    return false;
}

bool operator==(const Graph& a, const Graph& b) { return a.n == b.n && a.adj == b.adj; }

std::optional<std::pair<uint64_t, uint64_t>> bipartition(const Graph& g, int root) {
    if (g.n == 0) return std::make_pair(uint64_t(0), uint64_t(0));
    uint64_t side[2] = {uint64_t(1) << root, 0};
    uint64_t frontier = side[0];
    int parity = 0;
    uint64_t seen = side[0];
    while (frontier) {
        uint64_t next = 0;
        while (frontier) {
            int u = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            next |= g.adj[u];
        }
        if (next & side[parity]) return std::nullopt;  // odd cycle
        parity ^= 1;
        frontier = next & ~seen;
        side[parity] |= frontier;
        seen |= frontier;
    }
    if (seen != g.vertex_mask()) return std::nullopt;  // disconnected
    return std::make_pair(side[0], side[1]);
}

// ---- extensions -------------------------------------------------------------

Extension path_ext(int ell) { return {ExtKind::Path, ell, 0, {}}; }
Extension path_clique_ext(int ell, int clique) { return {ExtKind::PathClique, ell, clique, {}}; }
Extension clique_ext(int clique) { return {ExtKind::Clique, 0, clique, {}}; }
Extension path_augment(int ell, RootedGraph other) {
    return {ExtKind::PathAugment, ell, 0, std::move(other)};
}

Extension ape_ext(int ell) {
    RootedGraph gadget{Graph(3), 0b011};  // roots a=0, b=1 (non-adjacent); pendant c=2 on a
    gadget.g.add_edge(0, 2);
    Extension e = path_augment(ell, std::move(gadget));
    e.kind = ExtKind::Ape;
    return e;
}

Extension tpe_ext(int ell) {
    RootedGraph gadget{Graph(3), 0b111};  // u1=0, u2=1 adjacent, u_c=2 isolated; all joined to v_ell
    gadget.g.add_edge(0, 1);
    Extension e = path_augment(ell, std::move(gadget));
    e.kind = ExtKind::Tpe;
    return e;
}

Graph extend(const RootedGraph& f, const Extension& e) {
    if (f.g.n > 0 && f.roots == 0)
        throw std::invalid_argument("extend: nonempty host graph requires roots");
    if ((f.roots & ~f.g.vertex_mask()) != 0)
        throw std::invalid_argument("extend: root outside graph");
    if (e.ell < 0) throw std::invalid_argument("extend: negative path length");

    Graph g = f.g;
    int v_last = -1;
    auto attach_path = [&]() {
        int v0 = g.add_vertex();
        for (uint64_t m = f.roots; m; m &= m - 1) g.add_edge(__builtin_ctzll(m), v0);
        v_last = v0;
        for (int i = 0; i < e.ell; ++i) {
            int w = g.add_vertex();
            g.add_edge(v_last, w);
            v_last = w;
        }
    };
    auto add_clique = [&](uint64_t joined_to) {
        if (e.clique < 1) throw std::invalid_argument("extend: clique order must be positive");
        std::vector<int> verts;
        for (int i = 0; i < e.clique; ++i) verts.push_back(g.add_vertex());
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j) g.add_edge(verts[i], verts[j]);
        for (int v : verts)
            for (uint64_t m = joined_to; m; m &= m - 1) g.add_edge(__builtin_ctzll(m), v);
    };

    switch (e.kind) {
        case ExtKind::Path:
            attach_path();
            break;
        case ExtKind::PathClique:
            attach_path();
            add_clique(uint64_t(1) << v_last);
            break;
        case ExtKind::Clique:
            add_clique(f.roots);
            break;
        case ExtKind::PathAugment:
        case ExtKind::Ape:
        case ExtKind::Tpe: {
            attach_path();
            int base = g.n;
            for (int i = 0; i < e.other.g.n; ++i) g.add_vertex();
            for (auto [u, v] : e.other.g.edges()) g.add_edge(base + u, base + v);
            for (uint64_t m = e.other.roots; m; m &= m - 1)
                g.add_edge(v_last, base + __builtin_ctzll(m));
            break;
        }
    }
    return g;
}

RootedGraph line_graph(const SingleRootedGraph& h) {
    auto es = h.g.edges();  // lexicographic
    RootedGraph out{Graph(int(es.size())), 0};
    for (size_t i = 0; i < es.size(); ++i) {
        for (size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) out.g.add_edge(int(i), int(j));
        }
        if (es[i].first == h.root || es[i].second == h.root) out.roots |= uint64_t(1) << i;
    }
    return out;
}

// ---- edge-string format -----------------------------------------------------

RootedGraph parse_edges(const std::string& s) {
    if (s.size() % 2 != 0) throw std::invalid_argument("parse_edges: odd length");
    bool has_root = s.find('r') != std::string::npos;
    std::vector<int> index_of(26, -1);  // by label position in kLabels
    int count = has_root ? 1 : 0;
    std::vector<std::pair<int, int>> es;
    auto lookup = [&](char c) {
        if (c == 'r') return 0;
        int li = label_index(c);
        if (li < 0) throw std::invalid_argument("parse_edges: bad label");
        if (index_of[li] < 0) index_of[li] = count++;
        return index_of[li];
    };
    for (size_t i = 0; i < s.size(); i += 2) {
        int u = lookup(s[i]);
        int v = lookup(s[i + 1]);
        if (u == v) throw std::invalid_argument("parse_edges: self-loop");
        es.emplace_back(u, v);
    }
    RootedGraph out{Graph(count), has_root ? uint64_t(1) : uint64_t(0)};
    for (auto [u, v] : es) {
        if (out.g.has_edge(u, v)) throw std::invalid_argument("parse_edges: duplicate edge");
        out.g.add_edge(u, v);
    }
    return out;
}

namespace {

std::string serialize_with_labels(const Graph& g, const std::vector<char>& label) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        out += label[u];
        out += label[v];
    }
    return out;
}

}  // namespace

std::string serialize_edges(const Graph& g) {
    if (g.n > 20) throw std::length_error("serialize_edges: more than 20 vertices");
    std::vector<char> label(g.n);
    for (int v = 0; v < g.n; ++v) label[v] = kLabels[v];
    return serialize_with_labels(g, label);
}

std::string serialize_edges(const SingleRootedGraph& h) {
    if (h.g.n > 21) throw std::length_error("serialize_edges: more than 20 non-root vertices");
    std::vector<char> label(h.g.n);
    int next = 0;
    for (int v = 0; v < h.g.n; ++v) label[v] = (v == h.root) ? 'r' : kLabels[next++];
    return serialize_with_labels(h.g, label);
}

// ---- named families ---------------------------------------------------------

Graph build_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph build_cycle(int n) {
    Graph g = build_path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph build_complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph build_e(int n) {
    if (n < 4) throw std::invalid_argument("build_e: n >= 4 required");
    Graph g = build_path(n - 1);
    g.add_vertex();
    g.add_edge(2, n - 1);
    return g;
}

Graph build_e_prime(int n) {
    if (n < 4) throw std::invalid_argument("build_e_prime: n >= 4 required");
    return extend(RootedGraph{}, tpe_ext(n - 4));
}

}  // namespace minev
