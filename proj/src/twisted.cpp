#include "twisted.hpp"

#include <stdexcept>

#include "iso.hpp"

namespace minev {

std::vector<Witness> tpe_witnesses(const Graph& g) {
    std::vector<Witness> out;
    for (int u1 = 0; u1 < g.n; ++u1) {
        if (g.degree(u1) != 2) continue;
        for (uint64_t m = g.adj[u1]; m; m &= m - 1) {
            int u2 = __builtin_ctzll(m);
            if (u2 <= u1 || g.degree(u2) != 2) continue;
            uint64_t o1 = g.adj[u1] & ~(uint64_t(1) << u2);
            uint64_t o2 = g.adj[u2] & ~(uint64_t(1) << u1);
            if (o1 != o2) continue;  // both single bits; equal iff shared neighbour
            int u0 = __builtin_ctzll(o1);
            for (uint64_t mc = g.adj[u0]; mc; mc &= mc - 1) {
                int uc = __builtin_ctzll(mc);
                if (g.degree(uc) == 1 && uc != u1 && uc != u2) out.push_back({u0, u1, u2, uc});
            }
        }
    }
    return out;
}

RootedGraph witness_host(const Graph& g, const Witness& w) {
    uint64_t removed = (uint64_t(1) << w.u0) | (uint64_t(1) << w.u1) | (uint64_t(1) << w.u2) |
                       (uint64_t(1) << w.uc);
    std::vector<int> old_index;
    Graph host = g.induced(g.vertex_mask() & ~removed, &old_index);
    uint64_t roots = 0;
    for (size_t i = 0; i < old_index.size(); ++i)
        if (g.adj[w.u0] >> old_index[i] & 1u) roots |= uint64_t(1) << i;
    return {host, roots};
}

bool verify_ape_reconstruction(const Graph& g, const Witness& w) {
    return isomorphic(extend(witness_host(g, w), ape_ext(0)), g).has_value();
}

bool verify_tpe_reconstruction(const Graph& g, const Witness& w) {
    return isomorphic(extend(witness_host(g, w), tpe_ext(0)), g).has_value();
}

std::vector<TwistedEntry> filter_twisted(const std::vector<Graph>& mavericks) {
    std::vector<TwistedEntry> out;
    for (const auto& g : mavericks) {
        auto ws = tpe_witnesses(g);
        if (ws.empty()) continue;
        if (ws.size() != 1)
            throw std::logic_error("twisted maverick with " + std::to_string(ws.size()) +
                                   " witnesses: " + serialize_edges(g));
        out.push_back({g, ws[0]});
    }
    return out;
}

std::map<int, int> twisted_histogram(const std::vector<TwistedEntry>& entries) {
    std::map<int, int> hist;
    for (const auto& e : entries) ++hist[e.g.n];
    return hist;
}

}  // namespace minev
