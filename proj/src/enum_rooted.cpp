#include "enum_rooted.hpp"

#include <algorithm>
#include <map>

#include "iso.hpp"
#include "spectral.hpp"
#include "workpool.hpp"

namespace minev {

namespace {

Gate base_gate(const SingleRootedGraph& h) {
    return gate_lambda_star(extend(line_graph(h), ape_ext(0)));
}

// All single-edge growths keeping the two colour classes fixed: a missing
// edge between the classes, or a new pendant vertex (which lands in the class
// opposite its support). Deterministic order: cross edges by (u, v), then
// pendants by support vertex.
std::vector<SingleRootedGraph> growths(const SingleRootedGraph& h) {
    auto parts = bipartition(h.g, h.root);
    if (!parts) throw std::logic_error("growths: member not connected bipartite");
    std::vector<SingleRootedGraph> out;
    for (uint64_t mu = parts->first; mu; mu &= mu - 1) {
        int u = __builtin_ctzll(mu);
        for (uint64_t mv = parts->second & ~h.g.adj[u]; mv; mv &= mv - 1) {
            int v = __builtin_ctzll(mv);
            SingleRootedGraph next = h;
            next.g.add_edge(u, v);
            out.push_back(std::move(next));
        }
    }
    for (int v = 0; v < h.g.n; ++v) {
        SingleRootedGraph next = h;
        int w = next.g.add_vertex();
        next.g.add_edge(v, w);
        out.push_back(std::move(next));
    }
    return out;
}

}  // namespace

RootedCatalog enumerate_rooted(int jobs) {
    std::map<int, std::vector<RootedEntry>> levels;
    levels[0].push_back({SingleRootedGraph{Graph(1), 0}, 0, -1, false, {}});
    levels[2].push_back({SingleRootedGraph{parse_edges("r0r1").g, 0}, 2, -1, false, {}});

    for (int size = 0; size <= Graph::kMaxVertices; ++size) {
        auto it = levels.find(size);
        if (it == levels.end()) {
            if (levels.upper_bound(size) == levels.end()) break;
            continue;
        }
        auto& level = it->second;

        struct Expansion {
            bool any_pass = false;
            std::vector<SingleRootedGraph> admitted;
        };
        std::vector<Expansion> results(level.size());
        parallel_for(level.size(), jobs, [&](size_t i) {
            for (auto& cand : growths(level[i].h)) {
                if (base_gate(cand) != Gate::Above) continue;
                results[i].any_pass = true;
                if (cand.g.degree(cand.root) == 1) continue;  // root must stay interior
                results[i].admitted.push_back(std::move(cand));
            }
        });

        auto& next = levels[size + 1];
        std::map<SingleRootedKey, std::vector<size_t>> buckets;
        for (size_t i = 0; i < level.size(); ++i) {
            level[i].maximal = !results[i].any_pass;
            for (auto& cand : results[i].admitted) {
                auto key = hash_single_rooted(cand);
                auto& bucket = buckets[key];
                bool dup = false;
                for (size_t idx : bucket)
                    if (isomorphic(cand, next[idx].h)) {
                        dup = true;
                        break;
                    }
                if (!dup) {
                    bucket.push_back(next.size());
                    next.push_back({std::move(cand), size + 1, -1, false, {}});
                }
            }
        }
        if (next.empty()) levels.erase(size + 1);
    }

    RootedCatalog catalog;
    int max_size = levels.empty() ? 0 : levels.rbegin()->first;
    catalog.size_histogram.assign(max_size + 1, 0);
    for (auto& [size, level] : levels) {
        parallel_for(level.size(), jobs,
                     [&](size_t i) { level[i].canonical = canonical_edge_string(level[i].h); });
        std::sort(level.begin(), level.end(),
                  [](const RootedEntry& a, const RootedEntry& b) { return a.canonical < b.canonical; });
        catalog.size_histogram[size] = int(level.size());
        for (auto& entry : level) catalog.entries.push_back(std::move(entry));
    }
    return catalog;
}

void annotate_ell0(RootedCatalog& catalog, int jobs) {
    parallel_for(catalog.entries.size(), jobs, [&](size_t i) {
        catalog.entries[i].ell0 = min_ell0(line_graph(catalog.entries[i].h));
    });
}

bool check_general_subgraph_closure(const RootedCatalog& catalog) {
    std::map<SingleRootedKey, std::vector<const SingleRootedGraph*>> index;
    for (const auto& e : catalog.entries) index[hash_single_rooted(e.h)].push_back(&e.h);
    auto in_catalog = [&](const SingleRootedGraph& s) {
        auto it = index.find(hash_single_rooted(s));
        if (it == index.end()) return false;
        for (const auto* p : it->second)
            if (isomorphic(s, *p)) return true;
        return false;
    };

    std::map<SingleRootedKey, std::vector<SingleRootedGraph>> decided;
    for (const auto& entry : catalog.entries) {
        if (!entry.maximal) continue;
        auto es = entry.h.g.edges();
        const int m = int(es.size());
        for (uint32_t sub = 0; sub < (uint32_t(1) << m); ++sub) {
            uint64_t verts = uint64_t(1) << entry.h.root;
            for (uint32_t bits = sub; bits; bits &= bits - 1) {
                auto [u, v] = es[__builtin_ctz(bits)];
                verts |= (uint64_t(1) << u) | (uint64_t(1) << v);
            }
            std::vector<int> old_of;
            for (uint64_t vm = verts; vm; vm &= vm - 1) old_of.push_back(__builtin_ctzll(vm));
            std::vector<int> new_of(entry.h.g.n, -1);
            for (size_t i = 0; i < old_of.size(); ++i) new_of[old_of[i]] = int(i);
            SingleRootedGraph cand{Graph(int(old_of.size())), new_of[entry.h.root]};
            for (uint32_t bits = sub; bits; bits &= bits - 1) {
                auto [u, v] = es[__builtin_ctz(bits)];
                cand.g.add_edge(new_of[u], new_of[v]);
            }
            if (cand.g.degree(cand.root) == 1) continue;  // outside the interior-root family
            if (!cand.g.connected()) continue;
            auto key = hash_single_rooted(cand);
            auto& memo = decided[key];
            bool known = false;
            for (const auto& g : memo)
                if (isomorphic(cand, g)) {
                    known = true;
                    break;
                }
            if (known) continue;
            if (!in_catalog(cand)) return false;
            memo.push_back(std::move(cand));
        }
    }
    return true;
}

}  // namespace minev
