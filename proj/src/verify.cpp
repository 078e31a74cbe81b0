#include "verify.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "iso.hpp"
#include "matrix.hpp"
#include "spectral.hpp"
#include "workpool.hpp"

namespace minev {

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    std::vector<CorpusEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::runtime_error("corpus line without tab separator: " + line);
        out.push_back({line.substr(0, tab), parse_edges(line.substr(tab + 1)).g});
    }
    return out;
}

void validate_corpus(const std::vector<CorpusEntry>& corpus) {
    auto fail = [](const std::string& msg) { throw std::runtime_error("corpus: " + msg); };
    if (corpus.size() != 36) fail("expected 36 entries, found " + std::to_string(corpus.size()));

    std::vector<std::string> labels = {"E6", "B1", "B2", "B3", "B4"};
    for (int i = 1; i <= 31; ++i) labels.push_back("G" + std::to_string(i));
    for (size_t i = 0; i < labels.size(); ++i)
        if (corpus[i].label != labels[i])
            fail("entry " + std::to_string(i) + " labelled '" + corpus[i].label + "', expected '" +
                 labels[i] + "'");

    if (!isomorphic(corpus[0].g, build_e(6))) fail("E6 entry is not E6");
    auto bs = appendix_b_list();
    for (int i = 0; i < 4; ++i)
        if (!isomorphic(corpus[1 + i].g, bs[i])) fail(corpus[1 + i].label + " entry mismatch");

    Graph star(6);
    for (int i = 1; i < 6; ++i) star.add_edge(0, i);
    bool has_e6 = false, has_e6p = false, has_star = false;
    for (size_t i = 5; i < corpus.size(); ++i) {
        const Graph& g = corpus[i].g;
        if (g.n != 5 && g.n != 6) fail(corpus[i].label + " has order " + std::to_string(g.n));
        if (!g.connected()) fail(corpus[i].label + " is disconnected");
        for (size_t j = 5; j < i; ++j)
            if (isomorphic(g, corpus[j].g))
                fail(corpus[i].label + " isomorphic to " + corpus[j].label);
        if (isomorphic(g, build_e(6))) has_e6 = true;
        if (isomorphic(g, build_e_prime(6))) has_e6p = true;
        if (isomorphic(g, star)) has_star = true;
    }
    if (!has_e6) fail("G section is missing E6");
    if (!has_e6p) fail("G section is missing E6'");
    if (!has_star) fail("G section is missing K_{1,5}");
}

std::vector<ForbiddenCheck> verify_forbidden_rooted() {
    Graph s3(4);
    s3.add_edge(0, 1);
    s3.add_edge(0, 2);
    s3.add_edge(0, 3);
    std::vector<std::pair<std::string, RootedGraph>> cases = {
        {"K2-bar", {Graph(2), 0b11}},
        {"S3", {s3, 0b011}},
        {"K3", {build_complete(3), 0b011}},
        {"C5", {build_cycle(5), 0b011}},
        {"C7", {build_cycle(7), 0b011}},
        {"P8-mid", {build_path(8), (uint64_t(1) << 3) | (uint64_t(1) << 4)}},
        {"P10-end", {build_path(10), 0b011}},
        {"K7", {build_complete(7), 0x7f}},
    };
    std::vector<ForbiddenCheck> out;
    for (auto& [name, rg] : cases) {
        Graph ext = extend(rg, ape_ext(0));
        out.push_back({name, rg, det(scaled_shifted_adjacency(ext, 101, 50))});
    }
    return out;
}

std::vector<Graph> appendix_a_list() {
    const Graph e6 = build_e(6);
    std::vector<Graph> out;
    for (uint64_t s = 1; s < 64; ++s) {
        Graph g = e6;
        int v = g.add_vertex();
        for (uint64_t m = s; m; m &= m - 1) g.add_edge(__builtin_ctzll(m), v);
        bool dup = false;
        for (const auto& h : out)
            if (isomorphic(g, h)) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> appendix_b_list() {
    auto build = [](std::initializer_list<std::pair<int, int>> es) {
        Graph g(8);
        for (auto [u, v] : es) g.add_edge(u, v);
        return g;
    };
    return {
        build({{0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}}),
        build({{0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 7}}),
        build({{0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}, {5, 7}}),
        build({{0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}, {5, 7}, {6, 7}}),
    };
}

namespace {

std::string classify_pair(const Graph& f, uint64_t roots) {
    if (isomorphic(f, build_e(6))) return "E6";
    if (isomorphic(f, build_e(7))) return "E7";
    if (isomorphic(RootedGraph{f, roots}, RootedGraph{build_e_prime(6), 1})) return "E6p-rooted";
    return "unexpected";
}

}  // namespace

AppendixResult verify_path_extension_limits(const std::vector<CorpusEntry>& corpus) {
    std::vector<CorpusEntry> pool;
    pool.push_back({"E6", build_e(6)});
    auto as = appendix_a_list();
    for (size_t i = 0; i < as.size(); ++i)
        pool.push_back({"A" + std::to_string(i + 1), std::move(as[i])});
    auto bs = appendix_b_list();
    for (size_t i = 0; i < bs.size(); ++i)
        pool.push_back({"B" + std::to_string(i + 1), std::move(bs[i])});
    for (const auto& e : corpus)
        if (!e.label.empty() && e.label[0] == 'G') pool.push_back(e);

    AppendixResult result;
    result.pool_size = int(pool.size());
    // The border weight 6/7 must stay below the critical weight
    // q/2 - sqrt(q^2/4 - 1) at q = 95/47, i.e. 3 sqrt(21) < 101/7. Bounding
    // sqrt(21) from above by 21 / (a lower bound on sqrt(21)) keeps the
    // comparison exact.
    result.coefficient_certified =
        rational(21) / sqrt_lower_bound(rational(21)) < rational(101, 21);

    const Rational q = rational(95, 47);
    for (const auto& [label, f] : pool) {
        if (!is_positive_definite(scaled_shifted_adjacency(f, 95, 47))) continue;
        ++result.pd_pass;
        for (uint64_t roots = 1; roots < (uint64_t(1) << f.n); ++roots) {
            RootedGraph fr{f, roots};
            Graph ext = extend(fr, path_ext(0));
            // The base block A(f) + q I is positive definite, so the bordered
            // matrix is PSD exactly when its determinant is nonnegative.
            RatMatrix m = shifted_adjacency(ext, q, {{ext.n - 1, rational(-6, 7)}});
            bool collected = sgn(det(m)) >= 0;
            // A limit above -q forces PSD at the smaller border weight 6/7,
            // so every non-collected rooting must have its limit certified
            // below. (The converse can fail: a rooting whose critical weight
            // lies between 6/7 and the limit weight is collected anyway.)
            if (!collected && !limit_below(fr, q)) result.limit_consistent = false;
            if (collected) result.collected.push_back({label, f, roots, classify_pair(f, roots)});
        }
    }
    for (const auto& p : result.collected) ++result.classification_counts[p.classification];
    return result;
}

namespace {

// Connected simple graphs with m edges for m = 0..max_edges, up to
// isomorphism. Closure: a connected graph with m+1 edges either has a
// non-bridge edge (delete it) or is a tree (delete a leaf edge), so adding a
// missing edge or a pendant vertex to all graphs with m edges reaches
// everything.
std::vector<std::vector<Graph>> connected_graphs_by_edges(int max_edges) {
    std::vector<std::vector<Graph>> levels(max_edges + 1);
    levels[0].push_back(Graph(1));
    for (int m = 0; m < max_edges; ++m) {
        auto& next = levels[m + 1];
        std::map<GraphKey, std::vector<size_t>> buckets;
        auto admit = [&](Graph&& cand) {
            auto key = hash_graph(cand);
            auto& bucket = buckets[key];
            for (size_t idx : bucket)
                if (isomorphic(cand, next[idx])) return;
            bucket.push_back(next.size());
            next.push_back(std::move(cand));
        };
        for (const Graph& g : levels[m]) {
            for (int u = 0; u < g.n; ++u)
                for (int v = u + 1; v < g.n; ++v)
                    if (!g.has_edge(u, v)) {
                        Graph c = g;
                        c.add_edge(u, v);
                        admit(std::move(c));
                    }
            for (int u = 0; u < g.n; ++u) {
                Graph c = g;
                int w = c.add_vertex();
                c.add_edge(u, w);
                admit(std::move(c));
            }
        }
    }
    return levels;
}

// Line graph of a base graph with pendant 2-cycles ("petals") attached:
// vertices are the base's edges plus two parallel edges per petal, adjacent
// iff they share exactly one endpoint. Parallel petal edges share both
// endpoints and so stay non-adjacent.
Graph petal_line_graph(const Graph& base, const std::vector<int>& petals) {
    struct End {
        int u, v;
    };
    std::vector<End> ends;
    for (auto [u, v] : base.edges()) ends.push_back({u, v});
    int next_vertex = base.n;
    for (int u = 0; u < base.n; ++u)
        for (int p = 0; p < petals[u]; ++p) {
            ends.push_back({u, next_vertex});
            ends.push_back({u, next_vertex});
            ++next_vertex;
        }
    Graph lg(int(ends.size()));
    for (size_t i = 0; i < ends.size(); ++i)
        for (size_t j = i + 1; j < ends.size(); ++j) {
            int shared = int(ends[i].u == ends[j].u) + int(ends[i].u == ends[j].v) +
                         int(ends[i].v == ends[j].u) + int(ends[i].v == ends[j].v);
            if (shared == 1) lg.add_edge(int(i), int(j));
        }
    return lg;
}

template <typename F>
void each_petal_assignment(int idx, int budget, std::vector<int>& acc, F&& f) {
    if (idx == int(acc.size())) {
        f(acc);
        return;
    }
    for (int a = 0; a <= budget; ++a) {
        acc[idx] = a;
        each_petal_assignment(idx + 1, budget - a, acc, f);
    }
}

}  // namespace

GlgScan minimal_forbidden_glg(int jobs) {
    constexpr int kMaxOrder = 10;
    auto bases = connected_graphs_by_edges(kMaxOrder);
    // Guard the generator against regressions: connected graphs by edge count.
    const std::vector<size_t> census = {1, 1, 1, 3, 5, 12, 30, 79, 227, 710, 2322};
    for (size_t m = 0; m < census.size(); ++m)
        if (bases[m].size() != census[m])
            throw std::logic_error("connected-graph census mismatch at " + std::to_string(m) +
                                   " edges");

    std::vector<Graph> catalog;
    std::map<GraphKey, std::vector<size_t>> index;
    for (int m = 0; m <= kMaxOrder; ++m)
        for (const Graph& base : bases[m]) {
            std::vector<int> acc(base.n);
            each_petal_assignment(0, (kMaxOrder - m) / 2, acc, [&](const std::vector<int>& petals) {
                Graph lg = petal_line_graph(base, petals);
                // Reject the empty line graph (bare one-vertex base) and the
                // disconnected one (a single petal on it: two parallel edges
                // sharing both endpoints).
                if (lg.n == 0 || !lg.connected()) return;
                auto key = hash_graph(lg);
                auto& bucket = index[key];
                for (size_t idx : bucket)
                    if (isomorphic(lg, catalog[idx])) return;
                bucket.push_back(catalog.size());
                catalog.push_back(std::move(lg));
            });
        }

    GlgScan scan;
    for (const auto& g : catalog) ++scan.catalog_by_order[g.n];

    auto in_catalog = [&](const Graph& g) {
        auto it = index.find(hash_graph(g));
        if (it == index.end()) return false;
        for (size_t idx : it->second)
            if (isomorphic(g, catalog[idx])) return true;
        return false;
    };

    // Every minimal non-member arises as P plus one vertex for some connected
    // catalogued P (delete any non-cut vertex). Minimality needs only
    // one-vertex deletions because the class is hereditary and closed under
    // disjoint unions.
    std::vector<size_t> hosts;
    for (size_t i = 0; i < catalog.size(); ++i)
        if (catalog[i].n < kMaxOrder) hosts.push_back(i);
    std::vector<std::vector<Graph>> found(hosts.size());
    parallel_for(hosts.size(), jobs, [&](size_t hi) {
        const Graph& p = catalog[hosts[hi]];
        for (uint64_t s = 1; s < (uint64_t(1) << p.n); ++s) {
            Graph f = p;
            int v = f.add_vertex();
            for (uint64_t m = s; m; m &= m - 1) f.add_edge(__builtin_ctzll(m), v);
            if (in_catalog(f)) continue;
            bool minimal = true;
            for (int w = 0; w < f.n && minimal; ++w) {
                Graph rest = f.induced(f.vertex_mask() & ~(uint64_t(1) << w));
                uint64_t remaining = rest.vertex_mask();
                while (remaining && minimal) {
                    uint64_t comp = rest.component_of(__builtin_ctzll(remaining));
                    remaining &= ~comp;
                    if (!in_catalog(rest.induced(comp))) minimal = false;
                }
            }
            if (minimal) found[hi].push_back(std::move(f));
        }
    });

    std::map<GraphKey, std::vector<size_t>> mindex;
    for (auto& batch : found)
        for (auto& f : batch) {
            auto key = hash_graph(f);
            auto& bucket = mindex[key];
            bool dup = false;
            for (size_t idx : bucket)
                if (isomorphic(f, scan.minimal_forbidden[idx])) {
                    dup = true;
                    break;
                }
            if (!dup) {
                bucket.push_back(scan.minimal_forbidden.size());
                scan.minimal_forbidden.push_back(std::move(f));
            }
        }
    std::sort(scan.minimal_forbidden.begin(), scan.minimal_forbidden.end(),
              [](const Graph& a, const Graph& b) {
                  if (a.n != b.n) return a.n < b.n;
                  return canonical_edge_string(a) < canonical_edge_string(b);
              });
    return scan;
}

std::string render_corpus() {
    std::ostringstream out;
    out << "# Base graphs for the path-extension limit scan: E6, its four\n";
    out << "# 8-vertex companions, and the 31 minimal graphs outside the\n";
    out << "# generalized-line-graph class (regenerate with glg-gen).\n";
    out << "# label<TAB>edge string, two vertex labels per edge\n";
    out << "E6\t" << serialize_edges(build_e(6)) << '\n';
    auto bs = appendix_b_list();
    for (size_t i = 0; i < bs.size(); ++i)
        out << 'B' << i + 1 << '\t' << serialize_edges(bs[i]) << '\n';
    auto scan = minimal_forbidden_glg();
    for (size_t i = 0; i < scan.minimal_forbidden.size(); ++i)
        out << 'G' << i + 1 << '\t' << serialize_edges(scan.minimal_forbidden[i]) << '\n';
    return out.str();
}

}  // namespace minev
