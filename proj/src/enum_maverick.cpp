#include "enum_maverick.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "iso.hpp"
#include "spectral.hpp"
#include "workpool.hpp"

namespace minev {

std::vector<Witness> ape_witnesses(const Graph& g) {
    std::vector<Witness> out;
    for (int u1 = 0; u1 < g.n; ++u1) {
        if (g.degree(u1) != 2) continue;
        for (uint64_t m = g.adj[u1]; m; m &= m - 1) {
            int u2 = __builtin_ctzll(m);
            if (g.degree(u2) != 1) continue;
            int u0 = __builtin_ctzll(g.adj[u1] & ~(uint64_t(1) << u2));
            for (uint64_t mc = g.adj[u0]; mc; mc &= mc - 1) {
                int uc = __builtin_ctzll(mc);
                if (g.degree(uc) == 1 && uc != u1 && uc != u2) out.push_back({u0, u1, u2, uc});
            }
        }
    }
    return out;
}

namespace {

struct Node {
    Graph g;
    std::vector<uint64_t> subsets;  // candidate neighbourhoods, sorted by (popcount, value)
};

void sort_subsets(std::vector<uint64_t>& s) {
    std::sort(s.begin(), s.end(), [](uint64_t a, uint64_t b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        return pa != pb ? pa < pb : a < b;
    });
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

Graph child_graph(const Graph& g, uint64_t subset) {
    Graph c = g;
    int v = c.add_vertex();
    for (uint64_t m = subset; m; m &= m - 1) c.add_edge(__builtin_ctzll(m), v);
    return c;
}

// serialize_edges writes each vertex as its own label character, so parsing by
// label position restores the adjacency structure index-for-index. (The
// general first-appearance parser would relabel, invalidating subset masks.)
Graph parse_identity(const std::string& s) {
    static const std::string labels = "0123456789abcdefghij";
    if (s.size() % 2 != 0) throw std::invalid_argument("parse_identity: odd-length edge string");
    int n = 0;
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < s.size(); i += 2) {
        auto pu = labels.find(s[i]);
        auto pv = labels.find(s[i + 1]);
        if (pu == std::string::npos || pv == std::string::npos)
            throw std::invalid_argument("parse_identity: bad vertex label");
        es.emplace_back(int(pu), int(pv));
        n = std::max({n, int(pu) + 1, int(pv) + 1});
    }
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

struct Checkpoint {
    int order = 0;
    std::map<int, int> level_members;
    std::vector<Graph> mavericks;
    std::vector<Node> level;
};

void write_checkpoint(const std::string& dir, const Checkpoint& cp) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    fs::path final_path = fs::path(dir) / ("level_" + std::to_string(cp.order) + ".txt");
    fs::path tmp_path = final_path;
    tmp_path += ".tmp";
    {
        std::ofstream out(tmp_path);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp_path.string());
        for (auto [order, count] : cp.level_members) out << "C " << order << '\t' << count << '\n';
        for (const auto& g : cp.mavericks) out << "M " << serialize_edges(g) << '\n';
        for (const auto& node : cp.level) {
            out << "L " << serialize_edges(node.g) << '\t';
            for (size_t i = 0; i < node.subsets.size(); ++i) {
                if (i) out << ',';
                out << node.subsets[i];
            }
            out << '\n';
        }
        out << "#end\n";
    }
    fs::rename(tmp_path, final_path);
}

std::optional<Checkpoint> parse_checkpoint(const std::filesystem::path& path, int order) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Checkpoint cp;
    cp.order = order;
    std::string line;
    bool complete = false;
    while (std::getline(in, line)) {
        if (line == "#end") {
            complete = true;
            break;
        }
        if (line.size() < 2 || line[1] != ' ') return std::nullopt;
        std::string body = line.substr(2);
        if (line[0] == 'C') {
            std::istringstream ss(body);
            int ord = 0, count = 0;
            if (!(ss >> ord >> count)) return std::nullopt;
            cp.level_members[ord] = count;
        } else if (line[0] == 'M') {
            cp.mavericks.push_back(parse_identity(body));
        } else if (line[0] == 'L') {
            auto tab = body.find('\t');
            if (tab == std::string::npos) return std::nullopt;
            Node node{parse_identity(body.substr(0, tab)), {}};
            std::istringstream ss(body.substr(tab + 1));
            std::string item;
            while (std::getline(ss, item, ',')) node.subsets.push_back(std::stoull(item));
            cp.level.push_back(std::move(node));
        } else {
            return std::nullopt;
        }
    }
    if (!complete) return std::nullopt;
    return cp;
}

// Largest complete snapshot in dir, if any. Incomplete or malformed files are
// ignored so an interrupted run can always restart from the previous level.
std::optional<Checkpoint> load_checkpoint(const std::string& dir) {
    namespace fs = std::filesystem;
    if (dir.empty() || !fs::is_directory(dir)) return std::nullopt;
    std::vector<std::pair<int, fs::path>> candidates;
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::string name = entry.path().filename().string();
        if (name.rfind("level_", 0) != 0 || name.size() < 11 || name.substr(name.size() - 4) != ".txt")
            continue;
        try {
            candidates.emplace_back(std::stoi(name.substr(6)), entry.path());
        } catch (const std::exception&) {
        }
    }
    std::sort(candidates.rbegin(), candidates.rend());
    for (const auto& [order, path] : candidates)
        if (auto cp = parse_checkpoint(path, order)) return cp;
    return std::nullopt;
}

}  // namespace

MaverickResult enumerate_mavericks(int jobs, const std::string& checkpoint_dir) {
    MaverickResult result;
    std::vector<Node> level;
    int order = 2;

    if (auto cp = load_checkpoint(checkpoint_dir)) {
        order = cp->order;
        result.level_members = std::move(cp->level_members);
        result.mavericks = std::move(cp->mavericks);
        for (const auto& g : result.mavericks) ++result.histogram[g.n];
        level = std::move(cp->level);
    } else {
        level.push_back({parse_identity("01"), {1, 2, 3}});
    }

    while (!level.empty()) {
        if (order > 21) throw std::logic_error("maverick search did not close by order 21");
        result.level_members[order] = int(level.size());

        // A level member is a maverick unless it is still representable with
        // smallest eigenvalue >= -2 (possible only through order 9) or it
        // carries an augmented-path witness.
        for (const auto& node : level) {
            if (order <= 9 && is_psd_at_two(node.g)) continue;
            if (!ape_witnesses(node.g).empty()) continue;
            result.mavericks.push_back(node.g);
            ++result.histogram[order];
        }

        struct Expansion {
            std::vector<Graph> kids;
            std::vector<uint64_t> new_subsets;
        };
        std::vector<Expansion> expansions(level.size());
        parallel_for(level.size(), jobs, [&](size_t i) {
            const Node& node = level[i];
            Expansion& ex = expansions[i];
            std::vector<uint64_t> passed;
            for (uint64_t subset : node.subsets) {
                Graph c = child_graph(node.g, subset);
                if (gate_lambda_star(c) != Gate::Above) continue;
                passed.push_back(subset);
                ex.kids.push_back(std::move(c));
            }
            // Every child's candidate list: the new vertex alone, plus each
            // surviving neighbourhood with and without the new vertex.
            ex.new_subsets.push_back(uint64_t(1) << order);
            for (uint64_t subset : passed) {
                ex.new_subsets.push_back(subset);
                ex.new_subsets.push_back(subset | (uint64_t(1) << order));
            }
            sort_subsets(ex.new_subsets);
            // From order 10 on, graphs whose smallest eigenvalue climbed back
            // to -2 or above can never fall below it again along this search,
            // so prune them.
            if (order == 9)
                std::erase_if(ex.kids, [](const Graph& c) { return is_psd_at_two(c); });
            // A parent with a unique augmented-path witness forces the same
            // witness pattern in any witnessed child, which is then reachable
            // from a smaller witnessed member; keep only witness-free kids.
            if (order == 10 && ape_witnesses(node.g).size() == 1)
                std::erase_if(ex.kids, [](const Graph& c) { return !ape_witnesses(c).empty(); });
        });

        std::vector<Node> merged;
        std::map<GraphKey, std::vector<size_t>> buckets;
        for (auto& ex : expansions) {
            for (auto& kid : ex.kids) {
                auto key = hash_graph(kid);
                auto& bucket = buckets[key];
                bool dup = false;
                for (size_t idx : bucket) {
                    auto map = isomorphic(kid, merged[idx].g);
                    if (!map) continue;
                    // Pool the duplicate's candidate neighbourhoods, carried
                    // through the isomorphism onto the kept representative.
                    auto& pool = merged[idx].subsets;
                    for (uint64_t subset : ex.new_subsets) {
                        uint64_t mapped = 0;
                        for (uint64_t m = subset; m; m &= m - 1)
                            mapped |= uint64_t(1) << (*map)[__builtin_ctzll(m)];
                        pool.push_back(mapped);
                    }
                    sort_subsets(pool);
                    dup = true;
                    break;
                }
                if (!dup) {
                    bucket.push_back(merged.size());
                    merged.push_back({std::move(kid), ex.new_subsets});
                }
            }
        }

        level = std::move(merged);
        ++order;
        if (!checkpoint_dir.empty())
            write_checkpoint(checkpoint_dir, {order, result.level_members, result.mavericks, level});
    }
    return result;
}

}  // namespace minev
