#pragma once

#include <map>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace minev {

struct CorpusEntry {
    std::string label;
    Graph g;
};

// Tab-separated "label<TAB>edge-string" lines; '#' starts a comment.
std::vector<CorpusEntry> load_corpus(const std::string& path);

// Throws std::runtime_error on any violated corpus invariant: 36 entries
// labelled E6, B1..B4, G1..G31; the E6/B entries isomorphic to the built-ins;
// the G section listing 31 connected graphs of orders 5 and 6, pairwise
// non-isomorphic, including E6, E6', and the star K_{1,5}.
void validate_corpus(const std::vector<CorpusEntry>& corpus);

struct ForbiddenCheck {
    std::string name;
    RootedGraph rooted;
    Integer scaled_det;  // det(101 I + 50 A) over the zero-length augmented extension
};

// Eight rooted graphs whose zero-length augmented-path extension already has
// an eigenvalue below -101/50 = -2.02: the determinant of A + (101/50) I is
// negative, so an odd number of eigenvalues lies below -101/50. Any rooted
// graph containing one of these rootings therefore leaves the target window.
std::vector<ForbiddenCheck> verify_forbidden_rooted();

// E6 plus one vertex joined to every nonempty subset of V(E6), up to
// isomorphism (39 graphs on 7 vertices), and four 8-vertex companions whose
// single-vertex deletions are E7 and whose double deletion is E6.
std::vector<Graph> appendix_a_list();
std::vector<Graph> appendix_b_list();

struct AppendixPair {
    std::string family;  // pool label of the base graph
    Graph f;
    uint64_t roots;
    std::string classification;  // "E6", "E7", "E6p-rooted", or "unexpected"
};

struct AppendixResult {
    int pool_size = 0;
    int pd_pass = 0;  // pool members with A + (95/47) I positive definite
    std::vector<AppendixPair> collected;
    std::map<std::string, int> classification_counts;
    bool limit_consistent = true;      // every non-collected rooting had its
                                       // path-extension limit certified below -95/47
    bool coefficient_certified = false;  // 6/7 below the critical border weight
};

// Scans every rooting of every pool graph (E6, the A and B lists, and the
// corpus G entries) for those whose path extensions keep their smallest
// eigenvalue above -95/47 in the limit. The survivors are collected via a
// bordered determinant at border weight 6/7 and cross-checked against the
// independent limit certificate.
AppendixResult verify_path_extension_limits(const std::vector<CorpusEntry>& corpus);

struct GlgScan {
    std::map<int, int> catalog_by_order;   // generalized line graphs up to order 10
    std::vector<Graph> minimal_forbidden;  // sorted by (order, canonical form)
};

// Catalogues all connected generalized line graphs with at most 10 vertices
// (line graphs of connected multigraphs whose multiple edges form pendant
// 2-cycles), then finds every minimal graph outside the class: the graph is
// not in the catalogue but all components of every one-vertex deletion are.
GlgScan minimal_forbidden_glg(int jobs = 0);

// The shipped corpus file: built-in E6/B section plus the freshly derived
// G section, as TSV text.
std::string render_corpus();

}  // namespace minev
