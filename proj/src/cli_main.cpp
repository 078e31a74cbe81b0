#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "enum_maverick.hpp"
#include "enum_rooted.hpp"
#include "published.hpp"
#include "spectral.hpp"
#include "twisted.hpp"
#include "verify.hpp"

using nlohmann::json;
using namespace minev;

namespace {

struct Output {
    std::string format = "text";
    std::string path;

    void emit(const std::string& text, const json& data) const {
        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            os = &file;
        }
        if (format == "json")
            *os << data.dump(2) << '\n';
        else
            *os << text;
    }
};

std::string fmt(int v) { return std::to_string(v); }

std::string fmt(const std::map<int, int>& m) {
    std::string out = "{";
    for (auto [k, v] : m) {
        if (out.size() > 1) out += ',';
        out += std::to_string(k) + ":" + std::to_string(v);
    }
    return out + "}";
}

std::string fmt(const std::map<std::string, int>& m) {
    std::string out = "{";
    for (const auto& [k, v] : m) {
        if (out.size() > 1) out += ',';
        out += k + ":" + std::to_string(v);
    }
    return out + "}";
}

std::string fmt(const std::vector<int>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + "]";
}

struct CheckReport {
    struct Check {
        std::string name, got, want;
        bool ok;
    };
    std::vector<Check> checks;
    bool ok = true;

    void expect(const std::string& name, const std::string& got, const std::string& want) {
        bool good = got == want;
        checks.push_back({name, got, want, good});
        ok = ok && good;
    }
    void expect_true(const std::string& name, bool got) {
        expect(name, got ? "yes" : "no", "yes");
    }
};

int finish_checks(const CheckReport& r, const Output& output) {
    std::ostringstream text;
    json j;
    j["ok"] = r.ok;
    j["checks"] = json::array();
    for (const auto& c : r.checks) {
        text << (c.ok ? "ok " : "MISMATCH ") << c.name;
        if (!c.ok) text << ": got " << c.got << ", want " << c.want;
        text << '\n';
        j["checks"].push_back({{"name", c.name}, {"got", c.got}, {"want", c.want}, {"ok", c.ok}});
    }
    text << (r.ok ? "all published values reproduced\n" : "published-value mismatch\n");
    output.emit(text.str(), j);
    return r.ok ? 0 : 1;
}

std::string roots_csv(uint64_t roots) {
    std::string out;
    for (uint64_t m = roots; m; m &= m - 1) {
        if (!out.empty()) out += ',';
        out += std::to_string(__builtin_ctzll(m));
    }
    return out;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    Integer num(slash == std::string::npos ? s : s.substr(0, slash));
    Integer den = slash == std::string::npos ? Integer(1) : Integer(s.substr(slash + 1));
    if (sgn(den) <= 0) throw std::invalid_argument("denominator must be positive: " + s);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

int run_rooted(int jobs, const Output& output, bool expect) {
    RootedCatalog catalog = enumerate_rooted(jobs);
    annotate_ell0(catalog, jobs);
    std::map<int, int> ell0_hist;
    int maximal = 0;
    for (const auto& e : catalog.entries) {
        ++ell0_hist[e.ell0];
        maximal += e.maximal ? 1 : 0;
    }

    if (expect) {
        CheckReport r;
        r.expect("families", fmt(int(catalog.entries.size())), fmt(published::rooted_total));
        r.expect("size histogram", fmt(catalog.size_histogram),
                 fmt(published::rooted_size_histogram));
        r.expect("maximal families", fmt(maximal), fmt(published::rooted_maximal_count));
        r.expect("path-threshold histogram", fmt(ell0_hist),
                 fmt(published::rooted_ell0_histogram));
        return finish_checks(r, output);
    }

    std::ostringstream text;
    json j;
    j["families"] = json::array();
    for (const auto& e : catalog.entries) {
        std::string edges = serialize_edges(e.h);
        text << edges << '\t' << e.size << '\t' << e.ell0 << '\t' << int(e.maximal) << '\n';
        j["families"].push_back(
            {{"edges", edges}, {"size", e.size}, {"ell0", e.ell0}, {"maximal", e.maximal}});
    }
    text << "# size-histogram " << fmt(catalog.size_histogram) << '\n';
    text << "# ell0-histogram " << fmt(ell0_hist) << '\n';
    text << "# maximal " << maximal << '\n';
    text << "# total " << catalog.entries.size() << '\n';
    j["size_histogram"] = catalog.size_histogram;
    j["ell0_histogram"] = json::object();
    for (auto [k, v] : ell0_hist) j["ell0_histogram"][std::to_string(k)] = v;
    j["maximal_count"] = maximal;
    j["total"] = catalog.entries.size();
    output.emit(text.str(), j);
    return 0;
}

int run_maverick(int jobs, const std::string& checkpoint_dir, const Output& output, bool expect) {
    MaverickResult res = enumerate_mavericks(jobs, checkpoint_dir);

    if (expect) {
        CheckReport r;
        r.expect("mavericks", fmt(int(res.mavericks.size())), fmt(published::maverick_total));
        r.expect("order histogram", fmt(res.histogram), fmt(published::maverick_histogram));
        r.expect("search-level sizes", fmt(res.level_members),
                 fmt(published::maverick_level_members));
        return finish_checks(r, output);
    }

    std::ostringstream text;
    json j;
    j["mavericks"] = json::array();
    for (const auto& g : res.mavericks) {
        std::string edges = serialize_edges(g);
        text << g.n << '\t' << edges << '\n';
        j["mavericks"].push_back({{"order", g.n}, {"edges", edges}});
    }
    text << "# level-members " << fmt(res.level_members) << '\n';
    text << "# histogram " << fmt(res.histogram) << '\n';
    text << "# total " << res.mavericks.size() << '\n';
    j["level_members"] = json::object();
    for (auto [k, v] : res.level_members) j["level_members"][std::to_string(k)] = v;
    j["histogram"] = json::object();
    for (auto [k, v] : res.histogram) j["histogram"][std::to_string(k)] = v;
    j["total"] = res.mavericks.size();
    output.emit(text.str(), j);
    return 0;
}

int run_twisted(int jobs, const std::string& checkpoint_dir, const Output& output, bool expect) {
    MaverickResult res = enumerate_mavericks(jobs, checkpoint_dir);
    std::vector<TwistedEntry> twisted = filter_twisted(res.mavericks);
    std::map<int, int> hist = twisted_histogram(twisted);

    if (expect) {
        CheckReport r;
        r.expect("twisted mavericks", fmt(int(twisted.size())), fmt(published::twisted_total));
        r.expect("order histogram", fmt(hist), fmt(published::twisted_histogram));
        return finish_checks(r, output);
    }

    std::ostringstream text;
    json j;
    j["twisted"] = json::array();
    for (const auto& e : twisted) {
        std::string edges = serialize_edges(e.g);
        std::string witness = std::to_string(e.w.u0) + ',' + std::to_string(e.w.u1) + ',' +
                              std::to_string(e.w.u2) + ',' + std::to_string(e.w.uc);
        text << e.g.n << '\t' << edges << '\t' << witness << '\n';
        j["twisted"].push_back({{"order", e.g.n}, {"edges", edges}, {"witness", witness}});
    }
    text << "# histogram " << fmt(hist) << '\n';
    text << "# total " << twisted.size() << '\n';
    j["histogram"] = json::object();
    for (auto [k, v] : hist) j["histogram"][std::to_string(k)] = v;
    j["total"] = twisted.size();
    output.emit(text.str(), j);
    return 0;
}

int run_forbidden(const Output& output, bool expect) {
    std::vector<ForbiddenCheck> checks = verify_forbidden_rooted();

    if (expect) {
        CheckReport r;
        r.expect("rootings", fmt(int(checks.size())), fmt(int(published::forbidden_scaled_dets.size())));
        for (size_t i = 0; i < checks.size() && i < published::forbidden_scaled_dets.size(); ++i) {
            const auto& [name, det_str] = published::forbidden_scaled_dets[i];
            r.expect("name of rooting " + std::to_string(i), checks[i].name, name);
            r.expect("det for " + checks[i].name, checks[i].scaled_det.get_str(), det_str);
            r.expect_true("negative det for " + checks[i].name, sgn(checks[i].scaled_det) < 0);
        }
        return finish_checks(r, output);
    }

    bool all_negative = true;
    std::ostringstream text;
    json j;
    j["rootings"] = json::array();
    for (const auto& c : checks) {
        bool neg = sgn(c.scaled_det) < 0;
        all_negative = all_negative && neg;
        std::string edges = serialize_edges(c.rooted.g);
        text << c.name << '\t' << edges << '\t' << roots_csv(c.rooted.roots) << '\t'
             << c.scaled_det.get_str() << '\n';
        j["rootings"].push_back({{"name", c.name},
                                 {"edges", edges},
                                 {"roots", roots_csv(c.rooted.roots)},
                                 {"scaled_det", c.scaled_det.get_str()},
                                 {"negative", neg}});
    }
    text << "# all-negative " << (all_negative ? "yes" : "no") << '\n';
    j["all_negative"] = all_negative;
    output.emit(text.str(), j);
    return all_negative ? 0 : 1;
}

int run_appendix(const std::string& corpus_path, const Output& output, bool expect) {
    std::vector<CorpusEntry> corpus = load_corpus(corpus_path);
    validate_corpus(corpus);
    AppendixResult res = verify_path_extension_limits(corpus);

    if (expect) {
        CheckReport r;
        r.expect("pool size", fmt(res.pool_size), fmt(published::appendix_pool_size));
        r.expect("positive definite at 95/47", fmt(res.pd_pass), fmt(published::appendix_pd_pass));
        r.expect("collected pairs", fmt(int(res.collected.size())),
                 fmt(published::appendix_collected));
        r.expect("classification", fmt(res.classification_counts),
                 fmt(published::appendix_classification));
        r.expect_true("limit certificate agreement", res.limit_consistent);
        r.expect_true("border weight certified", res.coefficient_certified);
        return finish_checks(r, output);
    }

    std::ostringstream text;
    json j;
    text << "# pool " << res.pool_size << '\n';
    text << "# pd-at-95/47 " << res.pd_pass << '\n';
    j["pool_size"] = res.pool_size;
    j["pd_pass"] = res.pd_pass;
    j["collected"] = json::array();
    for (const auto& p : res.collected) {
        std::string edges = serialize_edges(p.f);
        text << p.family << '\t' << edges << '\t' << roots_csv(p.roots) << '\t' << p.classification
             << '\n';
        j["collected"].push_back({{"family", p.family},
                                  {"edges", edges},
                                  {"roots", roots_csv(p.roots)},
                                  {"classification", p.classification}});
    }
    text << "# classification " << fmt(res.classification_counts) << '\n';
    text << "# limit-consistent " << (res.limit_consistent ? "yes" : "no") << '\n';
    text << "# coefficient-certified " << (res.coefficient_certified ? "yes" : "no") << '\n';
    j["classification"] = json::object();
    for (const auto& [k, v] : res.classification_counts) j["classification"][k] = v;
    j["limit_consistent"] = res.limit_consistent;
    j["coefficient_certified"] = res.coefficient_certified;
    output.emit(text.str(), j);
    return res.limit_consistent && res.coefficient_certified ? 0 : 1;
}

int run_lambda1(const std::string& edges, const std::string& tol_str, const Output& output) {
    Rational tol = parse_rational(tol_str);
    if (sgn(tol) <= 0) throw std::invalid_argument("tolerance must be positive");
    Graph g = parse_edges(edges).g;
    auto [lo, hi] = lambda1_interval(g, tol);
    double approx = mpq_get_d(Rational((lo + hi) / 2).get_mpq_t());

    std::ostringstream text;
    text << "lambda1-lo\t" << to_string(lo) << '\n';
    text << "lambda1-hi\t" << to_string(hi) << '\n';
    text << "approx\t" << approx << '\n';
    json j{{"lo", to_string(lo)}, {"hi", to_string(hi)}, {"approx", approx}};
    output.emit(text.str(), j);
    return 0;
}

int run_selfcheck(const std::string& corpus_path, const Output& output) {
    CheckReport r;
    bool all_negative = true;
    for (const auto& c : verify_forbidden_rooted()) all_negative &= sgn(c.scaled_det) < 0;
    r.expect_true("forbidden rootings certified", all_negative);

    try {
        validate_corpus(load_corpus(corpus_path));
        r.expect_true("corpus valid", true);
    } catch (const std::exception& e) {
        r.expect("corpus valid", e.what(), "yes");
    }

    r.expect_true("gate above on E40", gate_lambda_star(build_e(40)) == Gate::Above);
    r.expect_true("gate above on E'16", gate_lambda_star(build_e_prime(16)) == Gate::Above);
    r.expect_true("gate below on E'17", gate_lambda_star(build_e_prime(17)) == Gate::Below);
    r.expect_true("E9 reaches -2 exactly", is_psd_at_two(build_e(9)));
    r.expect_true("E10 falls below -2", !is_psd_at_two(build_e(10)));
    r.expect_true("border weight certified",
                  rational(21) / sqrt_lower_bound(rational(21)) < rational(101, 21));

    std::ostringstream text;
    json j;
    j["ok"] = r.ok;
    j["checks"] = json::array();
    for (const auto& c : r.checks) {
        text << (c.ok ? "ok " : "FAIL ") << c.name;
        if (!c.ok) text << ": " << c.got;
        text << '\n';
        j["checks"].push_back({{"name", c.name}, {"ok", c.ok}});
    }
    text << (r.ok ? "selfcheck passed\n" : "selfcheck failed\n");
    output.emit(text.str(), j);
    return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "classification of connected graphs whose smallest adjacency eigenvalue lies strictly "
        "between -lambda* and -2, with exact rational certificates"};
    app.require_subcommand(1);

    int jobs = 0;
    Output output;
    bool expect = false;
    std::string corpus_path = "data/corpus_appendix.tsv";
    std::string checkpoint_dir;
    std::string tol_str = "1/1000000";
    std::string edges_arg;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", output.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", output.path, "write output to this file instead of stdout");
    };
    auto add_jobs = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", jobs, "worker threads (0 = MINEV_JOBS or hardware)");
    };
    auto add_expect = [&](CLI::App* cmd) {
        cmd->add_flag("--expect-paper", expect,
                      "compare against the published values; exit 1 on mismatch");
    };

    CLI::App* rooted_cmd =
        app.add_subcommand("enum-rooted", "enumerate the rooted-graph families with their "
                                          "path-length thresholds and maximal members");
    add_jobs(rooted_cmd);
    add_output(rooted_cmd);
    add_expect(rooted_cmd);

    CLI::App* maverick_cmd = app.add_subcommand(
        "enum-maverick", "enumerate the mavericks (sporadic members of the classification)");
    add_jobs(maverick_cmd);
    add_output(maverick_cmd);
    add_expect(maverick_cmd);
    maverick_cmd->add_option("--checkpoint", checkpoint_dir,
                             "directory for resumable per-level snapshots");

    CLI::App* twisted_cmd = app.add_subcommand(
        "enum-twisted", "enumerate the twisted mavericks with their attachment witnesses");
    add_jobs(twisted_cmd);
    add_output(twisted_cmd);
    add_expect(twisted_cmd);
    twisted_cmd->add_option("--checkpoint", checkpoint_dir,
                            "directory for resumable per-level snapshots");

    CLI::App* forbidden_cmd = app.add_subcommand(
        "verify-forbidden", "determinant certificates for the eight forbidden rootings");
    add_output(forbidden_cmd);
    add_expect(forbidden_cmd);

    CLI::App* appendix_cmd = app.add_subcommand(
        "verify-appendix", "scan all rootings of the corpus for path-extension limits above "
                           "-95/47, with exact cross-certificates");
    add_output(appendix_cmd);
    add_expect(appendix_cmd);
    appendix_cmd->add_option("--corpus", corpus_path, "corpus TSV file")
        ->capture_default_str();

    CLI::App* lambda1_cmd = app.add_subcommand(
        "lambda1", "certified interval for the smallest adjacency eigenvalue of a graph");
    lambda1_cmd->add_option("edges", edges_arg, "edge string, two vertex labels per edge")
        ->required();
    lambda1_cmd->add_option("--tol", tol_str, "maximum interval width (rational)")
        ->capture_default_str();
    add_output(lambda1_cmd);

    CLI::App* selfcheck_cmd =
        app.add_subcommand("selfcheck", "fast internal consistency checks");
    add_output(selfcheck_cmd);
    selfcheck_cmd->add_option("--corpus", corpus_path, "corpus TSV file")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (rooted_cmd->parsed()) return run_rooted(jobs, output, expect);
        if (maverick_cmd->parsed()) return run_maverick(jobs, checkpoint_dir, output, expect);
        if (twisted_cmd->parsed()) return run_twisted(jobs, checkpoint_dir, output, expect);
        if (forbidden_cmd->parsed()) return run_forbidden(output, expect);
        if (appendix_cmd->parsed()) return run_appendix(corpus_path, output, expect);
        if (lambda1_cmd->parsed()) return run_lambda1(edges_arg, tol_str, output);
        if (selfcheck_cmd->parsed()) return run_selfcheck(corpus_path, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
