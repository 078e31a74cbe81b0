#include "spectral.hpp"

#include <map>
#include <vector>

namespace minev {

int Constants::lambda_star_poly_sign(const Rational& x) {
    Rational t = x * x - 2;
    Rational p = t * t * t + t * t - 4 * t - 5;
    return sgn(p);
}

Gate gate_lambda_star(const Graph& g) {
    if (is_positive_definite(scaled_shifted_adjacency(g, 18259, 9040))) return Gate::Above;
    if (!is_positive_definite(scaled_shifted_adjacency(g, 91499, 45301))) return Gate::Below;
    throw UndecidableError("gate_lambda_star: smallest eigenvalue between rational brackets");
}

bool is_psd_at_two(const Graph& g) {
    return is_positive_definite(scaled_shifted_adjacency(g, 305, 152));
}

int min_ell0(const RootedGraph& f) {
    for (int ell = 0; ell <= 6; ++ell)
        if (!is_psd_at_two(extend(f, ape_ext(ell)))) return ell;
    throw Ell0NotFound("min_ell0: PSD at -2 for every ell in 0..6");
}

bool limit_below(const RootedGraph& gs, const Rational& q, unsigned iters) {
    if (q < 2) throw std::invalid_argument("limit_below: q >= 2 required");
    Graph g = extend(gs, path_ext(0));
    const int v0 = g.n - 1;
    auto psd_at = [&](const Rational& c) {
        return is_positive_semidefinite(shifted_adjacency(g, q, std::make_pair(v0, Rational(-c))));
    };
    Rational s = q * q / 4 - 1;
    Rational r = sqrt_lower_bound(s, iters);
    if (r * r == s) return !psd_at(q / 2 - r);  // c* is rational: decide exactly
    if (sgn(r) == 0) throw InconclusiveError("limit_below: radicand too small for iteration count");
    // r < sqrt(s) < s/r bracket c* from both sides.
    if (!psd_at(q / 2 - s / r)) return true;
    if (psd_at(q / 2 - r)) return false;
    throw InconclusiveError("limit_below: certificates disagree at this precision");
}

bool is_positive_definite_shifted(const Graph& g, const Rational& shift) {
    const int n = g.n;
    std::vector<std::map<int, Rational>> row(n);
    std::vector<Rational> diag(n, shift);
    for (auto [u, v] : g.edges()) {
        row[u].emplace(v, 1);
        row[v].emplace(u, 1);
    }
    std::vector<char> live(n, 1);
    for (int step = 0; step < n; ++step) {
        int p = -1;
        size_t best = size_t(-1);
        for (int v = 0; v < n; ++v)
            if (live[v] && row[v].size() < best) {
                p = v;
                best = row[v].size();
            }
        if (sgn(diag[p]) <= 0) return false;
        live[p] = 0;
        std::vector<std::pair<int, Rational>> nbrs(row[p].begin(), row[p].end());
        for (auto& [i, vip] : nbrs) row[i].erase(p);
        for (size_t x = 0; x < nbrs.size(); ++x) {
            auto& [i, vip] = nbrs[x];
            diag[i] -= vip * vip / diag[p];
            for (size_t y = x + 1; y < nbrs.size(); ++y) {
                auto& [j, vjp] = nbrs[y];
                Rational delta = vip * vjp / diag[p];
                auto update = [&](int from, int to) {
                    auto [it, fresh] = row[from].try_emplace(to, 0);
                    it->second -= delta;
                    if (sgn(it->second) == 0) row[from].erase(it);
                };
                update(i, j);
                update(j, i);
            }
        }
        row[p].clear();
    }
    return true;
}

ShiftBracket initial_bracket(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("initial_bracket: empty graph");
    // PD at n+1 always holds (lambda_1 >= -(n-1)); PD at -(n+1) never does
    // (lambda_1 <= n-1 < n+1).
    return {Rational(-(g.n + 1)), Rational(g.n + 1)};
}

void refine_bracket(const Graph& g, ShiftBracket& br, int halvings) {
    for (int i = 0; i < halvings; ++i) {
        Rational mid = (br.not_pd + br.pd) / 2;
        if (is_positive_definite_shifted(g, mid))
            br.pd = mid;
        else
            br.not_pd = mid;
    }
}

std::pair<Rational, Rational> lambda1_interval(const Graph& g, const Rational& tol) {
    if (sgn(tol) <= 0) throw std::invalid_argument("lambda1_interval: tol must be positive");
    ShiftBracket br = initial_bracket(g);
    while (br.pd - br.not_pd > tol) refine_bracket(g, br, 1);
    return {-br.pd, -br.not_pd};
}

bool certify_lambda1_below(const Graph& a, const Graph& b) {
    const Rational two(2);
    bool a_pd2 = is_positive_definite_shifted(a, two);
    bool b_pd2 = is_positive_definite_shifted(b, two);
    if (b_pd2 && !a_pd2) return true;  // lambda_1(a) <= -2 < lambda_1(b)
    bool a_psd2 = is_psd_at_two(a);
    bool b_psd2 = is_psd_at_two(b);
    if (b_psd2 && !a_psd2) return true;  // lambda_1(a) < -2 <= lambda_1(b)
    ShiftBracket ba = initial_bracket(a), bb = initial_bracket(b);
    for (int round = 0; round < 200; ++round) {
        // lambda_1(a) <= -ba.not_pd and lambda_1(b) > -bb.pd.
        if (ba.not_pd >= bb.pd) return true;
        refine_bracket(a, ba, 1);
        refine_bracket(b, bb, 1);
    }
    throw InconclusiveError("certify_lambda1_below: brackets failed to separate");
}

}  // namespace minev
