#include "matrix.hpp"

#include <stdexcept>

namespace minev {

namespace {

// One Bareiss elimination step on rows/columns k+1.. of m, dividing by the
// previous pivot. Entries stay integral (they are minors of the original).
void bareiss_step(IntMatrix& m, int k, const Integer& prev) {
    thread_local Integer t;
    const Integer& piv = m.at(k, k);
    for (int i = k + 1; i < m.n; ++i) {
        const Integer& mik = m.at(i, k);
        for (int j = k + 1; j < m.n; ++j) {
            Integer& mij = m.at(i, j);
            mpz_mul(t.get_mpz_t(), mik.get_mpz_t(), m.at(k, j).get_mpz_t());
            mpz_mul(mij.get_mpz_t(), mij.get_mpz_t(), piv.get_mpz_t());
            mpz_sub(mij.get_mpz_t(), mij.get_mpz_t(), t.get_mpz_t());
            if (k > 0) mpz_divexact(mij.get_mpz_t(), mij.get_mpz_t(), prev.get_mpz_t());
        }
    }
}

}  // namespace

Integer det(IntMatrix m) {
    const int n = m.n;
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    r = i;
                    break;
                }
            if (r < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
            sign = -sign;
        }
        bareiss_step(m, k, prev);
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Integer(-m.at(n - 1, n - 1));
}

bool is_positive_definite(IntMatrix m) {
    const int n = m.n;
    Integer prev = 1;
    for (int k = 0; k < n; ++k) {
        if (sgn(m.at(k, k)) <= 0) return false;  // leading minor <= 0
        if (k + 1 == n) break;
        bareiss_step(m, k, prev);
        prev = m.at(k, k);
    }
    return true;
}

namespace {

// Clears denominators row by row; every leading principal minor is multiplied
// by a positive factor, so determinant sign and Sylvester's criterion carry
// over. Returns the product of the row multipliers.
Integer scale_rows_integral(const RatMatrix& m, IntMatrix& out) {
    out = IntMatrix(m.n);
    Integer total = 1;
    for (int i = 0; i < m.n; ++i) {
        Integer l = 1;
        for (int j = 0; j < m.n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < m.n; ++j) {
            Rational scaled = m.at(i, j) * l;
            out.at(i, j) = scaled.get_num();
        }
        total *= l;
    }
    return total;
}

}  // namespace

Rational det(const RatMatrix& m) {
    IntMatrix scaled;
    Integer factor = scale_rows_integral(m, scaled);
    Rational result(det(std::move(scaled)), factor);
    result.canonicalize();
    return result;
}

bool is_positive_definite(const RatMatrix& m) {
    IntMatrix scaled;
    scale_rows_integral(m, scaled);
    return is_positive_definite(std::move(scaled));
}

bool is_positive_semidefinite(RatMatrix m) {
    const int n = m.n;
    std::vector<int> live(n);
    for (int i = 0; i < n; ++i) live[i] = i;
    while (!live.empty()) {
        int pick = -1;
        for (size_t t = 0; t < live.size(); ++t)
            if (sgn(m.at(live[t], live[t])) > 0) {
                pick = int(t);
                break;
            }
        if (pick < 0) {
            for (int i : live)
                for (int j : live)
                    if (sgn(m.at(i, j)) != 0) return false;
            return true;
        }
        int p = live[pick];
        live.erase(live.begin() + pick);
        const Rational piv = m.at(p, p);
        for (int i : live) {
            if (sgn(m.at(i, p)) == 0) continue;
            Rational f = m.at(i, p) / piv;
            for (int j : live) m.at(i, j) -= f * m.at(p, j);
        }
    }
    return true;
}

RatMatrix shifted_adjacency(const Graph& g, const Rational& shift,
                            std::optional<std::pair<int, Rational>> diag_adjust) {
    RatMatrix m(g.n);
    for (int i = 0; i < g.n; ++i) {
        m.at(i, i) = shift;
        for (uint64_t nb = g.adj[i]; nb; nb &= nb - 1) m.at(i, __builtin_ctzll(nb)) = 1;
    }
    if (diag_adjust) {
        auto [v, delta] = *diag_adjust;
        if (v < 0 || v >= g.n) throw std::invalid_argument("shifted_adjacency: bad vertex");
        m.at(v, v) += delta;
    }
    return m;
}

IntMatrix scaled_shifted_adjacency(const Graph& g, long num, long den) {
    if (den <= 0) throw std::invalid_argument("scaled_shifted_adjacency: need den > 0");
    IntMatrix m(g.n);
    for (int i = 0; i < g.n; ++i) {
        m.at(i, i) = num;
        for (uint64_t nb = g.adj[i]; nb; nb &= nb - 1) m.at(i, __builtin_ctzll(nb)) = den;
    }
    return m;
}

}  // namespace minev
