#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace minev {

// Dense square matrix of exact integers, row-major.
struct IntMatrix {
    int n = 0;
    std::vector<Integer> a;

    IntMatrix() = default;
    explicit IntMatrix(int n_) : n(n_), a(size_t(n_) * size_t(n_)) {}
    Integer& at(int i, int j) { return a[size_t(i) * n + j]; }
    const Integer& at(int i, int j) const { return a[size_t(i) * n + j]; }
};

// Dense square matrix of exact rationals, row-major.
struct RatMatrix {
    int n = 0;
    std::vector<Rational> a;

    RatMatrix() = default;
    explicit RatMatrix(int n_) : n(n_), a(size_t(n_) * size_t(n_)) {}
    Rational& at(int i, int j) { return a[size_t(i) * n + j]; }
    const Rational& at(int i, int j) const { return a[size_t(i) * n + j]; }
};

// Determinant by fraction-free (Bareiss) elimination with row pivoting.
Integer det(IntMatrix m);
Rational det(const RatMatrix& m);

// Sylvester's criterion: every leading principal minor positive. The Bareiss
// sweep without row swaps produces exactly those minors as pivots, so the test
// shares the determinant's elimination and exits at the first failure.
bool is_positive_definite(IntMatrix m);
bool is_positive_definite(const RatMatrix& m);

// Exact PSD test by symmetric elimination with diagonal pivoting: a PSD matrix
// with a zero diagonal entry has the whole row zero, so always pivoting on a
// positive diagonal entry (and demanding an all-zero remainder when none is
// left) decides semidefiniteness.
bool is_positive_semidefinite(RatMatrix m);

// A(g) + shift*I, optionally with diag_adjust.second added at the diagonal
// entry of vertex diag_adjust.first.
RatMatrix shifted_adjacency(const Graph& g, const Rational& shift,
                            std::optional<std::pair<int, Rational>> diag_adjust = std::nullopt);

// num*I + den*A(g): the integer matrix whose definiteness equals that of
// A(g) + (num/den)*I for den > 0. Keeps the hot enumeration paths integral.
IntMatrix scaled_shifted_adjacency(const Graph& g, long num, long den);

}  // namespace minev
