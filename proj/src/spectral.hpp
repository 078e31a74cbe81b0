#pragma once

#include <stdexcept>
#include <utility>

#include "graph.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace minev {

// lambda* = 2.0198008870904673... is the classification threshold: the unique
// real number > 2 whose square, shifted by -2, is the real root of
// t^3 + t^2 - 4t - 5. All spectral tests against it run on the exact rational
// bracket below; the float values are for reporting only.
struct Constants {
    static Rational lambda_star_lo() { return rational(18259, 9040); }    // < lambda*
    static Rational lambda_star_hi() { return rational(91499, 45301); }   // > lambda*
    static Rational psd_two_proxy() { return rational(305, 152); }
    static double lambda_star_float() { return 2.0198008870904673; }
    static double lambda_prime_float() { return 2.021235416051777; }

    // Sign of (x^2 - 2)^3 + (x^2 - 2)^2 - 4(x^2 - 2) - 5; negative exactly for
    // 2 <= x < lambda*, so the bracket above is certified without floats.
    static int lambda_star_poly_sign(const Rational& x);
};

enum class Gate { Above, Below };

struct UndecidableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Ell0NotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Above iff lambda_1(g) > -lambda*, certified by positive definiteness of
// A + lambda_star_lo*I; Below iff lambda_1(g) < -lambda*, certified by
// indefiniteness at lambda_star_hi (a rational non-integer cannot be an
// eigenvalue, so failure there is strict). Throws UndecidableError when
// lambda_1 lands between the brackets, which no graph in scope does.
Gate gate_lambda_star(const Graph& g);

// lambda_1(g) >= -2, decided as positive definiteness at 305/152: no graph has
// smallest eigenvalue in (-305/152, -2), since anything below -2 is at or
// below lambda_1(E_10) = -2.0065936... < -305/152.
bool is_psd_at_two(const Graph& g);

// Smallest ell in 0..6 for which the ape extension of f leaves the PSD-at--2
// region; throws Ell0NotFound if all seven pass (impossible for catalog
// members, where ell = 6 always fails).
int min_ell0(const RootedGraph& f);

// Whether lim_{ell -> inf} lambda_1 of the path extensions of gs is < -q, for
// rational q >= 2. The limit is -q exactly when A + qI - c*E_{v0,v0} with
// c* = q/2 - sqrt(q^2/4 - 1) is on the PSD boundary, so PSD failure at a
// certified c <= c* proves "true" and PSD success at a certified c >= c*
// proves "false"; anything between throws InconclusiveError.
bool limit_below(const RootedGraph& gs, const Rational& q, unsigned iters = 32);

// Positive definiteness of A + shift*I by sparse exact LDL^T elimination in
// minimum-degree order (linear-time on the tree-like graphs this is used on).
bool is_positive_definite_shifted(const Graph& g, const Rational& shift);

// Exact bisection bracket on the shift axis: PD fails at not_pd, holds at pd,
// so lambda_1 lies in (-pd, -not_pd].
struct ShiftBracket {
    Rational not_pd;
    Rational pd;
};
ShiftBracket initial_bracket(const Graph& g);
void refine_bracket(const Graph& g, ShiftBracket& br, int halvings);

// (lo, hi) with hi - lo <= tol and lambda_1(g) in (lo, hi], by bisection with
// exact rational PD tests at dyadic points.
std::pair<Rational, Rational> lambda1_interval(const Graph& g, const Rational& tol);

// Certifies lambda_1(a) < lambda_1(b) exactly. Fast paths via the -2 gap
// tests (these also settle pairs whose smaller member sits at -2 exactly),
// then interval refinement until the brackets separate.
bool certify_lambda1_below(const Graph& a, const Graph& b);

}  // namespace minev
