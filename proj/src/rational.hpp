#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace minev {

using Integer = mpz_class;
using Rational = mpq_class;

// Largest dyadic-scaled rational r = floor(sqrt(num*den*4^iters)) / (den*2^iters)
// with r*r <= q. Monotone nondecreasing in iters; exact whenever q is the square
// of a rational (the scaled radicand is then a perfect square at every level).
inline Rational sqrt_lower_bound(const Rational& q, unsigned iters = 32) {
    if (sgn(q) < 0)
        throw std::domain_error("sqrt_lower_bound: negative argument");
    Integer radicand = q.get_num() * q.get_den();
    mpz_mul_2exp(radicand.get_mpz_t(), radicand.get_mpz_t(), 2 * iters);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    Integer denom = q.get_den();
    mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), iters);
    Rational r(root, denom);
    r.canonicalize();
    return r;
}

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace minev
