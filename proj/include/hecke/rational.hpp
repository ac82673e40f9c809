#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hecke/errors.hpp"

namespace hecke {

// GMP's canonical reduced fraction is exactly the ExactRational contract:
// gcd(|num|, den) = 1, den >= 1, exact ring arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string num_str(const Rational& r) { return r.get_num().get_str(); }
inline std::string den_str(const Rational& r) { return r.get_den().get_str(); }

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    Rational r{Integer(num), Integer(den)};
    r.canonicalize();
    return r;
}

// r^e for possibly negative e; throws on 0^negative.
inline Rational pow_rational(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0 && e < 0) throw SeriesError("pow: zero base with negative exponent");
    Rational base = e > 0 ? r : Rational(1) / r;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

// Exact k-th root of a rational, if one exists in Q.  Negative inputs have
// one only for odd k; the epsilon normalization upstream arranges signs so
// the pipeline itself always takes positive roots.
inline bool exact_kth_root(const Rational& x, unsigned long k, Rational& out) {
    if (k == 0 || x == 0) return false;
    if (sgn(x) < 0) {
        if (k % 2 == 0) return false;
        if (!exact_kth_root(-x, k, out)) return false;
        out = -out;
        return true;
    }
    Integer rn, rd;
    if (!mpz_root(rn.get_mpz_t(), x.get_num().get_mpz_t(), k)) return false;
    if (!mpz_root(rd.get_mpz_t(), x.get_den().get_mpz_t(), k)) return false;
    out = Rational(rn, rd); // already canonical: roots of coprime ints are coprime
    return true;
}

inline long ord_prime(Integer n, unsigned long p) {
    if (n == 0) return -1;
    n = abs(n);
    long k = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++k;
    }
    return k;
}

} // namespace hecke
