#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/laurent.hpp"

namespace hecke {

// Independent reference sequences: everything in here is computable without
// touching the hypergeometric pipeline, so agreement is genuine evidence.

enum class DivisorFilter { all, quotient_odd };

// sum of d^k over divisors d of n (restricted to n/d odd when filtered)
Integer divisor_power_sum(long n, unsigned long k, DivisorFilter filter = DivisorFilter::all);

enum class ClassicalKind { E4, E6, Delta, JKlein };

// E4 = 1 + 240 sum sigma_3 q^n, E6 = 1 - 504 sum sigma_5 q^n,
// Delta = q prod (1-q^n)^24, jKlein = E4^3 / Delta.  Order N.
LaurentSeries classical_series(ClassicalKind kind, long N);

// Product of eta(multiplier * z)^exponent factors.
struct EtaQuotientSpec {
    std::vector<std::pair<long, long>> factors; // (multiplier, exponent)
};

struct EtaQuotientResult {
    LaurentSeries series; // q-power folded in iff the prefactor is integral
    long twenty_fourths;  // sum multiplier*exponent: leading q-power in 1/24 units
    bool integral() const { return twenty_fourths % 24 == 0; }
};

EtaQuotientResult eta_quotient_series(const EtaQuotientSpec& spec, long N);

// S(f) with {f, z} = (2 pi i)^2 S(f), S = (2 Df D^3f - 3 (D^2f)^2) / (2 (Df)^2),
// D = q d/dq.  Rational throughout.
LaurentSeries schwarzian_q(const LaurentSeries& f);

enum class QMode { form, cloitre };

// n in the set Q: NOT represented by x^2 + xy + y^2 (form mode), or
// equivalently (Cloitre) n non-square with 3 | sigma(n).
bool quad_form_membership(long n, QMode mode);

// vectors of squared norm 2n in D4 (+) D4; D4 = even-coordinate-sum 4-tuples
Integer d4d4_theta(long n);

struct AnchoredInteger {
    Integer value;
    std::string provenance; // "paper" for the printed anchors, else "derived"
};

// McKay-Thompson class 4A in the constant-24 normalization, derived
// independently as f + 256/f + 32 with f = eta(z)^8/eta(4z)^8 (the
// Fricke-symmetrized Gamma_0(4) hauptmodul):
// q^-1 + 24 + 276 q + 2048 q^2 + 11202 q^3 + ...
LaurentSeries mt4a_series(long N);

// a(-1)..a(2) = 1, 24, 276, 2048 are paper anchors; beyond that the value
// comes from the provider (mt4a_series-backed by default's caller) and is
// labeled as such.
using Mt4aProvider = std::function<Integer(long)>;
AnchoredInteger mt4a_reference(long n, const Mt4aProvider& derived = {});

} // namespace hecke
