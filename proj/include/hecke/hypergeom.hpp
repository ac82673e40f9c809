#pragma once

#include "hecke/laurent.hpp"

namespace hecke {

// Parameters of the (0, 1/2, 1/m) triangle attached to the index m.
struct TriangleParams {
    long m;
    Rational alpha; // 1/4 + 1/(2m)
    Rational beta;  // 1/4 - 1/(2m)
    Rational gamma; // always 1
    double lambda_numeric; // 2 cos(pi/m)
};

TriangleParams triangle_params(long m);

// Rising factorial a(a+1)...(a+n-1); empty product is 1.
Rational pochhammer(const Rational& a, unsigned long n);

// c_nu = (alpha)^nu (beta)^nu / (nu! (gamma)^nu), gamma = 1.
Rational hyper_c(const TriangleParams& p, unsigned long nu);

// e_nu = sum_{p=0}^{nu-1} (1/(alpha+p) + 1/(beta+p) - 2/(1+p)); e_0 = 0.
Rational hyper_e(const TriangleParams& p, unsigned long nu);

enum class HyperKind { F, Fstar };

// F = sum c_nu tau^nu (constant term 1) or F* = sum_{nu>=1} c_nu e_nu tau^nu.
LaurentSeries hyper_series(const TriangleParams& p, HyperKind kind, long N);

// Y = J exp(F*(J)/F(J)): offset 1, unit linear coefficient, order N.
LaurentSeries Y_series(const TriangleParams& p, long N);

// psi(x) by recurrence to x >= 10 plus a 12-term asymptotic tail (~1e-12).
double digamma(double x);

// Raleigh's residue constant A_m = exp(pi sec(pi/m) - 2 psi(1) + psi(alpha)
// + psi(beta)).  The two printed sign conventions for log A_m agree once the
// reflection formula is applied; this one satisfies A_3 = 1/1728 directly.
double residue_A(long m, double tol = 1e-9);

// Alternate route: exp(-2 psi(1) + psi(1-alpha) + psi(1-beta) - pi sec(pi/m)).
// Kept separate so the agreement of the two conventions is itself testable.
double residue_A_alt(long m);

} // namespace hecke
