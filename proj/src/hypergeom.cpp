#include "hecke/hypergeom.hpp"

#include <cmath>

namespace hecke {

TriangleParams triangle_params(long m) {
    if (m < 3) throw PipelineError("triangle parameters need m >= 3");
    TriangleParams p;
    p.m = m;
    p.alpha = Rational(1, 4) + Rational(1, 2 * m);
    p.beta = Rational(1, 4) - Rational(1, 2 * m);
    p.gamma = 1;
    p.lambda_numeric = 2.0 * std::cos(M_PI / static_cast<double>(m));
    return p;
}

Rational pochhammer(const Rational& a, unsigned long n) {
    Rational acc(1);
    Rational x = a;
    for (unsigned long i = 0; i < n; ++i) {
        acc *= x;
        x += 1;
    }
    return acc;
}

Rational hyper_c(const TriangleParams& p, unsigned long nu) {
    Rational den = pochhammer(1, nu); // nu! ; gamma = 1 contributes another nu!
    return pochhammer(p.alpha, nu) * pochhammer(p.beta, nu) / (den * den);
}

Rational hyper_e(const TriangleParams& p, unsigned long nu) {
    Rational s(0);
    for (unsigned long k = 0; k < nu; ++k) {
        Rational kk(static_cast<long>(k));
        s += Rational(1) / (p.alpha + kk) + Rational(1) / (p.beta + kk) -
             Rational(2, static_cast<long>(k) + 1);
    }
    return s;
}

LaurentSeries hyper_series(const TriangleParams& p, HyperKind kind, long N) {
    if (N < 1) throw PipelineError("hyper_series needs N >= 1");
    std::vector<Rational> c(static_cast<size_t>(N), Rational(0));
    // incremental c_nu and e_nu so the whole table is O(N) rational ops
    Rational cnu(1), enu(0);
    for (long nu = 0; nu < N; ++nu) {
        c[static_cast<size_t>(nu)] = kind == HyperKind::F ? cnu : cnu * enu;
        Rational k(nu);
        cnu *= (p.alpha + k) * (p.beta + k) / ((k + 1) * (k + 1));
        enu += Rational(1) / (p.alpha + k) + Rational(1) / (p.beta + k) - Rational(2) / (k + 1);
    }
    return LaurentSeries(0, std::move(c), N);
}

LaurentSeries Y_series(const TriangleParams& p, long N) {
    if (N < 2) throw PipelineError("Y_series needs N >= 2");
    LaurentSeries F = hyper_series(p, HyperKind::F, N - 1);
    LaurentSeries Fs = hyper_series(p, HyperKind::Fstar, N - 1);
    LaurentSeries rat = Fs / F; // offset 1, order N-1
    return rat.exp() * LaurentSeries::monomial(1, 1);
}

double digamma(double x) {
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // psi(x) ~ ln x - 1/(2x) - sum B_{2k} / (2k x^{2k})
    static const double kB2k[12] = {1.0 / 6,         -1.0 / 30,       1.0 / 42,
                                    -1.0 / 30,       5.0 / 66,        -691.0 / 2730,
                                    7.0 / 6,         -3617.0 / 510,   43867.0 / 798,
                                    -174611.0 / 330, 854513.0 / 138,  -236364091.0 / 2730};
    double inv2 = 1.0 / (x * x);
    double t = inv2, tail = 0.0;
    for (int k = 0; k < 12; ++k) {
        tail += kB2k[k] / (2.0 * (k + 1)) * t;
        t *= inv2;
    }
    return acc + std::log(x) - 0.5 / x - tail;
}

double residue_A(long m, double tol) {
    if (m < 3) throw PipelineError("residue_A needs m >= 3");
    (void)tol; // digamma tail already exceeds every tolerance the callers use
    double md = static_cast<double>(m);
    double alpha = 0.25 + 0.5 / md, beta = 0.25 - 0.5 / md;
    double logA = M_PI / std::cos(M_PI / md) - 2.0 * digamma(1.0) + digamma(alpha) + digamma(beta);
    return std::exp(logA);
}

double residue_A_alt(long m) {
    if (m < 3) throw PipelineError("residue_A needs m >= 3");
    double md = static_cast<double>(m);
    double alpha = 0.25 + 0.5 / md, beta = 0.25 - 0.5 / md;
    double logA =
        -2.0 * digamma(1.0) + digamma(1.0 - alpha) + digamma(1.0 - beta) - M_PI / std::cos(M_PI / md);
    return std::exp(logA);
}

} // namespace hecke
