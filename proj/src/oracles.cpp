#include "hecke/oracles.hpp"

#include <cmath>

namespace hecke {

namespace {

Integer int_pow(long d, unsigned long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(d), k);
    return r;
}

// prod_{j>=1} (1 - q^(mult*j)) to order N, by the pentagonal number theorem
LaurentSeries euler_product(long mult, long N) {
    std::vector<Rational> c(static_cast<size_t>(std::max(N, 1L)), Rational(0));
    if (N > 0) c[0] = 1;
    for (long k = 1;; ++k) {
        long e1 = mult * (k * (3 * k - 1) / 2);
        long e2 = mult * (k * (3 * k + 1) / 2);
        if (e1 >= N && e2 >= N) break;
        Rational s((k % 2) ? -1 : 1);
        if (e1 < N) c[static_cast<size_t>(e1)] = s;
        if (e2 < N) c[static_cast<size_t>(e2)] = s;
    }
    return LaurentSeries(0, std::move(c), N);
}

} // namespace

Integer divisor_power_sum(long n, unsigned long k, DivisorFilter filter) {
    if (n < 1) throw PipelineError("divisor_power_sum needs n >= 1");
    Integer s(0);
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        if (filter == DivisorFilter::quotient_odd && (n / d) % 2 == 0) continue;
        s += int_pow(d, k);
    }
    return s;
}

LaurentSeries classical_series(ClassicalKind kind, long N) {
    if (N < 1) throw PipelineError("classical_series needs N >= 1");
    switch (kind) {
        case ClassicalKind::E4:
        case ClassicalKind::E6: {
            bool four = kind == ClassicalKind::E4;
            std::vector<Rational> c(static_cast<size_t>(N), Rational(0));
            c[0] = 1;
            for (long n = 1; n < N; ++n) {
                Integer s = divisor_power_sum(n, four ? 3 : 5);
                c[static_cast<size_t>(n)] = Rational(four ? 240 : -504) * Rational(s);
            }
            return LaurentSeries(0, std::move(c), N);
        }
        case ClassicalKind::Delta: {
            if (N < 2) return LaurentSeries::zero(N);
            LaurentSeries eul = euler_product(1, N - 1);
            return eul.pow_trunc(24).shifted(1);
        }
        case ClassicalKind::JKlein: {
            LaurentSeries e4 = classical_series(ClassicalKind::E4, N + 2);
            LaurentSeries delta = classical_series(ClassicalKind::Delta, N + 2);
            return e4.pow_trunc(3) / delta; // offset -1, order N
        }
    }
    throw PipelineError("classical_series: unknown kind");
}

EtaQuotientResult eta_quotient_series(const EtaQuotientSpec& spec, long N) {
    if (N < 1) throw PipelineError("eta_quotient_series needs N >= 1");
    EtaQuotientResult out;
    out.twenty_fourths = 0;
    LaurentSeries acc = LaurentSeries::constant(1).truncated(N);
    for (const auto& [mult, expo] : spec.factors) {
        if (mult < 1) throw PipelineError("eta quotient: multiplier must be positive");
        out.twenty_fourths += mult * expo;
        if (expo == 0) continue;
        LaurentSeries p = euler_product(mult, N);
        if (expo < 0) p = div_to(LaurentSeries::constant(1), p, N);
        acc = (acc * p.pow_trunc(static_cast<unsigned long>(expo < 0 ? -expo : expo))).truncated(N);
    }
    out.series = out.integral() ? acc.shifted(out.twenty_fourths / 24) : acc;
    return out;
}

LaurentSeries schwarzian_q(const LaurentSeries& f) {
    LaurentSeries d1 = f.qderiv();
    if (d1.is_zero()) throw SeriesError("schwarzian: derivative has no leading term");
    LaurentSeries d2 = d1.qderiv();
    LaurentSeries d3 = d2.qderiv();
    LaurentSeries num = Rational(2) * (d1 * d3) - Rational(3) * (d2 * d2);
    LaurentSeries den = Rational(2) * (d1 * d1);
    if (num.exact() && !den.exact()) num = num.truncated(den.order());
    if (den.exact() && !num.exact()) den = den.truncated(num.order());
    return num / den;
}

bool quad_form_membership(long n, QMode mode) {
    if (n < 1) throw PipelineError("quad_form_membership needs n >= 1");
    if (mode == QMode::form) {
        long r = static_cast<long>(std::ceil(std::sqrt(2.0 * static_cast<double>(n))));
        for (long x = -r; x <= r; ++x)
            for (long y = -r; y <= r; ++y)
                if (x * x + x * y + y * y == n) return false;
        return true;
    }
    long s = static_cast<long>(std::lround(std::sqrt(static_cast<double>(n))));
    bool square = s * s == n;
    return !square && divisor_power_sum(n, 1) % 3 == 0;
}

Integer d4d4_theta(long n) {
    if (n < 0) throw PipelineError("d4d4_theta needs n >= 0");
    if (n > 512) throw PipelineError("d4d4_theta: enumeration budget exceeded");
    long norm = 2 * n;
    // r_{D4}(k) for k <= norm, D4 = {x in Z^4 : sum x_i even}
    std::vector<Integer> r(static_cast<size_t>(norm) + 1, Integer(0));
    long rad = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(norm))));
    for (long a = -rad; a <= rad; ++a)
        for (long b = -rad; b <= rad; ++b) {
            long ab = a * a + b * b;
            if (ab > norm) continue;
            for (long c = -rad; c <= rad; ++c) {
                long abc = ab + c * c;
                if (abc > norm) continue;
                for (long d = -rad; d <= rad; ++d) {
                    long k = abc + d * d;
                    if (k <= norm && ((a + b + c + d) & 1L) == 0)
                        r[static_cast<size_t>(k)] += 1;
                }
            }
        }
    Integer total(0);
    for (long k = 0; k <= norm; ++k) total += r[static_cast<size_t>(k)] * r[static_cast<size_t>(norm - k)];
    return total;
}

LaurentSeries mt4a_series(long N) {
    if (N < 1) throw PipelineError("mt4a_series: N must be positive");
    EtaQuotientResult f = eta_quotient_series({{{1, 8}, {4, -8}}}, N + 2);
    if (!f.integral() || f.series.offset() != -1)
        throw PipelineError("mt4a_series: unexpected eta-quotient shape");
    LaurentSeries t = f.series + Rational(256) * div_to(LaurentSeries::constant(1), f.series, N) +
                      LaurentSeries::constant(32);
    return t.truncated(N);
}

AnchoredInteger mt4a_reference(long n, const Mt4aProvider& derived) {
    if (n < -1) throw PipelineError("mt4a_reference: index starts at -1");
    static const long kPaper[] = {1, 24, 276, 2048}; // a(-1)..a(2)
    if (n <= 2) return {Integer(kPaper[n + 1]), "paper"};
    if (!derived)
        throw PipelineError("mt4a_reference: values beyond the printed anchors need a derived-value provider");
    return {derived(n), "derived"};
}

} // namespace hecke
