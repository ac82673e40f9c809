#include "hecke/interp.hpp"

#include <algorithm>

#include "hecke/oracles.hpp"

namespace hecke {

namespace {

bool is_prime_small(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long ord_of(Integer v, unsigned long p) {
    long k = 0;
    while (v != 0 && mpz_divisible_ui_p(v.get_mpz_t(), p)) {
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
        ++k;
    }
    return k;
}

// Peel the full multiplicity of `factor` out of p; returns the multiplicity.
long peel_factor(RationalPolynomial& p, const RationalPolynomial& factor) {
    long k = 0;
    RationalPolynomial q;
    while (!p.is_zero() && factor.divides_into(p, q)) {
        p = q;
        ++k;
    }
    return k;
}

struct FamilyPattern {
    long min_n;
    long expected_power;   // exponent of x
    // (factor, expected multiplicity); multiplicity -1 = conditional (x-6)
    std::vector<std::pair<RationalPolynomial, long>> factors;
    long core_degree;
    int scalar_sign;       // 0 = unchecked
    bool expect_parity;    // even core with nonzero even coefficients
    bool monic_core_claim; // clause states a monic core (vs integer b_n/d_n)
};

RationalPolynomial lin(long a, long b) { // a*x + b
    return RationalPolynomial({Rational(b), Rational(a)});
}

FamilyPattern family_pattern(FormKind family, long n) {
    switch (family) {
        case FormKind::LittleJ:
            return {2, n + 1, {{lin(1, -2), 1}, {lin(1, 2), 1}}, 2 * n, 0, true, true};
        case FormKind::H4: {
            bool inQ = quad_form_membership(n, QMode::form);
            std::vector<std::pair<RationalPolynomial, long>> f{{lin(1, -2), 1}, {lin(1, 2), 1}};
            f.push_back({lin(1, -6), inQ ? 1 : 0});
            return {3, n, std::move(f), 2 * n - 3 - (inQ ? 1 : 0), -((n % 2) ? -1 : 1), false, false};
        }
        case FormKind::H6:
            return {3, n + 1, {{lin(1, -2), 1}, {lin(3, -2), 1}}, 2 * n - 3,
                    (n % 2) ? -1 : 1, false, false};
        case FormKind::DeltaStar:
            return {2, n - 1, {{lin(1, -2), 2}}, 2 * n - 4, 0, false, true};
        case FormKind::DeltaDagger:
            // the clause prints (x-2)^2 but the data carry multiplicity 1;
            // expecting 2 here makes the mismatch a recorded violation
            return {4, n, {{lin(1, -2), 2}}, 2 * n - 1, 0, false, true};
        case FormKind::DeltaDiamond:
            return {3, n - 1, {{lin(1, -2), 1}}, 2 * n - 3, 0, false, true};
        default:
            throw PipelineError("extract_structure: no structural clause for this family");
    }
}

} // namespace

CoefficientTable build_table(FormKind family, long n, long m_lo, long count,
                             SeriesStore* store) {
    if (m_lo < 3) throw PipelineError("build_table: m starts at 3");
    if (count < 1) throw PipelineError("build_table: need at least one sample");
    long N = std::max<long>(n + 1, 1);
    CoefficientTable t{family, n, {}};
    t.samples.reserve(static_cast<size_t>(count));
    for (long m = m_lo; m < m_lo + count; ++m) {
        FormSeries f = form_series(family, m, N, store);
        t.samples.emplace_back(m, f.series.coefficient(n));
    }
    return t;
}

RationalPolynomial newton_interpolate(const CoefficientTable& table, long guard) {
    const auto& s = table.samples;
    if (s.empty()) throw PipelineError("newton_interpolate: empty sample table");
    if (guard < 0) throw PipelineError("newton_interpolate: guard must be nonnegative");
    long count = static_cast<long>(s.size());
    if (count - guard < 1) throw PipelineError("newton_interpolate: no samples left after guard");
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i].first < 3) throw PipelineError("newton_interpolate: nodes must be >= 3");
        if (i > 0 && s[i].first != s[i - 1].first + 1)
            throw PipelineError("newton_interpolate: nodes must be consecutive integers");
    }

    // Forward differences at unit steps over the full table; stop at the
    // first identically-zero row, whose index k pins the degree at k - 1
    // (the row below a zero row is zero too, so k is exact).  The guard
    // samples participate in the vanishing test but never contribute a
    // coefficient: those come from the first k row heads only.
    std::vector<Rational> row;
    row.reserve(static_cast<size_t>(count));
    for (const auto& [m, v] : s) row.push_back(v);
    std::vector<Rational> lead; // row heads: the Newton coefficients
    long zero_row = -1;
    for (long k = 0; k < count; ++k) {
        bool all_zero = true;
        for (const Rational& v : row)
            if (v != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) {
            zero_row = k;
            break;
        }
        lead.push_back(row.front());
        for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        row.pop_back();
    }
    if (zero_row < 0)
        throw NotPolynomialError("not polynomial within budget: forward differences never vanish");
    if (zero_row + guard > count)
        throw NotPolynomialError(
            "not polynomial within budget: detected degree leaves no guard margin");

    // P(x) = sum lead[k] * binom(x - m0, k)
    Rational m0(s.front().first);
    RationalPolynomial poly;
    RationalPolynomial basis = RationalPolynomial::constant(1);
    for (size_t k = 0; k < lead.size(); ++k) {
        if (k > 0)
            basis = basis * RationalPolynomial({(-m0 - Rational(static_cast<long>(k) - 1)), 1}) *
                    Rational(1, static_cast<long>(k));
        poly = poly + basis * lead[k];
    }

    // exact verification on every sample, including the withheld guard
    for (const auto& [m, v] : s)
        if (poly.eval(Rational(m)) != v)
            throw NotPolynomialError(
                "not polynomial within budget: withheld sample mismatch at m=" + std::to_string(m));
    return poly;
}

RationalPolynomial interpolate_family(FormKind family, long n, long guard, SeriesStore* store) {
    long budget = 3 * n + 8;
    if (budget < 2) budget = 2;
    // budget+2 samples see the zero row for any degree <= budget+1; the
    // explicit degree check below rejects whatever slips past the budget
    long count = budget + 2 + guard;
    CoefficientTable t = build_table(family, n, 3, count, store);
    RationalPolynomial p = newton_interpolate(t, guard);
    if (p.degree() > budget)
        throw NotPolynomialError("not polynomial within budget: degree " +
                                 std::to_string(p.degree()) + " exceeds budget " +
                                 std::to_string(budget));
    return p;
}

std::string irred_status_name(IrredStatus s) {
    switch (s) {
        case IrredStatus::certified: return "certified";
        case IrredStatus::probable: return "probable";
        case IrredStatus::reducible: return "reducible";
        case IrredStatus::unknown: return "unknown";
    }
    throw PipelineError("unknown irreducibility status");
}

std::vector<std::uint64_t> default_probe_primes() {
    return {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
}

IrredProbe irreducibility_probe(const RationalPolynomial& p,
                                const std::vector<std::uint64_t>& primes) {
    IrredProbe out;
    if (p.degree() <= 0) {
        out.status = IrredStatus::unknown;
        out.evidence.push_back("degree below 1: irreducibility vacuous");
        return out;
    }
    if (p.degree() == 1) {
        out.status = IrredStatus::certified;
        out.witness = "linear";
        return out;
    }

    // primitive integer form
    Integer D = p.denominator_lcm();
    RationalPolynomial ip = p * Rational(D);
    Integer c = ip.integer_content();
    if (c != 0) ip = ip * Rational(Integer(1), c);

    // rational-root scan with small denominators dividing the leading term;
    // ordered by |numerator| with positive first so the witness is stable
    Integer lc_i(ip.leading().get_num());
    for (long den = 1; den <= 6; ++den) {
        if (!mpz_divisible_ui_p(lc_i.get_mpz_t(), static_cast<unsigned long>(den))) continue;
        for (long mag = 0; mag <= 60; ++mag) {
            for (long num : {mag, -mag}) {
                Rational r(num, den);
                r.canonicalize();
                if (r.get_den() != den) continue;
                if (ip.eval(r) == 0) {
                    out.status = IrredStatus::reducible;
                    out.witness = RationalPolynomial({-r, Rational(1)}).to_string();
                    return out;
                }
                if (mag == 0) break;
            }
        }
    }

    for (std::uint64_t q : primes) {
        auto redopt = gfp::reduce(ip, q);
        if (!redopt) continue; // leading coefficient vanished: degree dropped
        gfp::Poly f = *redopt;
        // distinct-degree split needs a squarefree reduction
        gfp::Poly g = gfp::gcd(f, gfp::derivative(f, q), q);
        if (g.size() > 1) {
            out.evidence.push_back("mod " + std::to_string(q) + ": not squarefree");
            continue;
        }
        std::vector<std::pair<long, long>> pattern; // (degree, count)
        gfp::Poly rem = f;
        {
            std::uint64_t inv = gfp::invmod(rem.back(), q);
            for (auto& x : rem) x = x * inv % q;
        }
        gfp::Poly h{0, 1}; // x
        long d = 0;
        while (static_cast<long>(rem.size()) - 1 > 0) {
            ++d;
            if (2 * d > static_cast<long>(rem.size()) - 1) {
                pattern.emplace_back(static_cast<long>(rem.size()) - 1, 1);
                break;
            }
            h = gfp::powmod(h, Integer(static_cast<long>(q)), rem, q);
            gfp::Poly hx = h;
            // h - x
            if (hx.size() < 2) hx.resize(2, 0);
            hx[1] = (hx[1] + q - 1) % q;
            gfp::trim(hx);
            gfp::Poly gg = gfp::gcd(rem, hx, q);
            if (gg.size() > 1) {
                long deg = static_cast<long>(gg.size()) - 1;
                pattern.emplace_back(d, deg / d);
                rem = gfp::divexact(rem, gg, q);
            }
        }
        std::string ev = "mod " + std::to_string(q) + ": degrees";
        for (auto& [deg, cnt] : pattern)
            for (long i = 0; i < cnt; ++i) ev += " " + std::to_string(deg);
        out.evidence.push_back(ev);
        if (pattern.size() == 1 && pattern[0].first == p.degree() && pattern[0].second == 1) {
            out.status = IrredStatus::certified;
            out.witness = "irreducible mod " + std::to_string(q);
            return out;
        }
    }
    out.status = IrredStatus::probable;
    return out;
}

RationalPolynomial FactoredStructure::reconstruct() const {
    RationalPolynomial r = core * scalar;
    r = r * RationalPolynomial::monomial(1, static_cast<size_t>(monomial_power));
    for (const auto& [f, k] : structural_factors)
        for (long i = 0; i < k; ++i) r = r * f;
    return r;
}

FactoredStructure extract_structure(FormKind family, long n, const RationalPolynomial& p) {
    FamilyPattern pat = family_pattern(family, n);
    if (n < pat.min_n)
        throw PipelineError("extract_structure: n below the clause range for this family");
    if (p.is_zero()) throw PipelineError("extract_structure: zero polynomial");

    FactoredStructure fs;
    fs.family = family;
    fs.n = n;

    RationalPolynomial rest = p;

    // x-power first
    long xmul = peel_factor(rest, RationalPolynomial::x());
    fs.monomial_power = xmul;
    if (xmul != pat.expected_power)
        fs.violations.push_back("factor x: expected multiplicity " +
                                std::to_string(pat.expected_power) + ", found " +
                                std::to_string(xmul));

    // then the linear factors at their actual multiplicities
    for (const auto& [factor, expected] : pat.factors) {
        long mult = peel_factor(rest, factor);
        if (mult > 0) fs.structural_factors.emplace_back(factor, mult);
        if (expected >= 0 && mult != expected)
            fs.violations.push_back("factor " + factor.to_string() + ": expected multiplicity " +
                                    std::to_string(expected) + ", found " + std::to_string(mult));
    }

    fs.scalar = rest.leading();
    fs.core = rest.monic();

    if (fs.core.degree() != pat.core_degree)
        fs.violations.push_back("core degree: expected " + std::to_string(pat.core_degree) +
                                ", found " + std::to_string(fs.core.degree()));
    if (pat.scalar_sign != 0 && sgn(fs.scalar) != pat.scalar_sign)
        fs.violations.push_back(std::string("scalar sign: expected ") +
                                (pat.scalar_sign > 0 ? "+" : "-") + ", found " +
                                (sgn(fs.scalar) > 0 ? "+" : "-"));

    fs.parity_even = fs.core.even_part_only();
    if (pat.expect_parity) {
        if (!fs.parity_even)
            fs.violations.push_back("parity: an odd-degree coefficient of the core is nonzero");
        for (long k = 0; k <= fs.core.degree(); k += 2)
            if (fs.core.coefficients()[static_cast<size_t>(k)] == 0)
                fs.violations.push_back("parity: even coefficient x^" + std::to_string(k) +
                                        " of the core vanishes");
    }

    fs.core_irreducible = irreducibility_probe(fs.core).status;

    if (!(fs.reconstruct() == p))
        throw PipelineError("extract_structure: reconstruction invariant failed");
    return fs;
}

std::map<long, long> modp_linear_profile(const RationalPolynomial& p, std::uint64_t q) {
    if (!is_prime_small(q)) throw PipelineError("modp_linear_profile: modulus must be prime");
    auto red = gfp::reduce_any(p, q);
    if (!red)
        throw PipelineError("modp_linear_profile: denominator divisible by modulus " +
                            std::to_string(q));
    std::map<long, long> out;
    for (std::uint64_t r = 0; r < q; ++r) {
        long mult = gfp::multiplicity_at(*red, r, q);
        if (mult > 0) out[static_cast<long>(r)] = mult;
    }
    return out;
}

namespace {

// ord_3 strip, then required primes in [5, p] at least once each, then
// nothing else may remain.
void check_support(Integer v, long p, long expect_ord3, const std::string& label,
                   std::vector<std::string>& violations) {
    if (sgn(v) <= 0) {
        violations.push_back(label + ": expected a positive integer");
        return;
    }
    long o3 = ord_of(v, 3);
    if (o3 != expect_ord3)
        violations.push_back(label + ": ord_3 expected " + std::to_string(expect_ord3) +
                             ", found " + std::to_string(o3));
    Integer rest = v;
    for (long i = 0; i < o3; ++i) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 3);
    for (long r = 5; r <= p; ++r) {
        if (!is_prime_small(static_cast<std::uint64_t>(r))) continue;
        long k = ord_of(rest, static_cast<unsigned long>(r));
        if (k == 0)
            violations.push_back(label + ": prime " + std::to_string(r) +
                                 " in [5, p] does not divide it");
        for (long i = 0; i < k; ++i)
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(r));
    }
    if (rest != 1)
        violations.push_back(label + ": leftover factor " + rest.get_str() +
                             " outside {3} union primes in [5, p]");
}

} // namespace

ScalarProfile leading_scalar_profile(const FactoredStructure& fs, long p, FormKind family) {
    if (family != FormKind::H4 && family != FormKind::H6)
        throw PipelineError("leading_scalar_profile: clauses exist for H4 and H6 only");
    if (!is_prime_small(static_cast<std::uint64_t>(p)))
        throw PipelineError("leading_scalar_profile: index must be prime");

    ScalarProfile out;
    out.p = p;
    out.s = ord_of(Integer(p + 1), 2);
    out.t = ord_of(Integer(p + 1), 3);

    // primitive integer core: l * core is integral and content-free
    Integer D = fs.core.denominator_lcm();
    RationalPolynomial ip = fs.core * Rational(D);
    Integer c = ip.integer_content();
    Integer l;
    mpz_divexact(l.get_mpz_t(), D.get_mpz_t(), c.get_mpz_t());
    out.l = l;
    out.rbar = fs.scalar / Rational(l);
    Rational a = abs(out.rbar);
    out.nu = Integer(a.get_num());
    out.delta = Integer(a.get_den());

    check_support(out.l, p, p - 1, "l_p", out.violations);

    long base = (family == FormKind::H4) ? 16 : 8;
    Integer nu_expect(base);
    for (long i = 0; i < out.s; ++i) nu_expect *= 2;
    if (p != 2 && out.nu != nu_expect)
        out.violations.push_back("nu_p: expected " + nu_expect.get_str() + ", found " +
                                 out.nu.get_str());

    check_support(out.delta, p, p - 1 - out.t, "delta_p", out.violations);
    return out;
}

bool scalar_divisibility_chain(const std::vector<ScalarProfile>& profiles,
                               std::vector<std::string>& violations) {
    bool ok = true;
    for (size_t i = 0; i < profiles.size(); ++i)
        for (size_t j = i + 1; j < profiles.size(); ++j) {
            const ScalarProfile *a = &profiles[i], *b = &profiles[j];
            if (a->p == b->p) continue;
            if (a->p > b->p) std::swap(a, b);
            if (!mpz_divisible_p(b->l.get_mpz_t(), a->l.get_mpz_t())) {
                violations.push_back("l_" + std::to_string(a->p) + " does not divide l_" +
                                     std::to_string(b->p));
                ok = false;
            }
        }
    return ok;
}

} // namespace hecke
