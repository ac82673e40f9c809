#include "hecke/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hecke/errors.hpp"
#include "hecke/interp.hpp"
#include "hecke/oracles.hpp"
#include "hecke/roots.hpp"

namespace hecke {

namespace {

using json = nlohmann::json;

constexpr const char* kPass = "pass";
constexpr const char* kFail = "fail";
constexpr const char* kDiscrepancy = "discrepancy";
constexpr const char* kInconclusive = "inconclusive";

int status_rank(const std::string& s) {
    if (s == kPass) return 0;
    if (s == kInconclusive) return 1;
    if (s == kDiscrepancy) return 2;
    return 3; // fail
}

void escalate(ConjectureReport& r, const char* s) {
    if (status_rank(s) > status_rank(r.status)) r.status = s;
}

void ev(ConjectureReport& r, std::string value, const char* provenance) {
    r.evidence.push_back({std::move(value), provenance});
}

std::string rat_str(const Rational& v) {
    std::string s = v.get_num().get_str();
    if (v.get_den() != 1) s += "/" + v.get_den().get_str();
    return s;
}

std::string list_str(const std::vector<long>& xs, size_t cap = 12) {
    std::string s = "{";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i == cap) {
            s += ", ... (" + std::to_string(xs.size()) + " total)";
            break;
        }
        if (i) s += ", ";
        s += std::to_string(xs[i]);
    }
    return s + "}";
}

bool is_prime(long n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(Integer(n).get_mpz_t(), 40) != 0;
}

std::vector<long> primes_in(long lo, long hi) {
    std::vector<long> out;
    for (long n = std::max(lo, 2L); n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

// a*x + b
RationalPolynomial lin(long a, long b) {
    return RationalPolynomial({Rational(b), Rational(a)});
}

RationalPolynomial from_coeffs(std::vector<Rational> cs) {
    return RationalPolynomial(std::move(cs));
}

// Content-free integer model: same roots mod q, no denominators to vanish.
RationalPolynomial primitive_model(const RationalPolynomial& p) {
    Integer d = p.denominator_lcm();
    RationalPolynomial ip = p * Rational(d);
    Integer c = ip.integer_content();
    if (c != 0) ip = ip * Rational(Integer(1), c);
    return ip;
}

// Shared state for one verification run: interpolants and factored
// structures are reused across clauses and conjectures.
struct Ctx {
    VerifyParams req;
    SeriesStore owned;
    SeriesStore* store;
    std::map<std::pair<FormKind, long>, RationalPolynomial> polys;
    std::map<std::pair<FormKind, long>, FactoredStructure> structures;

    Ctx(const VerifyParams& p, SeriesStore* s) : req(p), store(s ? s : &owned) {
        if (p.n_lo > p.n_hi) throw PipelineError("verify: empty n range");
        if (p.m_lo > p.m_hi) throw PipelineError("verify: empty m range");
        if (p.m_lo < 3) throw PipelineError("verify: m starts at 3");
    }

    const RationalPolynomial& poly(FormKind f, long n) {
        auto key = std::make_pair(f, n);
        auto it = polys.find(key);
        if (it == polys.end()) it = polys.emplace(key, interpolate_family(f, n, 5, store)).first;
        return it->second;
    }

    const FactoredStructure& structure(FormKind f, long n) {
        auto key = std::make_pair(f, n);
        auto it = structures.find(key);
        if (it == structures.end()) it = structures.emplace(key, extract_structure(f, n, poly(f, n))).first;
        return it->second;
    }
};

ConjectureReport base(const Ctx& c, int id, std::string clause, FormKind family) {
    ConjectureReport r;
    r.conjecture = id;
    r.clause = std::move(clause);
    r.status = kPass;
    r.family = form_kind_name(family);
    r.params = c.req;
    return r;
}

ConjectureReport base(const Ctx& c, int id, std::string clause) {
    ConjectureReport r;
    r.conjecture = id;
    r.clause = std::move(clause);
    r.status = kPass;
    r.params = c.req;
    return r;
}

void mark_empty_range(ConjectureReport& r, const std::string& what) {
    r.status = kInconclusive;
    ev(r, "requested ranges leave no " + what + " to test", "trivial");
}

// Generic existence clause: the interpolant is recovered with exact guard
// verification for every index in range, or the falsification is recorded.
ConjectureReport existence_record(Ctx& c, int id, const std::string& clause, FormKind family,
                                  long n_lo_min) {
    ConjectureReport r = base(c, id, clause, family);
    long lo = std::max(c.req.n_lo, n_lo_min), hi = c.req.n_hi;
    r.params.n_lo = lo;
    r.params.n_hi = hi;
    r.series_order = hi + 1;
    if (lo > hi) {
        mark_empty_range(r, "polynomial index");
        return r;
    }
    for (long n = lo; n <= hi; ++n) {
        try {
            c.poly(family, n);
        } catch (const NotPolynomialError& e) {
            escalate(r, kFail);
            ev(r, "n = " + std::to_string(n) + ": " + e.what(), "derived");
            return r;
        }
    }
    ev(r,
       "coefficient sequence n = " + std::to_string(lo) + ".." + std::to_string(hi) +
           " interpolated exactly, each with 5 withheld samples verified",
       "derived");
    return r;
}

// ---------------------------------------------------------------- conjecture 1

void conj1(Ctx& c, std::vector<ConjectureReport>& out) {
    const FormKind F = FormKind::LittleJ;

    out.push_back(existence_record(c, 1, "1: interpolating polynomial exists", F, -1));
    if (out.back().status == kFail) return; // every later clause builds on the interpolants

    { // printed A_{-1}, A_0, A_1
        ConjectureReport r = base(c, 1, "1: printed A_{-1}, A_0, A_1", F);
        r.params.n_lo = -1;
        r.params.n_hi = 1;
        r.series_order = 2;

        if (c.poly(F, -1) == from_coeffs({Rational(1)}))
            ev(r, "A_{-1} = 1", "derived");
        else {
            escalate(r, kFail);
            ev(r, "A_{-1} = " + c.poly(F, -1).to_string() + " instead of 1", "derived");
        }

        RationalPolynomial printed_a0 = from_coeffs({32, 0, 24}); // 24(x^2 + 4/3)
        const RationalPolynomial& a0 = c.poly(F, 0);
        ev(r, "A_0 as printed: 24(x^2 + 4/3)", "paper");
        if (a0 == printed_a0)
            ev(r, "A_0 matches the printed form", "derived");
        else if (a0 == printed_a0 * RationalPolynomial::x()) {
            escalate(r, kDiscrepancy);
            ev(r, "computed A_0 = " + a0.to_string() + " = x * 24(x^2 + 4/3): the printed form drops a factor x",
               "derived");
            ev(r,
               "cross-check at m = 3: alpha_0(3) = 744, the constant term of Klein's j; the printed "
                   "form gives 248, the computed form 744",
               "derived");
        } else {
            escalate(r, kFail);
            ev(r, "computed A_0 = " + a0.to_string() + " matches neither reading", "derived");
        }

        RationalPolynomial printed_a1 =
            Rational(276) * RationalPolynomial::monomial(1, 2) *
            from_coeffs({Rational(-16, 23), Rational(0), Rational(-8, 69), Rational(0), Rational(1)});
        ev(r, "A_1 as printed: 276x^2(x^4 - 8x^2/69 - 16/23)", "paper");
        if (c.poly(F, 1) == printed_a1)
            ev(r, "A_1 matches: " + c.poly(F, 1).to_string(), "derived");
        else {
            escalate(r, kFail);
            ev(r, "computed A_1 = " + c.poly(F, 1).to_string() + " differs from the printed form",
               "derived");
        }
        out.push_back(std::move(r));
    }

    { // clause 2: factored structure, MT4A scalars
        ConjectureReport r = base(c, 1, "2: factored structure and 4A scalars", F);
        long lo = std::max(c.req.n_lo, 2L), hi = c.req.n_hi;
        r.params.n_lo = lo;
        r.params.n_hi = hi;
        r.series_order = hi + 1;
        if (lo > hi) {
            mark_empty_range(r, "index n > 1");
        } else {
            LaurentSeries mt = mt4a_series(hi + 2);
            Mt4aProvider provider = [&mt](long k) {
                const Rational& v = mt.coefficient(k);
                if (v.get_den() != 1) throw PipelineError("4A series coefficient not integral");
                return Integer(v.get_num());
            };
            std::vector<long> certified, probable;
            long anchored = 0;
            bool ok = true;
            for (long n = lo; n <= hi && ok; ++n) {
                const FactoredStructure& fs = c.structure(F, n);
                for (const auto& v : fs.violations) {
                    escalate(r, kFail);
                    ev(r, "A_" + std::to_string(n) + ": " + v, "derived");
                    ok = false;
                }
                if (!ok) break;
                AnchoredInteger ref = mt4a_reference(n, provider);
                if (fs.scalar != Rational(ref.value)) {
                    escalate(r, kFail);
                    ev(r,
                       "a-bar_" + std::to_string(n) + " = " + rat_str(fs.scalar) +
                           " but the 4A coefficient is " + ref.value.get_str(),
                       ref.provenance.c_str());
                    break;
                }
                if (ref.provenance == "paper") ++anchored;
                if (fs.core_irreducible == IrredStatus::reducible) {
                    escalate(r, kFail);
                    IrredProbe probe = irreducibility_probe(fs.core);
                    ev(r, "a_" + std::to_string(n) + " is reducible: factor " + probe.witness, "derived");
                    break;
                }
                (fs.core_irreducible == IrredStatus::certified ? certified : probable).push_back(n);
            }
            if (r.status == std::string(kPass)) {
                ev(r,
                   "A_n = a-bar_n (x-2)(x+2) x^(n+1) a_n with a_n monic of degree 2n, even powers only, "
                       "for n = " + std::to_string(lo) + ".." + std::to_string(hi),
                   "derived");
                ev(r,
                   "a-bar_n equals the McKay-Thompson 4A coefficient for every n in range (" +
                       std::to_string(anchored) + " printed anchor(s), the rest from the eta-quotient "
                       "model f + 256/f + 32, f = eta(z)^8/eta(4z)^8)",
                   anchored ? "paper" : "derived");
                if (!certified.empty())
                    ev(r, "a_n certified irreducible by a mod-p irreducibility witness for n in " +
                              list_str(certified),
                       "derived");
                if (!probable.empty())
                    ev(r, "a_n survives all rational-root and mod-p splitting probes (not certified) "
                          "for n in " + list_str(probable),
                       "derived");
            }
        }
        out.push_back(std::move(r));
    }

    { // clause 3(i)
        ConjectureReport r = base(c, 1, "3(i): x+2 and x+n-2 divide A_n mod n", F);
        std::vector<long> ps = primes_in(std::max(c.req.n_lo, 3L), c.req.n_hi);
        if (ps.empty()) {
            mark_empty_range(r, "prime index n > 2");
            out.push_back(std::move(r));
        } else {
            r.params.n_lo = ps.front();
            r.params.n_hi = ps.back();
            r.series_order = ps.back() + 1;
            for (long n : ps) {
                auto profile =
                    modp_linear_profile(primitive_model(c.poly(F, n)), static_cast<std::uint64_t>(n));
                long want_a = (n - 2) % n; // root of x+2 mod n
                long want_b = 2 % n;       // root of x+n-2 mod n
                if (!profile.count(want_a) || !profile.count(want_b)) {
                    escalate(r, kFail);
                    ev(r, "n = " + std::to_string(n) + ": missing linear factor mod n (profile lacks residue " +
                              std::to_string(profile.count(want_a) ? want_b : want_a) + ")",
                       "derived");
                }
            }
            if (r.status == std::string(kPass))
                ev(r, "both factors divide A_n mod n for prime n in " + list_str(ps), "derived");
            out.push_back(std::move(r));
        }
    }

    { // clause 3(ii)
        ConjectureReport r = base(c, 1, "3(ii): mod-n multiplicity of x+j is 0 or 2 for j > 1", F);
        std::vector<long> ps = primes_in(std::max(c.req.n_lo, 11L), c.req.n_hi);
        if (ps.empty()) {
            mark_empty_range(r, "prime index n > 7");
        } else {
            r.params.n_lo = ps.front();
            r.params.n_hi = ps.back();
            r.series_order = ps.back() + 1;
            for (long n : ps) {
                auto profile =
                    modp_linear_profile(primitive_model(c.poly(F, n)), static_cast<std::uint64_t>(n));
                for (const auto& [res, mult] : profile) {
                    if (res == 0 || res == n - 1) continue; // j = n and j = 1 are outside the claim
                    if (mult != 2) {
                        escalate(r, kFail);
                        ev(r,
                           "n = " + std::to_string(n) + ": factor x + " + std::to_string(n - res) +
                               " appears with multiplicity " + std::to_string(mult),
                           "derived");
                    }
                }
            }
            if (r.status == std::string(kPass))
                ev(r, "all linear factors x+j with 1 < j < n carry multiplicity exactly 0 or 2 mod n "
                      "for n in " + list_str(ps),
                   "derived");
        }
        out.push_back(std::move(r));
    }

    { // clause 4
        ConjectureReport r = base(c, 1, "4: Galois group of a_n has order 2^n n!", F);
        r.status = kInconclusive;
        ev(r, "Galois group computation is outside the scope of this engine", "trivial");
        ev(r, "the necessary condition (irreducibility of a_n) is checked under clause 2", "derived");
        out.push_back(std::move(r));
    }
}

// ---------------------------------------------------------------- conjecture 2

void conj2(Ctx& c, std::vector<ConjectureReport>& out) {
    const FormKind F = FormKind::LittleJ;
    ConjectureReport r = base(c, 2, "alpha_n(m) != 0 for n >= -1, m >= 3", F);
    long lo = std::max(c.req.n_lo, -1L), hi = c.req.n_hi;
    r.params.n_lo = lo;
    r.params.n_hi = hi;
    r.series_order = hi + 1;
    if (lo > hi) {
        mark_empty_range(r, "coefficient index");
        out.push_back(std::move(r));
        return;
    }
    long checked = 0;
    for (long n = lo; n <= hi; ++n) {
        const RationalPolynomial& p = c.poly(F, n);
        for (long m = c.req.m_lo; m <= c.req.m_hi; ++m) {
            ++checked;
            if (p.eval(Rational(m)) == 0) {
                escalate(r, kFail);
                ev(r, "alpha_" + std::to_string(n) + "(" + std::to_string(m) + ") = 0", "derived");
            }
        }
    }
    if (r.status == std::string(kPass))
        ev(r,
           "A_n(m) != 0 at all " + std::to_string(checked) + " pairs (n, m) in [" +
               std::to_string(lo) + ", " + std::to_string(hi) + "] x [" + std::to_string(c.req.m_lo) +
               ", " + std::to_string(c.req.m_hi) + "] (values via the clause-1 interpolants)",
           "derived");
    out.push_back(std::move(r));
}

// ---------------------------------------------------------------- conjecture 3

void conj3(Ctx& c, std::vector<ConjectureReport>& out) {
    const FormKind F = FormKind::LittleJ;
    long lo = std::max(c.req.n_lo, 2L), hi = c.req.n_hi;

    std::map<long, GeometryReport> geo;
    std::map<long, RootSet> rsets;
    if (lo <= hi)
        for (long n = lo; n <= hi; ++n) {
            rsets.emplace(n, find_roots(c.structure(F, n).core));
            geo.emplace(n, bound_and_geometry_check(n, rsets.at(n)));
        }

    { // clause 1: bound
        ConjectureReport r = base(c, 3, "1: roots of a_n obey |rho| <= n / log n", F);
        r.params.n_lo = lo;
        r.params.n_hi = hi;
        r.series_order = hi + 1;
        if (lo > hi) {
            mark_empty_range(r, "index n > 1");
        } else {
            double worst = 0;
            long worst_n = lo;
            for (long n = lo; n <= hi; ++n) {
                const GeometryReport& g = geo.at(n);
                if (!g.bound_ok) {
                    escalate(r, kFail);
                    for (const auto& v : g.violations)
                        ev(r, "n = " + std::to_string(n) + ": " + v, "derived");
                }
                double margin = g.max_modulus / g.bound;
                if (margin > worst) {
                    worst = margin;
                    worst_n = n;
                }
            }
            if (r.status == std::string(kPass)) {
                std::ostringstream os;
                os << "largest |rho| / (n / log n) over the range is " << worst << " at n = " << worst_n;
                ev(r, os.str(), "derived");
            }
        }
        out.push_back(std::move(r));
    }

    { // clause 1, method: argument principle
        ConjectureReport r = base(c, 3, "1: argument-principle count inside the bound disk", F);
        r.params.n_lo = lo;
        r.params.n_hi = hi;
        r.series_order = hi + 1;
        if (lo > hi) {
            mark_empty_range(r, "index n > 1");
        } else {
            for (long n = lo; n <= hi; ++n) {
                const GeometryReport& g = geo.at(n);
                const RootSet& rs = rsets.at(n);
                long winding = winding_count(c.structure(F, n).core, {0.0, 0.0}, g.bound);
                long inside = 0;
                for (const auto& z : rs.roots)
                    if (std::abs(z) <= g.bound) ++inside;
                if (winding != inside || winding != rs.poly_degree) {
                    escalate(r, kFail);
                    ev(r,
                       "n = " + std::to_string(n) + ": winding " + std::to_string(winding) +
                           ", in-disk roots " + std::to_string(inside) + ", degree " +
                           std::to_string(rs.poly_degree),
                       "derived");
                }
            }
            if (r.status == std::string(kPass))
                ev(r,
                   "contour integration around |z| = n / log n counts all 2n roots of a_n for n = " +
                       std::to_string(lo) + ".." + std::to_string(hi),
                   "derived");
        }
        out.push_back(std::move(r));
    }

    { // clause 2
        ConjectureReport r = base(c, 3, "2: alpha_n(m) != 0 for m > max(n / log n, 2)", F);
        long nlo2 = std::max(c.req.n_lo, 0L);
        r.params.n_lo = nlo2;
        r.params.n_hi = hi;
        r.series_order = hi + 1;
        long checked = 0;
        for (long n = nlo2; n <= hi; ++n) {
            if (n == 1) continue; // n / log n is unbounded at n = 1: the claim is vacuous
            double bound = n == 0 ? 2.0 : std::max(static_cast<double>(n) / std::log(n), 2.0);
            long m_start = std::max(static_cast<long>(std::floor(bound)) + 1, c.req.m_lo);
            const RationalPolynomial& p = c.poly(F, n);
            for (long m = m_start; m <= c.req.m_hi; ++m) {
                ++checked;
                if (p.eval(Rational(m)) == 0) {
                    escalate(r, kFail);
                    ev(r, "alpha_" + std::to_string(n) + "(" + std::to_string(m) + ") = 0 beyond the bound",
                       "derived");
                }
            }
        }
        if (r.status == std::string(kPass))
            ev(r, "nonzero at all " + std::to_string(checked) + " admissible pairs", "derived");
        out.push_back(std::move(r));
    }

    { // clause 3: imaginary pair
        ConjectureReport r = base(c, 3, "3: exactly two nonzero imaginary roots", F);
        r.params.n_lo = lo;
        r.params.n_hi = hi;
        r.series_order = hi + 1;
        if (lo > hi) {
            mark_empty_range(r, "index n > 1");
        } else {
            for (long n = lo; n <= hi; ++n) {
                const GeometryReport& g = geo.at(n);
                if (!g.imaginary_pair_ok) {
                    escalate(r, kFail);
                    ev(r,
                       "n = " + std::to_string(n) + ": " + std::to_string(g.imaginary_axis) +
                           " roots on the imaginary axis",
                       "derived");
                }
            }
            if (r.status == std::string(kPass))
                ev(r, "each a_n carries exactly one conjugate pair on the imaginary axis", "derived");
        }
        out.push_back(std::move(r));
    }

    { // clause 3: the curve P_n
        ConjectureReport r = base(c, 3, "3: roots lie on a closed curve P_n", F);
        r.status = kInconclusive;
        ev(r, "no defining equation for P_n is given, so membership cannot be decided", "trivial");
        if (lo <= hi) {
            long real = 0, imag = 0, off = 0;
            for (long n = lo; n <= hi; ++n) {
                real += geo.at(n).real_axis;
                imag += geo.at(n).imaginary_axis;
                off += geo.at(n).off_axis;
            }
            ev(r,
               "root census over n = " + std::to_string(lo) + ".." + std::to_string(hi) + ": " +
                   std::to_string(real) + " real, " + std::to_string(imag) + " imaginary, " +
                   std::to_string(off) + " off-axis; quadrant plots are available via the plot command",
               "derived");
        }
        out.push_back(std::move(r));
    }
}

// ---------------------------------------------------------------- conjecture 4

// Scalar-profile helper shared by conjectures 4 and 5.  Splits the recorded
// violations into the leading-coefficient clause (prefix "l_p") and the
// nu/delta clause, so each report blames its own clause.
struct ProfileSplit {
    std::vector<std::string> lead, nu_delta;
};

ProfileSplit split_profile_violations(const ScalarProfile& sp) {
    ProfileSplit out;
    for (const auto& v : sp.violations)
        (v.rfind("l_p", 0) == 0 ? out.lead : out.nu_delta).push_back(v);
    return out;
}

void conj4(Ctx& c, std::vector<ConjectureReport>& out) {
    const FormKind F = FormKind::H4;

    out.push_back(existence_record(c, 4, "1: interpolating polynomial exists", F, 0));
    if (out.back().status == kFail) return; // every later clause builds on the interpolants

    { // clause 2
        ConjectureReport r = base(c, 4, "2: B_0 = 1", F);
        r.params.n_lo = r.params.n_hi = 0;
        r.series_order = 1;
        if (c.poly(F, 0) == from_coeffs({Rational(1)}))
            ev(r, "B_0 = 1", "derived");
        else {
            escalate(r, kFail);
            ev(r, "B_0 = " + c.poly(F, 0).to_string(), "derived");
        }
        out.push_back(std::move(r));
    }

    { // clause 3
        ConjectureReport r = base(c, 4, "3: deg B_n = 3n - 1 for n >= 1", F);
        long lo = std::max(c.req.n_lo, 1L), hi = c.req.n_hi;
        r.params.n_lo = lo;
        r.params.n_hi = hi;
        r.series_order = hi + 1;
        if (lo > hi) {
            mark_empty_range(r, "index n >= 1");
        } else {
            for (long n = lo; n <= hi; ++n)
                if (c.poly(F, n).degree() != 3 * n - 1) {
                    escalate(r, kFail);
                    ev(r,
                       "deg B_" + std::to_string(n) + " = " + std::to_string(c.poly(F, n).degree()) +
                           " instead of " + std::to_string(3 * n - 1),
                       "derived");
                }
            if (r.status == std::string(kPass))
                ev(r, "degrees match 3n - 1 for n = " + std::to_string(lo) + ".." + std::to_string(hi),
                   "derived");
        }
        out.push_back(std::move(r));
    }

    { // clause 4
        ConjectureReport r = base(c, 4, "4: printed B_1", F);
        r.params.n_lo = r.params.n_hi = 1;
        r.series_order = 2;
        RationalPolynomial printed = Rational(16) * RationalPolynomial::x() * lin(1, 2);
        ev(r, "B_1 as printed: 16x(x+2)", "paper");
        if (c.poly(F, 1) == printed)
            ev(r, "B_1 matches: " + c.poly(F, 1).to_string(), "derived");
        else {
            escalate(r, kFail);
            ev(r, "computed B_1 = " + c.poly(F, 1).to_string(), "derived");
        }
        out.push_back(std::move(r));
    }

    { // clause 5
        ConjectureReport r = base(c, 4, "5: printed B_2", F);
        r.params.n_lo = r.params.n_hi = 2;
        r.series_order = 3;
        RationalPolynomial x = RationalPolynomial::x();
        RationalPolynomial printed = Rational(-16) * x * lin(1, -2) * lin(1, 2) * lin(1, 6);
        RationalPolynomial corrected = Rational(-16) * x * x * lin(1, -2) * lin(1, 2) * lin(1, -6);
        const RationalPolynomial& b2 = c.poly(F, 2);
        ev(r, "B_2 as printed: -16x(x-2)(x+2)(x+6)", "paper");
        if (b2 == printed)
            ev(r, "B_2 matches the printed form", "derived");
        else if (b2 == corrected) {
            escalate(r, kDiscrepancy);
            ev(r,
               "computed B_2 = " + b2.to_string() +
                   " = -16x^2(x-2)(x+2)(x-6): the printed form drops a factor x and flips (x-6) to (x+6)",
               "derived");
            ev(r,
               "the printed form has degree 4, contradicting clause 3's degree 3n-1 = 5; "
                   "the computed form is the clause-7 shape at n = 2 (2 lies in Q since sigma(2) = 3)",
               "derived");
            ev(r,
               "cross-check at m = 3: H_{4,3} = E_4, whose q^2 coefficient is 2160 = 240 sigma_3(2); "
                   "the computed form gives B_2(3) = 2160, the printed form -2160",
               "derived");
        } else {
            escalate(r, kFail);
            ev(r, "computed B_2 = " + b2.to_string() + " matches neither the printed form nor its corrected reading",
               "derived");
        }
        out.push_back(std::move(r));
    }

    // clauses 6 and 7: structure off and on the set Q
    long slo = std::max(c.req.n_lo, 3L), shi = c.req.n_hi;
    for (int on_q = 0; on_q <= 1; ++on_q) {
        ConjectureReport r = base(c, 4,
                                  on_q ? "7: B_n = (x^2-4)(x-6) x^n b-bar_n b_n on Q"
                                       : "6: B_n = (x^2-4) x^n b-bar_n b_n off Q",
                                  F);
        r.params.n_lo = slo;
        r.params.n_hi = shi;
        r.series_order = shi + 1;
        std::vector<long> tested;
        for (long n = slo; n <= shi; ++n) {
            if (quad_form_membership(n, QMode::form) != static_cast<bool>(on_q)) continue;
            tested.push_back(n);
            const FactoredStructure& fs = c.structure(F, n);
            for (const auto& v : fs.violations) {
                escalate(r, kFail);
                ev(r, "B_" + std::to_string(n) + ": " + v, "derived");
            }
            if (fs.core_irreducible == IrredStatus::reducible) {
                escalate(r, kFail);
                ev(r, "b_" + std::to_string(n) + " is reducible: factor " +
                          irreducibility_probe(fs.core).witness,
                   "derived");
            }
        }
        if (tested.empty())
            mark_empty_range(r, on_q ? "index n > 2 inside Q" : "index n > 2 outside Q");
        else if (r.status == std::string(kPass))
            ev(r,
               std::string("structure, sign -(-1)^n, and irreducibility hold for n in ") +
                   list_str(tested) + (on_q ? " (members of Q)" : " (not in Q)"),
               "derived");
        out.push_back(std::move(r));
    }

    { // clause 7 corollary: the vanishing criterion itself
        ConjectureReport r = base(c, 4, "7: beta_n(6) = 0 iff n in Q", F);
        long lo = std::max(c.req.n_lo, 1L), hi = c.req.n_hi;
        r.params.n_lo = lo;
        r.params.n_hi = hi;
        r.series_order = hi + 1;
        if (lo > hi) {
            mark_empty_range(r, "index n >= 1");
            out.push_back(std::move(r));
        } else {
            std::vector<long> members;
            for (long n = lo; n <= hi; ++n) {
                bool vanishes = c.poly(F, n).eval(Rational(6)) == 0;
                bool in_q = quad_form_membership(n, QMode::form);
                if (in_q) members.push_back(n);
                if (vanishes != in_q) {
                    escalate(r, kFail);
                    ev(r,
                       "n = " + std::to_string(n) + ": beta_n(6) " +
                           (vanishes ? "vanishes but n is not in Q" : "is nonzero but n is in Q"),
                       "derived");
                }
            }
            long cloitre_hi = std::max(hi, 100L);
            bool cloitre_ok = true;
            for (long n = 1; n <= cloitre_hi; ++n)
                if (quad_form_membership(n, QMode::form) != quad_form_membership(n, QMode::cloitre)) {
                    cloitre_ok = false;
                    escalate(r, kFail);
                    ev(r, "n = " + std::to_string(n) +
                              ": quadratic-form membership and the divisor-sum criterion disagree",
                       "derived");
                }
            if (r.status == std::string(kPass)) {
                ev(r, "Q within range: " + list_str(members), "derived");
                if (cloitre_ok)
                    ev(r,
                       "representability by x^2 + xy + y^2 agrees with the non-square, 3 | sigma(n) "
                           "criterion for n = 1.." + std::to_string(cloitre_hi),
                       "derived");
            }
            out.push_back(std::move(r));
        }
    }

    // clauses 8-10: scalar profiles at prime indices
    std::vector<long> ps = primes_in(std::max({c.req.n_lo, 3L}), c.req.n_hi);
    std::vector<ScalarProfile> profiles;
    for (long p : ps) profiles.push_back(leading_scalar_profile(c.structure(F, p), p, F));

    { // clause 8
        ConjectureReport r = base(c, 4, "8: l_p = 3^(p-1) x primes in [5, p]", F);
        if (ps.empty()) {
            mark_empty_range(r, "odd prime index");
        } else {
            r.params.n_lo = ps.front();
            r.params.n_hi = ps.back();
            r.series_order = ps.back() + 1;
            for (size_t i = 0; i < ps.size(); ++i) {
                ProfileSplit split = split_profile_violations(profiles[i]);
                if (split.lead.empty()) continue;
                if (ps[i] == 3 && split.lead.size() == 1 &&
                    split.lead[0] == "l_p: ord_3 expected 2, found 1") {
                    escalate(r, kDiscrepancy);
                    ev(r, "p = 3: l_3 = 3, not 3^2 = 9 as the clause requires", "derived");
                    ev(r,
                       "the product b-bar_3 l_3 = 64/3 is pinned by B_3 itself, and clause 10 forces the "
                           "primitive normalization nu_3/delta_3 = 64/9 (which checks out); clauses 8 and "
                           "10 cannot both hold at p = 3",
                       "derived");
                } else {
                    escalate(r, kFail);
                    for (const auto& v : split.lead)
                        ev(r, "p = " + std::to_string(ps[i]) + ": " + v, "derived");
                }
            }
            std::string sample;
            for (size_t i = 0; i < ps.size() && i < 3; ++i)
                sample += (i ? ", " : "") + std::string("l_") + std::to_string(ps[i]) + " = " +
                          profiles[i].l.get_str();
            ev(r, "computed leading coefficients: " + sample, "derived");
        }
        out.push_back(std::move(r));
    }

    { // clause 9
        ConjectureReport r = base(c, 4, "9: l_p divides l_q for primes p < q", F);
        if (ps.size() < 2) {
            mark_empty_range(r, "pair of odd primes");
        } else {
            r.params.n_lo = ps.front();
            r.params.n_hi = ps.back();
            r.series_order = ps.back() + 1;
            std::vector<std::string> violations;
            if (!scalar_divisibility_chain(profiles, violations)) {
                escalate(r, kFail);
                for (const auto& v : violations) ev(r, v, "derived");
            } else {
                ev(r, "divisibility holds across all prime pairs in " + list_str(ps), "derived");
            }
        }
        out.push_back(std::move(r));
    }

    { // clause 10
        ConjectureReport r = base(c, 4, "10: nu_p = 16 * 2^s, delta_p = 3^(p-1-t) x primes in [5, p]", F);
        r.series_order = ps.empty() ? 3 : ps.back() + 1;
        // p = 2 from B_2's clause-7 shape (2 lies in Q): scalar * x^2(x-2)(x+2)(x-6);
        // whatever the sign, |b-bar_2| = nu_2/delta_2 must give delta_2 = 1.
        {
            const RationalPolynomial& b2 = c.poly(F, 2);
            RationalPolynomial x = RationalPolynomial::x();
            RationalPolynomial monic_part = x * x * lin(1, -2) * lin(1, 2) * lin(1, -6);
            RationalPolynomial q;
            if (monic_part.divides_into(b2, q) && q.degree() == 0) {
                Rational bbar = q.coefficient(0);
                Rational mag = abs(bbar);
                if (mag.get_den() == 1 && mag.get_num() == 16)
                    ev(r, "p = 2: b-bar_2 = " + rat_str(bbar) +
                          " gives nu_2 = 16, delta_2 = 1 = 3^(p-1-t) with an empty prime tail (the nu "
                          "clause exempts p = 2)",
                       "derived");
                else {
                    escalate(r, kFail);
                    ev(r, "p = 2: b-bar_2 = " + rat_str(bbar) + " has delta_2 != 1 or nu_2 != 16", "derived");
                }
            } else {
                escalate(r, kFail);
                ev(r, "B_2 = " + b2.to_string() + " does not factor through x^2(x-2)(x+2)(x-6)", "derived");
            }
        }
        if (!ps.empty()) {
            r.params.n_lo = std::min(ps.front(), 2L);
            r.params.n_hi = ps.back();
            for (size_t i = 0; i < ps.size(); ++i) {
                ProfileSplit split = split_profile_violations(profiles[i]);
                for (const auto& v : split.nu_delta) {
                    escalate(r, kFail);
                    ev(r, "p = " + std::to_string(ps[i]) + ": " + v, "derived");
                }
            }
            if (r.status == std::string(kPass)) {
                std::string sample;
                for (size_t i = 0; i < ps.size() && i < 3; ++i)
                    sample += (i ? ", " : "") + std::string("nu_") + std::to_string(ps[i]) + "/delta_" +
                              std::to_string(ps[i]) + " = " + profiles[i].nu.get_str() + "/" +
                              profiles[i].delta.get_str();
                ev(r, "odd primes check out under the primitive normalization: " + sample, "derived");
            }
        }
        out.push_back(std::move(r));
    }
}

// ---------------------------------------------------------------- conjecture 5

void conj5(Ctx& c, std::vector<ConjectureReport>& out) {
    const FormKind F = FormKind::H6;

    out.push_back(existence_record(c, 5, "1: interpolating polynomial exists", F, 0));
    if (out.back().status == kFail) return; // every later clause builds on the interpolants

    { // clause 2
        ConjectureReport r = base(c, 5, "2: C_0 = 1", F);
        r.params.n_lo = r.params.n_hi = 0;
        r.series_order = 1;
        if (c.poly(F, 0) == from_coeffs({Rational(1)}))
            ev(r, "C_0 = 1", "derived");
        else {
            escalate(r, kFail);
            ev(r, "C_0 = " + c.poly(F, 0).to_string(), "derived");
        }
        out.push_back(std::move(r));
    }

    { // clause 3
        ConjectureReport r = base(c, 5, "3: printed C_1", F);
        r.params.n_lo = r.params.n_hi = 1;
        r.series_order = 2;
        RationalPolynomial printed = Rational(-8) * RationalPolynomial::monomial(1, 2) * lin(3, -2);
        ev(r, "C_1 as printed: -8x^2(3x-2)", "paper");
        if (c.poly(F, 1) == printed)
            ev(r, "C_1 matches: " + c.poly(F, 1).to_string(), "derived");
        else {
            escalate(r, kFail);
            ev(r, "computed C_1 = " + c.poly(F, 1).to_string(), "derived");
        }
        out.push_back(std::move(r));
    }

    { // clause 4
        ConjectureReport r = base(c, 5, "4: printed C_2", F);
        r.params.n_lo = r.params.n_hi = 2;
        r.series_order = 3;
        RationalPolynomial printed = Rational(8) * lin(3, -2) * lin(1, -2) * lin(1, -14);
        const RationalPolynomial& c2 = c.poly(F, 2);
        ev(r, "C_2 as printed: 8(3x-2)(x-2)(x-14)", "paper");
        if (c2 == printed)
            ev(r, "C_2 matches the printed form", "derived");
        else if (c2 == printed * RationalPolynomial::monomial(1, 3)) {
            escalate(r, kDiscrepancy);
            ev(r, "computed C_2 = " + c2.to_string() + " = x^3 * 8(3x-2)(x-2)(x-14): the printed form drops x^3",
               "derived");
            ev(r,
               "cross-check at m = 3: H_{6,3} = E_6, whose q^2 coefficient is -16632 = -504 sigma_5(2); "
                   "the printed form gives -616, the computed form -16632",
               "derived");
        } else {
            escalate(r, kFail);
            ev(r, "computed C_2 = " + c2.to_string() + " matches neither reading", "derived");
        }
        out.push_back(std::move(r));
    }

    { // clause 5
        ConjectureReport r = base(c, 5, "5: C_n = (x-2)(3x-2) x^(n+1) d-bar_n d_n, deg d_n = 2n-3", F);
        long lo = std::max(c.req.n_lo, 3L), hi = c.req.n_hi;
        r.params.n_lo = lo;
        r.params.n_hi = hi;
        r.series_order = hi + 1;
        if (lo > hi) {
            mark_empty_range(r, "index n > 2");
        } else {
            for (long n = lo; n <= hi; ++n) {
                const FactoredStructure& fs = c.structure(F, n);
                for (const auto& v : fs.violations) {
                    escalate(r, kFail);
                    ev(r, "C_" + std::to_string(n) + ": " + v, "derived");
                }
                if (fs.core_irreducible == IrredStatus::reducible) {
                    escalate(r, kFail);
                    ev(r, "d_" + std::to_string(n) + " is reducible: factor " +
                              irreducibility_probe(fs.core).witness,
                       "derived");
                }
            }
            if (r.status == std::string(kPass))
                ev(r,
                   "structure, sign (-1)^n, degree 2n-3, and irreducibility hold for n = " +
                       std::to_string(lo) + ".." + std::to_string(hi),
                   "derived");
        }
        out.push_back(std::move(r));
    }

    // clauses 6-8
    std::vector<long> ps = primes_in(std::max(c.req.n_lo, 3L), c.req.n_hi);
    std::vector<ScalarProfile> profiles;
    for (long p : ps) profiles.push_back(leading_scalar_profile(c.structure(F, p), p, F));

    { // clause 6
        ConjectureReport r = base(c, 5, "6: l_p = 3^(p-1) x primes in [5, p]", F);
        if (ps.empty()) {
            mark_empty_range(r, "odd prime index");
        } else {
            r.params.n_lo = ps.front();
            r.params.n_hi = ps.back();
            r.series_order = ps.back() + 1;
            for (size_t i = 0; i < ps.size(); ++i) {
                ProfileSplit split = split_profile_violations(profiles[i]);
                for (const auto& v : split.lead) {
                    escalate(r, kFail);
                    ev(r, "p = " + std::to_string(ps[i]) + ": " + v, "derived");
                }
            }
            std::string sample;
            for (size_t i = 0; i < ps.size() && i < 3; ++i)
                sample += (i ? ", " : "") + std::string("l_") + std::to_string(ps[i]) + " = " +
                          profiles[i].l.get_str();
            ev(r, "computed leading coefficients: " + sample, "derived");
        }
        out.push_back(std::move(r));
    }

    { // clause 7
        ConjectureReport r = base(c, 5, "7: l_p divides l_q for primes p < q", F);
        if (ps.size() < 2) {
            mark_empty_range(r, "pair of odd primes");
        } else {
            r.params.n_lo = ps.front();
            r.params.n_hi = ps.back();
            r.series_order = ps.back() + 1;
            std::vector<std::string> violations;
            if (!scalar_divisibility_chain(profiles, violations)) {
                escalate(r, kFail);
                for (const auto& v : violations) ev(r, v, "derived");
            } else {
                ev(r, "divisibility holds across all prime pairs in " + list_str(ps), "derived");
            }
        }
        out.push_back(std::move(r));
    }

    { // clause 8
        ConjectureReport r = base(c, 5, "8: nu_p = 8 * 2^s, delta_p = 3^(p-1-t) x primes in [5, p]", F);
        r.series_order = ps.empty() ? 3 : ps.back() + 1;
        // p = 2 through the clause-5 shape (x-2)(3x-2) x^3 d-bar_2 d_2 with
        // d_2 = x - 14: the remaining constant is d-bar_2.
        {
            const RationalPolynomial& c2 = c.poly(F, 2);
            RationalPolynomial part = lin(1, -2) * lin(3, -2) *
                                      RationalPolynomial::monomial(1, 3) * lin(1, -14);
            RationalPolynomial q;
            if (part.divides_into(c2, q) && q.degree() == 0) {
                Rational dbar = q.coefficient(0);
                Rational mag = abs(dbar);
                if (mag.get_den() == 1 && mag.get_num() == 8)
                    ev(r, "p = 2: d-bar_2 = " + rat_str(dbar) + ", d_2 = x - 14, so nu_2 = 8 and delta_2 "
                          "= 1 = 3^(p-1-t) with an empty prime tail (the nu clause exempts p = 2)",
                       "derived");
                else {
                    escalate(r, kFail);
                    ev(r, "p = 2: d-bar_2 = " + rat_str(dbar) + " has delta_2 != 1 or nu_2 != 8", "derived");
                }
            } else {
                escalate(r, kFail);
                ev(r, "C_2 = " + c2.to_string() + " does not factor through (x-2)(3x-2)x^3(x-14)",
                   "derived");
            }
        }
        if (!ps.empty()) {
            r.params.n_lo = std::min(ps.front(), 2L);
            r.params.n_hi = ps.back();
            for (size_t i = 0; i < ps.size(); ++i) {
                ProfileSplit split = split_profile_violations(profiles[i]);
                for (const auto& v : split.nu_delta) {
                    escalate(r, kFail);
                    ev(r, "p = " + std::to_string(ps[i]) + ": " + v, "derived");
                }
            }
            if (r.status == std::string(kPass)) {
                std::string sample;
                for (size_t i = 0; i < ps.size() && i < 3; ++i)
                    sample += (i ? ", " : "") + std::string("nu_") + std::to_string(ps[i]) + "/delta_" +
                              std::to_string(ps[i]) + " = " + profiles[i].nu.get_str() + "/" +
                              profiles[i].delta.get_str();
                ev(r, "odd primes: " + sample, "derived");
            }
        }
        out.push_back(std::move(r));
    }
}

// ---------------------------------------------------------------- conjecture 6

void conj6(Ctx& c, std::vector<ConjectureReport>& out) {
    long hi = c.req.n_hi;

    { // clause 1: the three families exist; classical anchors at m = 3
        ConjectureReport r = base(c, 6, "1: interpolating polynomials exist for all three families");
        long lo = std::max(c.req.n_lo, 1L);
        r.params.n_lo = lo;
        r.params.n_hi = hi;
        r.series_order = hi + 1;
        if (lo > hi) {
            mark_empty_range(r, "index n >= 1");
            out.push_back(std::move(r));
            return;
        }
        for (FormKind f : {FormKind::DeltaStar, FormKind::DeltaDagger, FormKind::DeltaDiamond})
            for (long n = lo; n <= hi; ++n) {
                try {
                    c.poly(f, n);
                } catch (const NotPolynomialError& e) {
                    escalate(r, kFail);
                    ev(r, form_kind_name(f) + (" n = " + std::to_string(n) + ": ") + e.what(), "derived");
                    out.push_back(std::move(r));
                    return;
                }
            }
        LaurentSeries delta = classical_series(ClassicalKind::Delta, hi + 1);
        for (long n = lo; n <= hi; ++n) {
            const Rational& tau = delta.coefficient(n);
            bool ok = c.poly(FormKind::DeltaStar, n).eval(3) == tau &&
                      c.poly(FormKind::DeltaDagger, n).eval(3) == Rational(1728) * tau &&
                      c.poly(FormKind::DeltaDiamond, n).eval(3) == tau;
            if (!ok) {
                escalate(r, kFail);
                ev(r, "m = 3 anchor fails at n = " + std::to_string(n) + " (tau(n) = " + rat_str(tau) + ")",
                   "derived");
            }
        }
        if (r.status == std::string(kPass)) {
            ev(r,
               "all three cusp families interpolate exactly for n = " + std::to_string(lo) + ".." +
                   std::to_string(hi),
               "derived");
            ev(r,
               "m = 3 collapse to the classical discriminant: T*_n(3) = tau(n), T-dagger_n(3) = 1728 "
                   "tau(n), T-diamond_n(3) = tau(n) for every n in range",
               "derived");
        }
        out.push_back(std::move(r));
    }

    { // clause 2: T-star structure and scalars
        ConjectureReport r = base(c, 6, "2: T*_n = t-bar*_n (x-2)^2 x^(n-1) t*_n", FormKind::DeltaStar);
        long lo = std::max(c.req.n_lo, 2L);
        r.params.n_lo = lo;
        r.params.n_hi = hi;
        r.series_order = hi + 1;
        if (std::max(c.req.n_lo, 1L) <= 1 && 1 <= hi) {
            if (c.poly(FormKind::DeltaStar, 1) == from_coeffs({Rational(1)}))
                ev(r, "T*_1 = 1", "derived");
            else {
                escalate(r, kFail);
                ev(r, "T*_1 = " + c.poly(FormKind::DeltaStar, 1).to_string() + " instead of 1", "derived");
            }
        }
        if (lo > hi) {
            if (r.evidence.empty()) mark_empty_range(r, "index n > 1");
            out.push_back(std::move(r));
        } else {
            for (long n = lo; n <= hi; ++n) {
                const FactoredStructure& fs = c.structure(FormKind::DeltaStar, n);
                for (const auto& v : fs.violations) {
                    escalate(r, kFail);
                    ev(r, "T*_" + std::to_string(n) + ": " + v, "derived");
                }
                if (fs.core_irreducible == IrredStatus::reducible) {
                    escalate(r, kFail);
                    ev(r, "t*_" + std::to_string(n) + " is reducible: factor " +
                              irreducibility_probe(fs.core).witness,
                       "derived");
                }
                Integer cubes = divisor_power_sum(n, 3, DivisorFilter::quotient_odd);
                Rational expect = (n % 2 == 0) ? Rational(-cubes) : Rational(cubes);
                if (fs.scalar != expect) {
                    escalate(r, kFail);
                    ev(r,
                       "t-bar*_" + std::to_string(n) + " = " + rat_str(fs.scalar) +
                           " but (-1)^(n+1) sum_{d | n, n/d odd} d^3 = " + rat_str(expect),
                       "derived");
                }
            }
            if (r.status == std::string(kPass))
                ev(r,
                   "structure, monic irreducible core of degree 2n-4, and the odd-quotient divisor-cube "
                       "scalar hold for n = " + std::to_string(lo) + ".." + std::to_string(hi),
                   "derived");
            out.push_back(std::move(r));
        }
    }

    { // clause 2, eta-quotient reading
        ConjectureReport r = base(c, 6, "2: t-bar*_n via the eta quotient", FormKind::DeltaStar);
        long lo = std::max(c.req.n_lo, 1L);
        long k = std::min(hi, 40L);
        r.params.n_lo = lo;
        r.params.n_hi = k;
        r.series_order = k + 1;
        if (lo > k) {
            mark_empty_range(r, "index n >= 1");
        } else {
            ev(r, "as printed the quotient reads eta(2z)^16 / eta(z)^(-8)", "paper");
            EtaQuotientResult printed = eta_quotient_series({{{2, 16}, {1, 8}}}, 4);
            EtaQuotientResult fixed = eta_quotient_series({{{2, 16}, {1, -8}}}, k + 1);
            if (printed.integral()) {
                escalate(r, kFail);
                ev(r, "expected the printed double negative to yield a fractional leading power, but it "
                      "is integral: the discrepancy analysis does not apply",
                   "derived");
            } else {
                escalate(r, kDiscrepancy);
                ev(r,
                   "read literally, eta(2z)^16 eta(z)^8 has leading power 40/24: not a q-series, so the "
                       "intended quotient is eta(2z)^16 / eta(z)^8",
                   "derived");
            }
            bool match = true;
            for (long n = lo; n <= k && match; ++n) {
                Integer cubes = divisor_power_sum(n, 3, DivisorFilter::quotient_odd);
                if (fixed.series.coefficient(n) != Rational(cubes)) {
                    match = false;
                    escalate(r, kFail);
                    ev(r, "corrected quotient coefficient at q^" + std::to_string(n) + " is " +
                              rat_str(fixed.series.coefficient(n)) + ", not |t-bar*_n| = " +
                              cubes.get_str(),
                       "derived");
                }
            }
            if (match) {
                escalate(r, kDiscrepancy);
                ev(r,
                   "[q^n] eta(2z)^16 / eta(z)^8 = |t-bar*_n| for n = " + std::to_string(lo) + ".." +
                       std::to_string(k) + "; the quotient carries the magnitudes only, the sign "
                       "(-1)^(n+1) of the clause is not in the eta expansion",
                   "derived");
            }
        }
        out.push_back(std::move(r));
    }

    { // clause 3(i)-(iii)
        ConjectureReport r = base(c, 6, "3(i)-(iii): printed T-dagger_1, T-dagger_2, T-dagger_3",
                                  FormKind::DeltaDagger);
        r.params.n_lo = 1;
        r.params.n_hi = 3;
        r.series_order = 4;
        struct Printed {
            long n;
            const char* text;
            RationalPolynomial value;
        };
        const Printed printed[] = {
            {1, "16x(3x^2+x+6)", Rational(16) * RationalPolynomial::x() * from_coeffs({6, 1, 3})},
            {2, "-16x^2(39x^4-95x^3+66x^2-260x-120)",
             Rational(-16) * RationalPolynomial::monomial(1, 2) *
                 from_coeffs({-120, -260, 66, -95, 39})},
            {3, "64x^3(189x^6-3021x^5+9574x^4-12520x^3+19136x^2-2960x-2208)/9",
             Rational(64, 9) * RationalPolynomial::monomial(1, 3) *
                 from_coeffs({-2208, -2960, 19136, -12520, 9574, -3021, 189})},
        };
        for (const auto& p : printed) {
            ev(r, "T-dagger_" + std::to_string(p.n) + " as printed: " + p.text, "paper");
            if (c.poly(FormKind::DeltaDagger, p.n) == p.value)
                ev(r, "T-dagger_" + std::to_string(p.n) + " matches", "derived");
            else {
                escalate(r, kFail);
                ev(r, "computed T-dagger_" + std::to_string(p.n) + " = " +
                          c.poly(FormKind::DeltaDagger, p.n).to_string(),
                   "derived");
            }
        }
        out.push_back(std::move(r));
    }

    { // clause 3(iv): structure and theta scalars
        ConjectureReport r = base(c, 6, "3(iv): T-dagger_n = t-bar-dagger_n (x-2)^2 x^n t-dagger_n",
                                  FormKind::DeltaDagger);
        long lo = std::max(c.req.n_lo, 4L);
        r.params.n_lo = lo;
        r.params.n_hi = hi;
        r.series_order = hi + 1;
        if (lo > hi) {
            mark_empty_range(r, "index n > 3");
            out.push_back(std::move(r));
        } else {
            const std::string expected_mult = "factor x - 2: expected multiplicity 2, found 1";
            bool mult_discrepancy = false, sign_flip = false;
            for (long n = lo; n <= hi; ++n) {
                const FactoredStructure& fs = c.structure(FormKind::DeltaDagger, n);
                for (const auto& v : fs.violations) {
                    if (v == expected_mult) {
                        mult_discrepancy = true;
                        continue;
                    }
                    escalate(r, kFail);
                    ev(r, "T-dagger_" + std::to_string(n) + ": " + v, "derived");
                }
                if (fs.core_irreducible == IrredStatus::reducible) {
                    escalate(r, kFail);
                    ev(r, "t-dagger_" + std::to_string(n) + " is reducible: factor " +
                              irreducibility_probe(fs.core).witness,
                       "derived");
                }
                Integer theta = d4d4_theta(n);
                Rational signed_theta = (n % 2 == 0) ? Rational(-theta) : Rational(theta);
                if (fs.scalar == signed_theta) {
                    if (n % 2 == 0) sign_flip = true; // printed claim has no sign factor
                } else if (fs.scalar == Rational(theta)) {
                    // matches the printed claim verbatim
                } else {
                    escalate(r, kFail);
                    ev(r,
                       "t-bar-dagger_" + std::to_string(n) + " = " + rat_str(fs.scalar) +
                           " but the D4+D4 theta coefficient is " + theta.get_str(),
                       "derived");
                }
            }
            if (mult_discrepancy) {
                escalate(r, kDiscrepancy);
                ev(r, "the factor is printed as (x-2)^2", "paper");
                ev(r,
                   "computed multiplicity of (x-2) is 1 for every n in range (total degree 3n matches "
                       "deg = 1 + n + (2n - 1), not the printed 2 + n + (2n - 1))",
                   "derived");
            }
            if (sign_flip) {
                escalate(r, kDiscrepancy);
                ev(r,
                   "t-bar-dagger_n = (-1)^(n+1) x the theta coefficient of the D4+D4 lattice at q^(2n); "
                       "the printed identification omits the alternating sign",
                   "derived");
            }
            if (status_rank(r.status) < status_rank(kFail))
                ev(r,
                   "monic irreducible core of degree 2n-1 and the theta magnitudes hold for n = " +
                       std::to_string(lo) + ".." + std::to_string(hi),
                   "derived");
            out.push_back(std::move(r));
        }
    }

    { // clause 3(iv), Schwarzian reading
        ConjectureReport r = base(c, 6, "3(iv): t-bar-dagger_n via the Schwarzian of f_8",
                                  FormKind::DeltaDagger);
        long lo = std::max(c.req.n_lo, 1L);
        long k = std::min(hi, 32L);
        r.params.n_lo = lo;
        r.params.n_hi = k;
        r.series_order = 2 * k + 2;
        if (lo > k) {
            mark_empty_range(r, "index n >= 1");
        } else {
            EtaQuotientResult f8 = eta_quotient_series({{{4, 12}, {2, -4}, {8, -8}}}, 2 * k + 2);
            LaurentSeries s8 = schwarzian_q(f8.series);
            ev(r, "claim: t-bar-dagger_n = (-1)^n x the coefficient of q^(2n) in {f_8, z}, with f_8 = "
                  "eta(4z)^12 / (eta(2z)^4 eta(8z)^8)",
               "paper");
            bool exact = true, half = true;
            for (long n = lo; n <= k && 2 * n < s8.order(); ++n) {
                Integer theta = d4d4_theta(n);
                Rational tbar = (n % 2 == 0) ? Rational(-theta) : Rational(theta);
                Rational lhs = ((n % 2 == 0) ? s8.coefficient(2 * n) : -s8.coefficient(2 * n));
                if (lhs != tbar) exact = false;
                if (lhs != tbar / 2) half = false;
            }
            if (exact) {
                ev(r, "the printed identity holds exactly in units of (2 pi i)^2", "derived");
            } else if (half) {
                escalate(r, kDiscrepancy);
                ev(r,
                   "computed: (-1)^n [q^(2n)] S(f_8) = t-bar-dagger_n / 2 exactly for n = " +
                       std::to_string(lo) + ".." + std::to_string(k) +
                       ", where {f, z} = (2 pi i)^2 S(f); the printed identity is off by a factor 2 "
                       "under this normalization",
                   "derived");
            } else {
                escalate(r, kFail);
                ev(r, "the Schwarzian coefficients match neither the printed identity nor its half",
                   "derived");
            }
        }
        out.push_back(std::move(r));
    }

    { // clause 4(i)
        ConjectureReport r = base(c, 6, "4(i): printed degrees of T-diamond_1..3", FormKind::DeltaDiamond);
        r.params.n_lo = 1;
        r.params.n_hi = 4;
        r.series_order = 5;
        ev(r, "claim: T-diamond_1, T-diamond_2, T-diamond_3 are irreducible of degrees 3, 6, 9", "paper");
        long d1 = c.poly(FormKind::DeltaDiamond, 1).degree();
        long d2 = c.poly(FormKind::DeltaDiamond, 2).degree();
        long d3 = c.poly(FormKind::DeltaDiamond, 3).degree();
        long d4 = c.poly(FormKind::DeltaDiamond, 4).degree();
        if (d1 == 3 && d2 == 6 && d3 == 9) {
            ev(r, "degrees match as printed", "derived");
        } else if (d1 == 0 && d2 == 3 && d3 == 6 && d4 == 9) {
            escalate(r, kDiscrepancy);
            ev(r,
               "computed degrees: T-diamond_1 = 1 (degree 0), then 3, 6, 9 for n = 2, 3, 4: the printed "
                   "indices are shifted by one",
               "derived");
            ev(r,
               "strict irreducibility also fails as printed: for n >= 2 the polynomial factors as "
                   "scalar x (x-2)^e x^(n-1) x core with only the monic core irreducible",
               "derived");
        } else {
            escalate(r, kFail);
            ev(r,
               "computed degrees (n = 1..4): " + std::to_string(d1) + ", " + std::to_string(d2) + ", " +
                   std::to_string(d3) + ", " + std::to_string(d4) + " match neither reading",
               "derived");
        }
        out.push_back(std::move(r));
    }

    { // clause 4(ii)
        ConjectureReport r = base(c, 6, "4(ii): T-diamond_n = t-bar-diamond_n (x-2) x^(n-1) t-diamond_n",
                                  FormKind::DeltaDiamond);
        long lo = std::max(c.req.n_lo, 3L);
        r.params.n_lo = lo;
        r.params.n_hi = hi;
        r.series_order = hi + 1;
        if (lo > hi) {
            mark_empty_range(r, "index n > 2");
        } else {
            EtaQuotientResult quot = eta_quotient_series({{{2, 24}, {1, -24}}}, hi + 1);
            EtaQuotientResult alt = eta_quotient_series({{{1, 24}, {4, 24}, {2, -48}}}, hi + 1);
            for (long n = lo; n <= hi; ++n) {
                const FactoredStructure& fs = c.structure(FormKind::DeltaDiamond, n);
                for (const auto& v : fs.violations) {
                    escalate(r, kFail);
                    ev(r, "T-diamond_" + std::to_string(n) + ": " + v, "derived");
                }
                if (fs.core_irreducible == IrredStatus::reducible) {
                    escalate(r, kFail);
                    ev(r, "t-diamond_" + std::to_string(n) + " is reducible: factor " +
                              irreducibility_probe(fs.core).witness,
                       "derived");
                }
                Rational via_quot =
                    (n % 2 == 0) ? -quot.series.coefficient(n) : quot.series.coefficient(n);
                const Rational& via_alt = alt.series.coefficient(n);
                if (via_quot != via_alt) {
                    escalate(r, kFail);
                    ev(r, "the two printed eta readings disagree at n = " + std::to_string(n), "derived");
                }
                if (fs.scalar != via_quot) {
                    escalate(r, kFail);
                    ev(r,
                       "t-bar-diamond_" + std::to_string(n) + " = " + rat_str(fs.scalar) +
                           " but the eta quotients give " + rat_str(via_quot),
                       "derived");
                }
            }
            if (r.status == std::string(kPass)) {
                ev(r,
                   "structure, monic irreducible core of degree 2n-3, and both eta readings "
                       "((-1)^(n+1) [q^n] (eta(2z)/eta(z))^24 = [q^n] (eta(z) eta(4z)/eta(2z)^2)^24) "
                       "hold for n = " + std::to_string(lo) + ".." + std::to_string(hi),
                   "derived");
                ev(r, "the statement's left side reads T-diamond_1 where the degrees force T-diamond_n",
                   "trivial");
            }
        }
        out.push_back(std::move(r));
    }
}

// ---------------------------------------------------------------- conjecture 7

void conj7(Ctx& c, std::vector<ConjectureReport>& out) {
    for (FormKind f : {FormKind::DeltaStar, FormKind::DeltaDagger, FormKind::DeltaDiamond}) {
        ConjectureReport r = base(c, 7, "T_n(m) != 0 for every integer m > 2", f);
        long lo = std::max(c.req.n_lo, 1L), hi = c.req.n_hi;
        r.params.n_lo = lo;
        r.params.n_hi = hi;
        r.series_order = hi + 1;
        if (lo > hi) {
            mark_empty_range(r, "index n >= 1");
            out.push_back(std::move(r));
            continue;
        }
        long checked = 0;
        for (long n = lo; n <= hi; ++n) {
            const RationalPolynomial& p = c.poly(f, n);
            for (long m = c.req.m_lo; m <= c.req.m_hi; ++m) {
                ++checked;
                if (p.eval(Rational(m)) == 0) {
                    escalate(r, kFail);
                    ev(r, form_kind_name(f) + (" coefficient " + std::to_string(n)) + " vanishes at m = " +
                              std::to_string(m),
                       "derived");
                }
            }
        }
        if (r.status == std::string(kPass))
            ev(r,
               "tau_m(" + std::to_string(lo) + ".." + std::to_string(hi) + ") != 0 for m = " +
                   std::to_string(c.req.m_lo) + ".." + std::to_string(c.req.m_hi) + " (" +
                   std::to_string(checked) + " evaluations)",
               "derived");
        out.push_back(std::move(r));
    }
}

// ---------------------------------------------------------------- conjecture 8

void conj8(Ctx& c, std::vector<ConjectureReport>& out) {
    for (FormKind f : {FormKind::DeltaStar, FormKind::DeltaDagger, FormKind::DeltaDiamond}) {
        ConjectureReport r = base(c, 8, "d(m,n) > 0, decays exponentially in n, exceeds d(3,n) for m > 3", f);
        long lo = std::max(c.req.n_lo, 1L), hi = c.req.n_hi;
        r.params.n_lo = lo;
        r.params.n_hi = hi;
        r.params.m_lo = 3; // the fit and the comparisons anchor at m = 3
        r.series_order = hi + 1;
        if (lo > hi || c.req.m_hi < 3) {
            mark_empty_range(r, "distance sample");
            out.push_back(std::move(r));
            continue;
        }
        DistanceProfile prof = distance_profile(f, lo, hi, 3, c.req.m_hi, c.store);
        for (const auto& v : prof.violations) {
            escalate(r, kFail);
            ev(r, v, "derived");
        }
        std::ostringstream fit;
        fit << "log d(3,n) ~ " << prof.fit_slope << " n + " << prof.fit_intercept << " over "
            << prof.fit_points << " points, |correlation| = " << prof.fit_correlation;
        ev(r, fit.str(), "derived");
        if (prof.fit_points < 3) {
            escalate(r, kInconclusive);
            ev(r, "too few m = 3 distances for a meaningful decay fit", "trivial");
        } else if (prof.fit_slope >= 0) {
            escalate(r, kFail);
            ev(r, "the fitted slope is nonnegative: no decay", "derived");
        } else if (prof.fit_correlation < 0.9) {
            escalate(r, kInconclusive);
            ev(r, "the decay is present but not convincingly exponential at this correlation", "derived");
        }
        if (f == FormKind::DeltaStar && lo <= 1)
            ev(r, "n = 1 contributes no distances: T*_1 = 1 has an empty root set", "trivial");
        if (r.status == std::string(kPass))
            ev(r,
               "all sampled distances are positive and every sampled m > 3 satisfies d(m,n) > d(3,n) (" +
                   std::to_string(prof.entries.size()) + " samples)",
               "derived");
        out.push_back(std::move(r));
    }
}

} // namespace

std::optional<ConjectureReport> printed_comparison(FormKind family, long n, SeriesStore* store) {
    struct Case {
        int conjecture;
        std::string label;
        std::string text;
        RationalPolynomial printed;
        RationalPolynomial corrected; // zero when no corrected reading exists
        std::string note;
    };
    const RationalPolynomial x = RationalPolynomial::x();
    const RationalPolynomial x2 = RationalPolynomial::monomial(1, 2);
    const RationalPolynomial x3 = RationalPolynomial::monomial(1, 3);
    std::optional<Case> pc;
    switch (family) {
        case FormKind::LittleJ:
            if (n == -1) pc = Case{1, "A_{-1}", "1", from_coeffs({Rational(1)}), {}, ""};
            if (n == 0)
                pc = Case{1, "A_0", "24(x^2 + 4/3)", from_coeffs({32, 0, 24}),
                          from_coeffs({32, 0, 24}) * x,
                          "the printed form drops a factor x: A_0(3) must be 744 "
                          "(the classical constant term), not 248"};
            if (n == 1)
                pc = Case{1, "A_1", "276x^2(x^4 - (8/69)x^2 - 16/23)",
                          Rational(276) * x2 *
                              from_coeffs({Rational(-16, 23), 0, Rational(-8, 69), 0, 1}),
                          {},
                          ""};
            break;
        case FormKind::H4:
            if (n == 1) pc = Case{4, "B_1", "16x(x+2)", Rational(16) * x * lin(1, 2), {}, ""};
            if (n == 2)
                pc = Case{4, "B_2", "-16x(x-2)(x+2)(x+6)",
                          Rational(-16) * x * lin(1, -2) * lin(1, 2) * lin(1, 6),
                          Rational(-16) * x2 * lin(1, -2) * lin(1, 2) * lin(1, -6),
                          "the printed form drops a factor x and flips (x-6) to (x+6); "
                          "B_2(3) must be 2160 = 240 sigma_3(2)"};
            break;
        case FormKind::H6:
            if (n == 1) pc = Case{5, "C_1", "-8x^2(3x-2)", Rational(-8) * x2 * lin(3, -2), {}, ""};
            if (n == 2)
                pc = Case{5, "C_2", "8(3x-2)(x-2)(x-14)",
                          Rational(8) * lin(3, -2) * lin(1, -2) * lin(1, -14),
                          Rational(8) * x3 * lin(3, -2) * lin(1, -2) * lin(1, -14),
                          "the printed form drops a factor x^3; C_2(3) must be "
                          "-16632 = -504 sigma_5(2)"};
            break;
        case FormKind::DeltaStar:
            if (n == 1) pc = Case{6, "T*_1", "1", from_coeffs({Rational(1)}), {}, ""};
            break;
        case FormKind::DeltaDagger:
            if (n == 1)
                pc = Case{6, "T-dagger_1", "16x(3x^2+x+6)",
                          Rational(16) * x * from_coeffs({6, 1, 3}), {}, ""};
            if (n == 2)
                pc = Case{6, "T-dagger_2", "-16x^2(39x^4-95x^3+66x^2-260x-120)",
                          Rational(-16) * x2 * from_coeffs({-120, -260, 66, -95, 39}), {}, ""};
            if (n == 3)
                pc = Case{6, "T-dagger_3",
                          "64x^3(189x^6-3021x^5+9574x^4-12520x^3+19136x^2-2960x-2208)/9",
                          Rational(64, 9) * x3 *
                              from_coeffs({-2208, -2960, 19136, -12520, 9574, -3021, 189}),
                          {},
                          ""};
            break;
        default: break;
    }
    if (!pc) return std::nullopt;

    ConjectureReport r;
    r.conjecture = pc->conjecture;
    r.clause = "printed " + pc->label;
    r.status = kPass;
    r.family = form_kind_name(family);
    r.params.n_lo = r.params.n_hi = n;
    long count = std::max(3 * n + 8, 2L) + 2 + 5;
    r.params.m_lo = 3;
    r.params.m_hi = 3 + count - 1;
    r.series_order = n + 2;
    RationalPolynomial got = interpolate_family(family, n, 5, store);
    ev(r, pc->label + " as printed: " + pc->text, "paper");
    if (got == pc->printed) {
        ev(r, pc->label + " matches the printed form: " + got.to_string(), "derived");
    } else if (!pc->corrected.is_zero() && got == pc->corrected) {
        escalate(r, kDiscrepancy);
        ev(r, "computed " + pc->label + " = " + got.to_string(), "derived");
        ev(r, pc->note, "derived");
    } else {
        escalate(r, kFail);
        ev(r, "computed " + pc->label + " = " + got.to_string() +
               " matches neither the printed form nor any known corrected reading",
           "derived");
    }
    return r;
}

std::vector<ConjectureReport> verify_conjecture(int id, const VerifyParams& params,
                                                SeriesStore* store) {
    Ctx ctx(params, store);
    std::vector<ConjectureReport> out;
    switch (id) {
        case 1: conj1(ctx, out); break;
        case 2: conj2(ctx, out); break;
        case 3: conj3(ctx, out); break;
        case 4: conj4(ctx, out); break;
        case 5: conj5(ctx, out); break;
        case 6: conj6(ctx, out); break;
        case 7: conj7(ctx, out); break;
        case 8: conj8(ctx, out); break;
        default: throw PipelineError("verify: conjecture id must be 1..8");
    }
    return out;
}

std::vector<ConjectureReport> verify_all(const VerifyParams& params, SeriesStore* store) {
    Ctx ctx(params, store);
    std::vector<ConjectureReport> out;
    for (int id = 1; id <= 8; ++id) {
        std::vector<ConjectureReport> part;
        switch (id) {
            case 1: conj1(ctx, part); break;
            case 2: conj2(ctx, part); break;
            case 3: conj3(ctx, part); break;
            case 4: conj4(ctx, part); break;
            case 5: conj5(ctx, part); break;
            case 6: conj6(ctx, part); break;
            case 7: conj7(ctx, part); break;
            case 8: conj8(ctx, part); break;
        }
        for (auto& r : part) out.push_back(std::move(r));
    }
    return out;
}

bool all_clear(const std::vector<ConjectureReport>& reports) {
    for (const auto& r : reports)
        if (r.status == kFail) return false;
    return true;
}

std::string reports_to_json(const std::vector<ConjectureReport>& reports, int indent) {
    json out;
    out["schema"] = "v1";
    out["reports"] = json::array();
    for (const auto& r : reports) {
        json jr;
        jr["conjecture"] = r.conjecture;
        jr["clause"] = r.clause;
        jr["status"] = r.status;
        jr["family"] = r.family;
        jr["parameters"] = {{"n_lo", r.params.n_lo},
                            {"n_hi", r.params.n_hi},
                            {"m_lo", r.params.m_lo},
                            {"m_hi", r.params.m_hi},
                            {"series_order", r.series_order}};
        json evs = json::array();
        for (const auto& e : r.evidence) evs.push_back({{"value", e.value}, {"provenance", e.provenance}});
        jr["evidence"] = std::move(evs);
        out["reports"].push_back(std::move(jr));
    }
    return indent >= 0 ? out.dump(indent) : out.dump();
}

} // namespace hecke
