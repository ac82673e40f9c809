#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/forms.hpp"
#include "hecke/polynomial.hpp"

namespace hecke {

// Coefficient sequence of one q-power across m, the raw material for the
// interpolating polynomials A_n, B_n, C_n and the three cusp T_n families.
struct CoefficientTable {
    FormKind family;
    long n;                                        // q-exponent being tracked
    std::vector<std::pair<long, Rational>> samples; // (m, value), m ascending
};

// Samples family coefficient n at consecutive m = m_lo .. m_lo + count - 1.
CoefficientTable build_table(FormKind family, long n, long m_lo, long count,
                             SeriesStore* store = nullptr);

// Exact Newton-forward-difference interpolation on unit-step nodes.  The
// final `guard` samples are withheld from fitting and verified exactly;
// failure to fit or to verify raises NotPolynomialError ("not polynomial
// within budget ..."), the falsification signal for the conjectures.
RationalPolynomial newton_interpolate(const CoefficientTable& table, long guard);

// Degree budget 3n + 8, guard withheld points, consecutive nodes from m = 3.
RationalPolynomial interpolate_family(FormKind family, long n, long guard = 5,
                                      SeriesStore* store = nullptr);

enum class IrredStatus { certified, probable, reducible, unknown };
std::string irred_status_name(IrredStatus s);

struct IrredProbe {
    IrredStatus status = IrredStatus::unknown;
    std::string witness;               // certifying prime or explicit factor
    std::vector<std::string> evidence; // distinct-degree patterns per prime
};

std::vector<std::uint64_t> default_probe_primes();

// Mod-p certification with a rational-root reducibility scan.  "probable" is
// honest output (x^4+1 is reducible mod every prime yet irreducible over Q).
IrredProbe irreducibility_probe(const RationalPolynomial& p,
                                const std::vector<std::uint64_t>& primes = default_probe_primes());

// scalar * x^monomial_power * prod(structural factors) * core == source.
struct FactoredStructure {
    FormKind family = FormKind::LittleJ;
    long n = 0;
    Rational scalar;      // the r-bar_n of the clause (monic-core convention)
    long monomial_power = 0;
    std::vector<std::pair<RationalPolynomial, long>> structural_factors;
    RationalPolynomial core; // monic
    IrredStatus core_irreducible = IrredStatus::unknown;
    bool parity_even = false;
    std::vector<std::string> violations; // conjecture counterexample records

    RationalPolynomial reconstruct() const;
};

// Peels the family's structural factors (x-power first, then the linear
// factors, each at its actual multiplicity), normalizes the remainder monic,
// probes irreducibility, and records every clause mismatch in `violations`
// instead of throwing.  Ranges: A n>=2, B n>=3, C n>=3, Dstar n>=2,
// Ddagger n>=4, Ddiamond n>=3; the printed small-n cases are compared
// verbatim by the verifier.
FactoredStructure extract_structure(FormKind family, long n, const RationalPolynomial& p);

// Multiplicity of (x - r) in p over Z/qZ for each residue r with a positive
// multiplicity.  Throws PipelineError when a denominator vanishes mod q.
std::map<long, long> modp_linear_profile(const RationalPolynomial& p, std::uint64_t q);

// Primitive-integer model of a factored structure at prime index p:
// remainder = scalar * core = rbar * (primitive integer core with leading l).
struct ScalarProfile {
    long p = 0;
    Integer l;     // leading coefficient of the primitive integer core
    Rational rbar; // signed primitive-model scalar
    Integer nu, delta; // |rbar| = nu/delta in lowest terms
    long s = 0, t = 0; // ord_2(p+1), ord_3(p+1)
    std::vector<std::string> violations;
};

// Checks the multiplicative clauses: ord_3(l_p) = p-1 with prime support
// exactly {3} union [5, p]; nu_p = (16 or 8) * 2^s; ord_3(delta_p) = p-1-t
// with the same tail support.  Families: H4 and H6.
ScalarProfile leading_scalar_profile(const FactoredStructure& fs, long p, FormKind family);

// l_p | l_q for p < q across the collected profiles; failures are appended.
bool scalar_divisibility_chain(const std::vector<ScalarProfile>& profiles,
                               std::vector<std::string>& violations);

} // namespace hecke
