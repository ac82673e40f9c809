#pragma once

#include <string>
#include <vector>

#include "hecke/forms.hpp"

namespace hecke {

// One machine-checked clause of one conjecture.
//
// status semantics:
//   pass          every instance in range agrees with the statement
//   fail          a concrete counterexample was computed (it is in evidence)
//   discrepancy   the statement as printed disagrees with the computation,
//                 but a corrected reading passes; both sides are in evidence
//   inconclusive  the clause is outside what this engine can decide
struct EvidenceItem {
    std::string value;
    std::string provenance; // "paper" | "trivial" | "derived"
};

struct VerifyParams {
    long n_lo = 0;  // lowest polynomial index (clamped per clause)
    long n_hi = 10; // highest polynomial index
    long m_lo = 3;  // lowest evaluation point / group index
    long m_hi = 20; // highest evaluation point / group index
};

struct ConjectureReport {
    int conjecture = 0;    // 1..8
    std::string clause;    // label following the numbering of the statement
    std::string status;    // "pass" | "fail" | "discrepancy" | "inconclusive"
    std::string family;    // form family the clause is about ("" when mixed)
    VerifyParams params;   // ranges actually applied, after clamping
    long series_order = 0; // deepest q-expansion order the clause consumed
    std::vector<EvidenceItem> evidence;
};

// Runs every machine-checkable clause of conjecture `id` (1..8) over the
// given ranges.  Passing one SeriesStore across calls lets the conjectures
// share the underlying q-expansions.
std::vector<ConjectureReport> verify_conjecture(int id, const VerifyParams& params,
                                                SeriesStore* store = nullptr);

// All eight conjectures in order, sharing one expansion cache.
std::vector<ConjectureReport> verify_all(const VerifyParams& params,
                                         SeriesStore* store = nullptr);

// True iff no report carries status "fail"; discrepancies do not count.
bool all_clear(const std::vector<ConjectureReport>& reports);

// {"schema": "v1", "reports": [...]}; indent < 0 renders compact.
std::string reports_to_json(const std::vector<ConjectureReport>& reports, int indent = 2);

} // namespace hecke
