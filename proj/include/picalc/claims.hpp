// A built-in ledger of auditable numeric claims. Every entry records where
// the asserted value comes from (citation + short quote), what the engine
// should recompute, and the exact expected result; evaluation reports
// MATCH / MISMATCH with no tolerance. Entries marked `allowlisted` are
// source-internal inconsistencies kept on purpose: they are expected to
// mismatch, and both values are reported side by side.
#pragma once

#include <string>
#include <vector>

#include "picalc/classes.hpp"

namespace picalc {

enum class ClaimKind {
    Pairing,    // pair(curve, class) == expected rational
    ClassEq,    // subject expression equals object expression as classes
    Scalar,     // named scalar computation == expected value text
    Uniruled,   // two-divisor intersection table verdict: "holds" / "fails"
    Rigidity,   // negative on a target, zero on the listed companions
    Effective,  // subject - object has no negative coefficient
    Note,       // qualitative statement; recorded but never computed
};

struct Claim {
    std::string id;        // unique, dotted, stable ("sec3.r.beta0")
    ClaimKind kind = ClaimKind::Pairing;
    std::string space;     // "M(g,n)" or "S+(g)"; empty when irrelevant
    std::string subject;   // curve id/text, lhs expression, or scalar spec
    std::string object;    // class expression, rhs expression, or aux list
    std::string expected;  // exact value text: rational, tuple, or verdict
    std::string citation;  // where the asserted value is stated
    std::string quote;     // short quoted statement being audited
    bool allowlisted = false;  // known source-internal inconsistency
    std::string note;      // extra context (required for allowlisted entries)
};

struct ClaimResult {
    std::string id;
    std::string status;  // MATCH | MISMATCH | MISMATCH-ALLOWLISTED | SKIPPED | ERROR
    std::string expected;
    std::string got;
    std::string citation;
    std::string quote;
    std::string note;
    bool operator==(const ClaimResult&) const = default;
};

struct Report {
    std::string version;
    std::string filter;
    int matched = 0;
    int mismatched = 0;   // outside the allowlist
    int allowlisted = 0;  // expected mismatches, values reported side by side
    int skipped = 0;
    int errors = 0;
    std::vector<ClaimResult> results;  // sorted by id
    bool operator==(const Report&) const = default;

    int total() const { return static_cast<int>(results.size()); }
    // True iff nothing unexpected happened (allowlisted mismatches are fine).
    bool clean() const { return mismatched == 0 && errors == 0; }
};

// The full ledger, sorted by id; ids are unique and never reused.
const std::vector<Claim>& claim_ledger();

// Resolves a curve spelled either as a catalog id or as a curve
// expression: catalog ids win, anything else is parsed as DSL text.
CurveClass resolve_curve(const std::string& text, const SpaceId& space);

// Recomputes one claim. Never throws: failures become status ERROR.
ClaimResult evaluate_claim(const Claim& claim);

// Glob match with `*` (any run) and `?` (any one character).
bool glob_match(const std::string& pattern, const std::string& text);

// Evaluates every ledger claim whose id matches the filter.
Report run_claims(const std::string& filter = "*");

// Stable JSON serialization; from(to(r)) == r.
std::string report_to_json(const Report& report);
Report report_from_json(const std::string& text);

} // namespace picalc
