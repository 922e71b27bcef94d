#pragma once

#include <string>
#include <utility>
#include <vector>

#include "picalc/classes.hpp"

namespace picalc {

// One condition checked inside a Verdict: a printable name, the exact
// value the condition was evaluated on, and whether it was satisfied.
struct Witness {
    std::string condition;
    Rat value;
    bool satisfied = false;

    bool operator==(const Witness&) const = default;
};

// Outcome of a decision procedure. holds is true exactly when every
// listed witness is satisfied.
struct Verdict {
    bool holds = false;
    std::vector<Witness> witnesses;
};

// Exact pairing data for the two-curve / two-divisor ruledness test:
// p[i][j] is curve i paired with divisor j, k[i] is curve i paired with
// the canonical class.
struct UniruledInput {
    Rat p11, p12, p21, p22;
    Rat k1, k2;
};

// The ratio a/b for a class with lambda-coefficient a and delta_irr
// coefficient -b. Throws ZeroDelta0 when b = 0 and SignError unless
// a > 0 and b > 0.
Rat slope(const DivisorClass& d);

// Numerical rigidity witness: holds iff the curve pairs strictly
// negatively with the target class and to zero with every other listed
// class. Pairing errors (partial support, space mismatch) propagate.
Verdict rigidity_witness(const CurveClass& curve, const DivisorClass& target,
                         const std::vector<DivisorClass>& others);

// The four displayed conditions: p11 < 0, p22 < 0,
// det[[p11,p12],[p21,p22]] <= 0 and det[[k1,p11],[k2,p21]] < 0.
// The verdict is invariant under positive rescaling of either curve's
// row or either divisor's column.
Verdict uniruledness_check(const UniruledInput& in);

// total - sum(coeff * cls) over the fixed list; the caller inspects the
// residual's support and signs. Adding the fixed combination back
// recovers total exactly.
DivisorClass interpolate_decomposition(
    const DivisorClass& total,
    const std::vector<std::pair<Rat, DivisorClass>>& fixed);

// Closed form for the residual boundary coefficient at genus part i and
// label count c: (c^2+c-4)/2 for i = 0 (c >= 2), and for i = 1..5 the
// base {7, 16, 22, 26, 28}[i-1] plus C(|c-i|+1, 2). InvalidIndex
// outside 0 <= i <= 5, 0 <= c <= 11, or (i, c) = (0, c < 2).
Rat d_closed_form(int i, int c);

// Componentwise effectivity proxy: holds iff every coefficient of
// lhs - rhs is >= 0. Both classes must subtract to a fully known
// difference (UnknownSupport otherwise).
Verdict effective_difference(const DivisorClass& lhs, const DivisorClass& rhs);

} // namespace picalc
