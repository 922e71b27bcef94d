#include "picalc/criteria.hpp"

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "picalc/basis.hpp"
#include "picalc/error.hpp"

namespace picalc {

namespace {

Verdict finish(std::vector<Witness> ws) {
    bool all = true;
    for (const auto& w : ws) all = all && w.satisfied;
    return Verdict{all, std::move(ws)};
}

} // namespace

Rat slope(const DivisorClass& d) {
    const Rat a = d.coeff(BasisSymbol::lambda());
    const Rat b = -d.coeff(BasisSymbol::delta_irr());
    if (b == 0)
        throw CalcError(Errc::ZeroDelta0,
                        "slope needs a nonzero delta_irr coefficient");
    if (a <= 0 || b <= 0)
        throw CalcError(Errc::SignError,
                        "slope expects a positive lambda coefficient and a "
                        "negative delta_irr coefficient");
    return a / b;
}

Verdict rigidity_witness(const CurveClass& curve, const DivisorClass& target,
                         const std::vector<DivisorClass>& others) {
    std::vector<Witness> ws;
    const Rat head = pair(curve, target);
    ws.push_back({"pair(target) < 0", head, head < 0});
    for (std::size_t j = 0; j < others.size(); ++j) {
        const Rat v = pair(curve, others[j]);
        ws.push_back(
            {"pair(other " + std::to_string(j + 1) + ") == 0", v, v == 0});
    }
    return finish(std::move(ws));
}

Verdict uniruledness_check(const UniruledInput& in) {
    const Rat det1 = in.p11 * in.p22 - in.p12 * in.p21;
    const Rat det2 = in.k1 * in.p21 - in.p11 * in.k2;
    std::vector<Witness> ws;
    ws.push_back({"p11 < 0", in.p11, in.p11 < 0});
    ws.push_back({"p22 < 0", in.p22, in.p22 < 0});
    ws.push_back({"p11*p22 - p12*p21 <= 0", det1, det1 <= 0});
    ws.push_back({"k1*p21 - p11*k2 < 0", det2, det2 < 0});
    return finish(std::move(ws));
}

DivisorClass interpolate_decomposition(
    const DivisorClass& total,
    const std::vector<std::pair<Rat, DivisorClass>>& fixed) {
    std::vector<std::pair<Rat, DivisorClass>> terms;
    terms.reserve(fixed.size() + 1);
    terms.emplace_back(1, total);
    for (const auto& [c, cls] : fixed) terms.emplace_back(-c, cls);
    return combine(total.space(), terms);
}

Rat d_closed_form(int i, int c) {
    if (i < 0 || i > 5 || c < 0 || c > 11 || (i == 0 && c < 2))
        throw CalcError(Errc::InvalidIndex,
                        "closed form is stored for genus parts 0..5 and label "
                        "counts 0..11 (at least 2 when the genus part is 0)");
    if (i == 0) return Rat(c * c + c - 4) / 2;
    static const int base[5] = {7, 16, 22, 26, 28};
    return Rat(base[i - 1] + binomial(std::abs(c - i) + 1, 2));
}

Verdict effective_difference(const DivisorClass& lhs, const DivisorClass& rhs) {
    const DivisorClass diff = combine(lhs.space(), {{1, lhs}, {-1, rhs}});
    if (!diff.fully_known())
        throw CalcError(Errc::UnknownSupport,
                        "effectivity comparison needs fully known coefficients");
    std::vector<Witness> ws;
    Rat least = 0;
    for (const auto& [sym, v] : diff.terms()) {
        if (v < least) least = v;
        if (v < 0) ws.push_back({"coeff(" + sym.str() + ") >= 0", v, false});
    }
    if (ws.empty()) ws.push_back({"all coefficients >= 0", least, true});
    return finish(std::move(ws));
}

} // namespace picalc
