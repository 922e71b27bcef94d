#include "picalc/classes.hpp"

#include <bit>

namespace picalc {

std::shared_ptr<const DivisorClass::TermMap> DivisorClass::empty_terms() {
    static const auto shared = std::make_shared<const TermMap>();
    return shared;
}

std::shared_ptr<const DivisorClass::SymbolSet> DivisorClass::empty_symbols() {
    static const auto shared = std::make_shared<const SymbolSet>();
    return shared;
}

DivisorClass::DivisorClass(SpaceId space, std::map<BasisSymbol, Rat> coeffs,
                           std::set<BasisSymbol> unknown)
    : space_(space) {
    for (const auto& sym : unknown) require_symbol(space_, sym);
    for (auto it = coeffs.begin(); it != coeffs.end();) {
        require_symbol(space_, it->first);
        if (unknown.contains(it->first))
            throw CalcError(Errc::UnknownSupport,
                            "coefficient stored at unknown symbol " + it->first.str());
        if (it->second == 0) {
            it = coeffs.erase(it);
        } else {
            ++it;
        }
    }
    coeffs_ = std::make_shared<const TermMap>(std::move(coeffs));
    unknown_ = std::make_shared<const SymbolSet>(std::move(unknown));
}

DivisorClass::DivisorClass(Trusted, SpaceId space, std::map<BasisSymbol, Rat> coeffs,
                           std::set<BasisSymbol> unknown)
    : space_(space) {
    std::erase_if(coeffs, [](const auto& kv) { return kv.second == 0; });
    coeffs_ = std::make_shared<const TermMap>(std::move(coeffs));
    unknown_ = std::make_shared<const SymbolSet>(std::move(unknown));
}

Rat DivisorClass::coeff(const BasisSymbol& sym) const {
    require_symbol(space_, sym);
    if (!knows(sym))
        throw CalcError(Errc::UnknownSupport,
                        "class on " + space_.str() + " does not determine the coefficient of " + sym.str());
    auto it = coeffs_->find(sym);
    return it == coeffs_->end() ? Rat(0) : it->second;
}

CurveClass::CurveClass(SpaceId space, std::map<BasisSymbol, Rat> pairings)
    : space_(space), pairings_(std::move(pairings)) {
    for (auto it = pairings_.begin(); it != pairings_.end();) {
        require_symbol(space_, it->first);
        if (it->second == 0) {
            it = pairings_.erase(it);
        } else {
            ++it;
        }
    }
}

Rat CurveClass::pairing(const BasisSymbol& sym) const {
    require_symbol(space_, sym);
    auto it = pairings_.find(sym);
    return it == pairings_.end() ? Rat(0) : it->second;
}

DivisorClass combine(const SpaceId& space,
                     const std::vector<std::pair<Rat, DivisorClass>>& terms) {
    std::map<BasisSymbol, Rat> acc;
    std::set<BasisSymbol> unknown;
    for (const auto& [scale, cls] : terms) {
        if (cls.space() != space)
            throw CalcError(Errc::SpaceMismatch,
                            "combine: term on " + cls.space().str() + ", expected " + space.str());
        unknown.insert(cls.unknown_symbols().begin(), cls.unknown_symbols().end());
        if (scale == 0) continue;
        // Unit scales skip the rational multiply; they are by far the
        // most common case and each multiply normalizes through a gcd.
        if (scale == 1)
            for (const auto& [sym, c] : cls.terms()) acc[sym] += c;
        else if (scale == -1)
            for (const auto& [sym, c] : cls.terms()) acc[sym] -= c;
        else
            for (const auto& [sym, c] : cls.terms()) acc[sym] += scale * c;
    }
    for (const auto& sym : unknown) acc.erase(sym);
    // Every key came from an already-validated class on this space.
    return DivisorClass(DivisorClass::Trusted{}, space, std::move(acc),
                        std::move(unknown));
}

Rat pair(const CurveClass& curve, const DivisorClass& cls) {
    if (curve.space() != cls.space())
        throw CalcError(Errc::SpaceMismatch,
                        "pair: curve on " + curve.space().str() + ", class on " + cls.space().str());
    Rat acc = 0;
    for (const auto& [sym, v] : curve.pairings()) {
        if (!cls.knows(sym))
            throw CalcError(Errc::UnknownSupport,
                            "pairing needs the coefficient of " + sym.str() +
                                ", which the class leaves undetermined");
        auto it = cls.terms().find(sym);
        if (it != cls.terms().end()) acc += v * it->second;
    }
    return acc;
}

DivisorClass expand_aggregate(const SpaceId& space, int i, int c) {
    if (space.kind != SpaceId::Kind::PointedCurves)
        throw CalcError(Errc::InvalidIndex, "aggregates d{i:c} live on pointed spaces, not " + space.str());
    if (i < 0 || i > space.g)
        throw CalcError(Errc::InvalidIndex, "genus part " + std::to_string(i) + " out of range on " + space.str());
    if (c < 0 || c > space.n)
        throw CalcError(Errc::InvalidIndex,
                        "cardinality " + std::to_string(c) + " out of range on " + space.str());
    std::map<BasisSymbol, Rat> acc;
    if (i == 0 && c < 2) return DivisorClass(space);
    if (i == space.g && space.n - c < 2)
        return DivisorClass(space);
    std::vector<int> labels;
    const std::uint32_t subsets = 1u << space.n;
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        if (std::popcount(mask) != c) continue;
        labels.clear();
        for (int l = 1; l <= space.n; ++l)
            if (mask & (1u << (l - 1))) labels.push_back(l);
        acc[canonicalize_boundary(space, i, labels)] += 1;
    }
    return DivisorClass(DivisorClass::Trusted{}, space, std::move(acc));
}

} // namespace picalc
