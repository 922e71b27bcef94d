#include "picalc/maps.hpp"

#include "picalc/detail/memo.hpp"

#include <functional>

namespace picalc {

namespace {

using Image = std::vector<std::pair<BasisSymbol, Rat>>;
using Rule = std::function<Image(const BasisSymbol&)>;

void require_source(const DivisorClass& d, const SpaceId& expected, const char* map_name) {
    if (d.space() != expected)
        throw CalcError(Errc::SpaceMismatch, std::string(map_name) + " expects a class on " +
                                                 expected.str() + ", got " + d.space().str());
}

// Applies a generator table to stored and unknown symbols alike. A target
// symbol hit from any unknown source symbol is unknown in the result, and
// partial sums accumulated there are discarded.
DivisorClass apply_rule(const DivisorClass& d, const SpaceId& target, const Rule& rule) {
    std::map<BasisSymbol, Rat> acc;
    for (const auto& [sym, c] : d.terms())
        for (const auto& [tsym, w] : rule(sym)) {
            // Generator images carry unit weights almost everywhere; skip
            // the normalizing rational multiply for them.
            if (w == 1)
                acc[tsym] += c;
            else if (w == -1)
                acc[tsym] -= c;
            else
                acc[tsym] += c * w;
        }
    std::set<BasisSymbol> unknown;
    for (const auto& sym : d.unknown_symbols())
        for (const auto& [tsym, w] : rule(sym))
            if (w != 0) unknown.insert(tsym);
    for (const auto& sym : unknown) acc.erase(sym);
    // The generator tables emit canonical target symbols only.
    return DivisorClass(DivisorClass::Trusted{}, target, std::move(acc),
                        std::move(unknown));
}

// All subsets of {from..to} passed to fn as sorted vectors.
void for_each_subset(int from, int to, const std::function<void(const std::vector<int>&)>& fn) {
    const int n = to - from + 1;
    std::vector<int> t;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        t.clear();
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) t.push_back(from + j);
        fn(t);
    }
}

[[noreturn]] void no_rule(const char* map_name, const BasisSymbol& sym) {
    throw CalcError(Errc::UnsupportedSymbol,
                    std::string(map_name) + " has no rule for " + sym.str());
}

// The pullbacks onto many-pointed targets spread each source symbol over
// exponentially many boundary symbols. Their sources live on M(g,0) or
// M(g,2) and are tiny, so results are cached under the serialized source.
std::string class_key(const DivisorClass& d, int n) {
    std::string key = d.space().str();
    key += '|';
    for (const auto& [sym, v] : d.terms()) {
        key += sym.str();
        key += '=';
        key += rat_to_string(v);
        key += ';';
    }
    key += '?';
    for (const auto& sym : d.unknown_symbols()) {
        key += sym.str();
        key += ';';
    }
    key += '|';
    key += std::to_string(n);
    return key;
}

} // namespace

DivisorClass spin_pullback(const DivisorClass& d) {
    const int g = d.space().g;
    require_source(d, SpaceId::pointed(g, 0), "spin_pullback");
    const SpaceId target = SpaceId::spin(g);
    return apply_rule(d, target, [&](const BasisSymbol& sym) -> Image {
        switch (sym.kind) {
            case BasisSymbol::Kind::Lambda: return {{BasisSymbol::lambda(), 1}};
            case BasisSymbol::Kind::DeltaIrr:
                return {{BasisSymbol::alpha(0), 1}, {BasisSymbol::beta(0), 2}};
            case BasisSymbol::Kind::Boundary:
                return {{BasisSymbol::alpha(sym.index), 1}, {BasisSymbol::beta(sym.index), 1}};
            default: no_rule("spin_pullback", sym);
        }
    });
}

Rat spin_cover_degree(int g) {
    if (g < 2) throw CalcError(Errc::InvalidGenus, "spin cover degree needs genus >= 2");
    return Rat(pow2(g - 1) * (pow2(g) + 1));
}

namespace {

DivisorClass build_forgetful_pullback(const DivisorClass& d, int n) {
    const int g = d.space().g;
    require_source(d, SpaceId::pointed(g, 0), "forgetful_pullback");
    const SpaceId target = SpaceId::pointed(g, n);
    return apply_rule(d, target, [&](const BasisSymbol& sym) -> Image {
        switch (sym.kind) {
            case BasisSymbol::Kind::Lambda: return {{BasisSymbol::lambda(), 1}};
            case BasisSymbol::Kind::DeltaIrr: return {{BasisSymbol::delta_irr(), 1}};
            case BasisSymbol::Kind::Boundary: {
                // One target symbol per divisor with genus split
                // {i, g-i}: on a tie that means the subsets containing
                // label 1 (or the empty set when n = 0).
                Image img;
                const int i = sym.index;
                const bool tie = (2 * i == g);
                for_each_subset(1, n, [&](const std::vector<int>& t) {
                    if (tie && n > 0 && (t.empty() || t.front() != 1)) return;
                    img.emplace_back(BasisSymbol::boundary(i, t), 1);
                });
                return img;
            }
            default: no_rule("forgetful_pullback", sym);
        }
    });
}

DivisorClass build_two_point_pullback(const DivisorClass& d, int n) {
    const int g = d.space().g;
    require_source(d, SpaceId::pointed(g, 2), "two_point_pullback");
    if (n < 2)
        throw CalcError(Errc::InvalidIndex,
                        "two_point_pullback target needs at least the two kept labels");
    const SpaceId target = SpaceId::pointed(g, n);
    return apply_rule(d, target, [&](const BasisSymbol& sym) -> Image {
        switch (sym.kind) {
            case BasisSymbol::Kind::Lambda: return {{BasisSymbol::lambda(), 1}};
            case BasisSymbol::Kind::DeltaIrr: return {{BasisSymbol::delta_irr(), 1}};
            case BasisSymbol::Kind::Psi: {
                // The kept labels precede the added ones, so the merged
                // label set is sorted as built; with two or more labels on
                // a genus-0 part of a positive-genus curve the symbol is
                // canonical as spelled and needs no canonicalization.
                Image img{{BasisSymbol::psi(sym.index), 1}};
                for_each_subset(3, n, [&](const std::vector<int>& t) {
                    if (t.empty()) return;
                    std::vector<int> labels{sym.index};
                    labels.insert(labels.end(), t.begin(), t.end());
                    if (g > 0)
                        img.emplace_back(
                            BasisSymbol{BasisSymbol::Kind::Boundary, 0, std::move(labels)}, -1);
                    else
                        img.emplace_back(canonicalize_boundary(target, 0, std::move(labels)), -1);
                });
                return img;
            }
            case BasisSymbol::Kind::Boundary: {
                // Source symbols are canonical on the two-pointed space, so
                // the genus part satisfies 2i <= g; unless it hits the tie
                // the spelled symbol stays the smaller genus part and is
                // canonical directly.
                Image img;
                const int i = sym.index;
                const bool direct = i > 0 ? 2 * i < g : g > 0;
                for_each_subset(3, n, [&](const std::vector<int>& t) {
                    std::vector<int> labels = sym.labels;
                    labels.insert(labels.end(), t.begin(), t.end());
                    if (direct)
                        img.emplace_back(
                            BasisSymbol{BasisSymbol::Kind::Boundary, i, std::move(labels)}, 1);
                    else
                        img.emplace_back(canonicalize_boundary(target, i, std::move(labels)), 1);
                });
                return img;
            }
            default: no_rule("two_point_pullback", sym);
        }
    });
}

} // namespace

DivisorClass forgetful_pullback(const DivisorClass& d, int n) {
    static detail::ClassMemo memo;
    return memo.get(class_key(d, n), [&] { return build_forgetful_pullback(d, n); });
}

DivisorClass two_point_pullback(const DivisorClass& d, int n) {
    static detail::ClassMemo memo;
    return memo.get(class_key(d, n), [&] { return build_two_point_pullback(d, n); });
}

DivisorClass elliptic_tail_pullback(const DivisorClass& d) {
    const int g = d.space().g;
    require_source(d, SpaceId::pointed(g, 0), "elliptic_tail_pullback");
    if (g < 3)
        throw CalcError(Errc::InvalidGenus, "elliptic_tail_pullback needs source genus >= 3");
    const SpaceId target = SpaceId::pointed(g - 1, 1);
    return apply_rule(d, target, [&](const BasisSymbol& sym) -> Image {
        switch (sym.kind) {
            case BasisSymbol::Kind::Lambda: return {{BasisSymbol::lambda(), 1}};
            case BasisSymbol::Kind::DeltaIrr: return {{BasisSymbol::delta_irr(), 1}};
            case BasisSymbol::Kind::Boundary:
                if (sym.index == 1)
                    return {{BasisSymbol::psi(1), -1},
                            {canonicalize_boundary(target, g - 2, {1}), 1}};
                no_rule("elliptic_tail_pullback", sym);
            default: no_rule("elliptic_tail_pullback", sym);
        }
    });
}

DivisorClass section_product_pushforward(const DivisorClass& d) {
    const int g = d.space().g;
    require_source(d, SpaceId::pointed(g, 2), "section_product_pushforward");
    const SpaceId target = SpaceId::pointed(g, 1);

    std::map<BasisSymbol, Rat> acc;
    for (const auto& [sym, c] : d.terms()) {
        switch (sym.kind) {
            case BasisSymbol::Kind::Lambda: acc[BasisSymbol::lambda()] += c; break;
            case BasisSymbol::Kind::DeltaIrr: acc[BasisSymbol::delta_irr()] += c; break;
            case BasisSymbol::Kind::Psi: break; // the product with a psi pushes to zero
            case BasisSymbol::Kind::Boundary:
                if (sym == BasisSymbol::boundary(0, {1, 2})) {
                    acc[BasisSymbol::psi(1)] -= c;
                    break;
                }
                no_rule("section_product_pushforward", sym);
            default: no_rule("section_product_pushforward", sym);
        }
    }

    std::set<BasisSymbol> unknown;
    if (!d.fully_known()) {
        // The product table only determines l, dirr and psi_1 downstairs.
        for (const auto& sym : enumerate_symbols(target)) {
            if (sym == BasisSymbol::lambda() || sym == BasisSymbol::delta_irr() ||
                sym == BasisSymbol::psi(1))
                continue;
            unknown.insert(sym);
        }
    }
    return DivisorClass(target, std::move(acc), std::move(unknown));
}

} // namespace picalc
