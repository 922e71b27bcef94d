#include "picalc/catalog.hpp"

#include "picalc/detail/memo.hpp"

#include <cassert>
#include <cstdlib>

namespace picalc {

namespace {

void require_genus(bool ok, int g, const char* what) {
    if (!ok)
        throw CalcError(Errc::InvalidGenus,
                        std::string(what) + " is not defined for genus " + std::to_string(g));
}

} // namespace

DivisorClass theta_null_class(int g) {
    const SpaceId sp = SpaceId::spin(g);
    std::map<BasisSymbol, Rat> c;
    c[BasisSymbol::lambda()] = Rat(1, 4);
    c[BasisSymbol::alpha(0)] = Rat(-1, 16);
    for (int i = 1; i <= g / 2; ++i) c[BasisSymbol::beta(i)] = Rat(-1, 2);
    return DivisorClass(sp, std::move(c));
}

DivisorClass canonical_spin_class(int g) {
    const SpaceId sp = SpaceId::spin(g);
    std::map<BasisSymbol, Rat> c;
    c[BasisSymbol::lambda()] = 13;
    c[BasisSymbol::alpha(0)] = -2;
    c[BasisSymbol::beta(0)] = -3;
    for (int i = 1; i <= g / 2; ++i) {
        c[BasisSymbol::alpha(i)] = -2;
        c[BasisSymbol::beta(i)] = -2;
    }
    c[BasisSymbol::alpha(1)] -= 1;
    c[BasisSymbol::beta(1)] -= 1;
    return DivisorClass(sp, std::move(c));
}

namespace {

DivisorClass build_canonical_mgn(int g, int n) {
    const SpaceId sp = SpaceId::pointed(g, n);
    std::map<BasisSymbol, Rat> c;
    c[BasisSymbol::lambda()] = 13;
    c[BasisSymbol::delta_irr()] = -2;
    for (int k = 1; k <= n; ++k) c[BasisSymbol::psi(k)] = 1;
    // The extra genus-one wall term contributes one summand per label
    // subset. For g >= 3 every subset presentation is already canonical,
    // so the wall lowers each genus-one symbol by exactly one and folds
    // into the main enumeration.
    const Rat genus_one_drop = g >= 3 ? 3 : 2;
    for_each_canonical_boundary(sp, [&](int i, const std::vector<int>& t) {
        c[BasisSymbol::boundary(i, t)] -= i == 1 ? genus_one_drop : Rat(2);
    });
    if (g < 3) {
        // For g = 2 a subset and its complement land on the same
        // canonical symbol and both count.
        const std::uint32_t subsets = 1u << n;
        std::vector<int> t;
        for (std::uint32_t mask = 0; mask < subsets; ++mask) {
            t.clear();
            for (int l = 1; l <= n; ++l)
                if (mask & (1u << (l - 1))) t.push_back(l);
            c[canonicalize_boundary(sp, 1, t)] -= 1;
        }
    }
    // Every key above is canonical by construction.
    return DivisorClass(DivisorClass::Trusted{}, sp, std::move(c));
}

} // namespace

DivisorClass canonical_mgn_class(int g, int n) {
    static detail::ClassMemo memo;
    return memo.get("K(" + std::to_string(g) + "," + std::to_string(n) + ")",
                    [&] { return build_canonical_mgn(g, n); });
}

DivisorClass bn_class(int g) {
    const auto build = [&](Rat l, std::vector<Rat> d) {
        std::map<BasisSymbol, Rat> c;
        c[BasisSymbol::lambda()] = l;
        c[BasisSymbol::delta_irr()] = -d[0];
        for (std::size_t i = 1; i < d.size(); ++i)
            c[BasisSymbol::boundary(static_cast<int>(i), {})] = -d[i];
        return DivisorClass(SpaceId::pointed(g, 0), std::move(c));
    };
    switch (g) {
        case 7: return build(15, {2, 9, 15, 18});
        case 8: return build(22, {3, 14, 24, 30, 32});
        case 11: return build(7, {1, 5, 9, 12, 14, 15});
        default:
            throw CalcError(Errc::Unsupported,
                            "no stored expansion of the even-ramification class for genus " +
                                std::to_string(g));
    }
}

namespace {

DivisorClass build_pointed_pencil(int g) {
    require_genus(g >= 3, g, "the pointed pencil divisor");
    const SpaceId sp = SpaceId::pointed(g, g);
    std::map<BasisSymbol, Rat> c;
    c[BasisSymbol::lambda()] = -1;
    for (int k = 1; k <= g; ++k) c[BasisSymbol::psi(k)] = 1;
    for_each_canonical_boundary(sp, [&](int i, const std::vector<int>& t) {
        const long card = static_cast<long>(t.size());
        const Int w = binomial(std::labs(card - i) + 1, 2);
        // The weight must not depend on the presentation.
        [[maybe_unused]] const long ccard = g - card;
        assert(binomial(std::labs(ccard - (g - i)) + 1, 2) == w);
        if (w != 0) c[BasisSymbol::boundary(i, t)] = -Rat(w);
    });
    // Every key above is canonical by construction.
    return DivisorClass(DivisorClass::Trusted{}, sp, std::move(c));
}

} // namespace

DivisorClass pointed_pencil_class(int g) {
    static detail::ClassMemo memo;
    return memo.get("Dg(" + std::to_string(g) + ")",
                    [&] { return build_pointed_pencil(g); });
}

Rat c_const(int g) {
    require_genus(g >= 4 && g % 3 == 1, g, "the singular-pencil constant");
    const int d = (2 * g + 7) / 3;
    const int r = g - d; // >= -1 for g >= 4
    return Rat(24 * factorial(g - 2), factorial(r + 5) * factorial(r + 3) * factorial(r + 1));
}

DivisorClass node_class(int g) {
    const Rat cg = c_const(g);
    const SpaceId sp = SpaceId::pointed(g, 2);
    std::map<BasisSymbol, Rat> c;
    const Rat mid = Rat(g + 2, 6);
    c[BasisSymbol::lambda()] = cg * (g + 4);
    c[BasisSymbol::psi(1)] = cg * mid;
    c[BasisSymbol::psi(2)] = cg * mid;
    c[BasisSymbol::delta_irr()] = -cg * mid;
    c[BasisSymbol::boundary(0, {1, 2})] = -cg * g;
    // Only the five coefficients above are determined; every other
    // boundary symbol stays unknown.
    std::set<BasisSymbol> unknown;
    for_each_canonical_boundary(sp, [&](int i, const std::vector<int>& t) {
        if (i == 0) return;
        unknown.insert(BasisSymbol::boundary(i, t));
    });
    return DivisorClass(sp, std::move(c), std::move(unknown));
}

DivisorClass cusp_class(int g) {
    const Rat cg = c_const(g);
    const SpaceId sp = SpaceId::pointed(g, 1);
    std::map<BasisSymbol, Rat> c;
    c[BasisSymbol::lambda()] = cg * (g + 4);
    c[BasisSymbol::psi(1)] = cg * g;
    c[BasisSymbol::delta_irr()] = -cg * Rat(g + 2, 6);
    for (int i = 1; i <= g - 1; ++i) {
        auto sym = canonicalize_boundary(sp, i, {1});
        // Distinct i give distinct canonical symbols, so no term merges.
        assert(!c.contains(sym));
        c[sym] = -cg * (i + 1) * (g - i);
    }
    return DivisorClass(sp, std::move(c));
}

Rat node_c2_pairing(int g) {
    const Rat cg = c_const(g);
    const int d = (2 * g + 7) / 3;
    const Rat theta_w = cg * (g - d + 5) / 4;
    const Rat c1_nu = 3 * g * cg / 4;
    return -2 * theta_w + (d - 1) * c1_nu;
}

DivisorClass b_class_11() {
    return combine(SpaceId::pointed(11, 0),
                   {{1, bn_class(11)},
                    {1, DivisorClass(SpaceId::pointed(11, 0),
                                     {{BasisSymbol::boundary(3, {}), 4},
                                      {BasisSymbol::boundary(4, {}), 7},
                                      {BasisSymbol::boundary(5, {}), 8}})}});
}

DivisorClass b_prime_class_11(const Rat& a1, const Rat& a2, const Rat& a3,
                              const Rat& a4, const Rat& a5) {
    const Rat as[] = {a1, a2, a3, a4, a5};
    std::map<BasisSymbol, Rat> extra;
    for (int i = 1; i <= 5; ++i) {
        if (as[i - 1] < 0)
            throw CalcError(Errc::NegativeCoefficient,
                            "boundary weight a_" + std::to_string(i) + " must be nonnegative");
        extra[BasisSymbol::boundary(i, {})] = as[i - 1];
    }
    return combine(SpaceId::pointed(11, 0),
                   {{2, bn_class(11)},
                    {1, DivisorClass(SpaceId::pointed(11, 0), std::move(extra))}});
}

} // namespace picalc
