#include "picalc/basis.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace picalc {

SpaceId SpaceId::parse(const std::string& text) {
    auto fail = [&]() -> CalcError {
        return CalcError(Errc::SyntaxError,
                         "bad space '" + text + "', expected M(g,n) or S+(g)");
    };
    auto read_int = [&](std::size_t& p) {
        std::size_t start = p;
        if (p < text.size() && text[p] == '-') ++p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (p == start) throw fail();
        return std::stoi(text.substr(start, p - start));
    };
    std::size_t p = 0;
    auto expect = [&](char c) {
        if (p >= text.size() || text[p] != c) throw fail();
        ++p;
    };
    if (text.rfind("S+(", 0) == 0) {
        p = 3;
        int g = read_int(p);
        expect(')');
        if (p != text.size()) throw fail();
        return SpaceId::spin(g);
    }
    if (text.rfind("M(", 0) == 0) {
        p = 2;
        int g = read_int(p);
        expect(',');
        int n = read_int(p);
        expect(')');
        if (p != text.size()) throw fail();
        return SpaceId::pointed(g, n);
    }
    throw fail();
}

namespace {

std::string label_set_str(const std::vector<int>& labels) {
    std::string s = "{";
    for (std::size_t j = 0; j < labels.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(labels[j]);
    }
    return s + "}";
}

void check_labels(const SpaceId& space, const std::vector<int>& labels) {
    int prev = 0;
    for (int l : labels) {
        if (l < 1 || l > space.n)
            throw CalcError(Errc::InvalidIndex,
                            "marked label " + std::to_string(l) + " out of range on " + space.str());
        if (l <= prev)
            throw CalcError(Errc::InvalidIndex,
                            "label set " + label_set_str(labels) + " must be strictly increasing");
        prev = l;
    }
}

std::vector<int> complement(const SpaceId& space, const std::vector<int>& labels) {
    std::vector<int> out;
    out.reserve(space.n - labels.size());
    std::size_t j = 0;
    for (int l = 1; l <= space.n; ++l) {
        if (j < labels.size() && labels[j] == l) {
            ++j;
        } else {
            out.push_back(l);
        }
    }
    return out;
}

} // namespace

BasisSymbol BasisSymbol::boundary(int i, std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    return {Kind::Boundary, i, std::move(labels)};
}

std::string BasisSymbol::str() const {
    switch (kind) {
        case Kind::Lambda: return "l";
        case Kind::Psi: return "psi_" + std::to_string(index);
        case Kind::DeltaIrr: return "dirr";
        case Kind::Alpha: return "a_" + std::to_string(index);
        case Kind::Beta: return "b_" + std::to_string(index);
        case Kind::Boundary: {
            std::string s = "d{" + std::to_string(index) + ":";
            if (!labels.empty()) s += label_set_str(labels);
            return s + "}";
        }
    }
    return "?";
}

BasisSymbol canonicalize_boundary(const SpaceId& space, int i, std::vector<int> labels) {
    if (space.kind != SpaceId::Kind::PointedCurves)
        throw CalcError(Errc::InvalidIndex, "boundary symbols d{i:T} live on pointed spaces, not " + space.str());
    std::sort(labels.begin(), labels.end());
    check_labels(space, labels);
    if (i < 0 || i > space.g)
        throw CalcError(Errc::InvalidIndex,
                        "genus part " + std::to_string(i) + " out of range on " + space.str());

    const int csize = space.n - static_cast<int>(labels.size());
    // Stability of the divisor itself: a genus-0 part must carry at least
    // two marked labels (besides the node).
    if (i == 0 && static_cast<int>(labels.size()) < 2)
        throw CalcError(Errc::InvalidIndex,
                        "d{0:" + label_set_str(labels) + "} is unstable: a genus-0 part needs two labels");
    if (i == space.g && csize < 2)
        throw CalcError(Errc::InvalidIndex,
                        "d{" + std::to_string(i) + ":" + label_set_str(labels) +
                            "} is unstable: the complementary genus-0 part needs two labels");

    const int j = space.g - i;
    if (i < j) return BasisSymbol{BasisSymbol::Kind::Boundary, i, std::move(labels)};
    if (i > j) return BasisSymbol{BasisSymbol::Kind::Boundary, j, complement(space, labels)};
    // Tie i == g-i: keep the side whose label set contains label 1. With
    // n == 0 both sides are the empty set.
    if (space.n == 0) return BasisSymbol{BasisSymbol::Kind::Boundary, i, {}};
    if (!labels.empty() && labels.front() == 1)
        return BasisSymbol{BasisSymbol::Kind::Boundary, i, std::move(labels)};
    return BasisSymbol{BasisSymbol::Kind::Boundary, i, complement(space, labels)};
}

bool symbol_valid(const SpaceId& space, const BasisSymbol& sym) {
    const bool spin = space.kind == SpaceId::Kind::EvenSpin;
    switch (sym.kind) {
        case BasisSymbol::Kind::Lambda:
            return sym.index == 0 && sym.labels.empty();
        case BasisSymbol::Kind::Psi:
            return !spin && sym.labels.empty() && sym.index >= 1 && sym.index <= space.n;
        case BasisSymbol::Kind::DeltaIrr:
            return !spin && sym.index == 0 && sym.labels.empty();
        case BasisSymbol::Kind::Alpha:
        case BasisSymbol::Kind::Beta:
            return spin && sym.labels.empty() && sym.index >= 0 && sym.index <= space.g / 2;
        case BasisSymbol::Kind::Boundary: {
            if (spin) return false;
            try {
                return canonicalize_boundary(space, sym.index, sym.labels) == sym;
            } catch (const CalcError&) {
                return false;
            }
        }
    }
    return false;
}

void require_symbol(const SpaceId& space, const BasisSymbol& sym) {
    if (!symbol_valid(space, sym))
        throw CalcError(Errc::InvalidIndex,
                        "symbol " + sym.str() + " is not a canonical basis symbol of " + space.str());
}

void for_each_canonical_boundary(const SpaceId& space,
                                 const std::function<void(int, const std::vector<int>&)>& fn) {
    if (space.kind != SpaceId::Kind::PointedCurves) return;
    const int g = space.g;
    const int n = space.n;
    assert(n < 31);
    const std::uint32_t subsets = 1u << n;
    std::vector<int> labels;
    for (int i = 0; i <= g / 2; ++i) {
        const bool tie = (2 * i == g);
        for (std::uint32_t mask = 0; mask < subsets; ++mask) {
            labels.clear();
            for (int l = 1; l <= n; ++l)
                if (mask & (1u << (l - 1))) labels.push_back(l);
            if (i == 0 && labels.size() < 2) continue;
            // On a tie only the presentation containing label 1 is
            // canonical (the empty set when n == 0).
            if (tie && n > 0 && (labels.empty() || labels.front() != 1)) continue;
            fn(i, labels);
        }
    }
}

std::vector<BasisSymbol> enumerate_symbols(const SpaceId& space) {
    std::vector<BasisSymbol> out;
    out.push_back(BasisSymbol::lambda());
    if (space.kind == SpaceId::Kind::EvenSpin) {
        for (int i = 0; i <= space.g / 2; ++i) {
            out.push_back(BasisSymbol::alpha(i));
            out.push_back(BasisSymbol::beta(i));
        }
        return out;
    }
    for (int k = 1; k <= space.n; ++k) out.push_back(BasisSymbol::psi(k));
    out.push_back(BasisSymbol::delta_irr());
    for_each_canonical_boundary(space, [&](int i, const std::vector<int>& labels) {
        out.push_back(BasisSymbol{BasisSymbol::Kind::Boundary, i, labels});
    });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace picalc
