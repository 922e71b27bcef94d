#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "picalc/space.hpp"

namespace picalc {

// One generator of the divisor-class basis of a space.
//
// Pointed spaces use Lambda, Psi(k), DeltaIrr and Boundary(i, T); spin
// spaces use Lambda, Alpha(i) and Beta(i). Boundary symbols are kept in
// canonical form only: the genus part i is at most g-i, and on a tie the
// stored label set is the one containing the smallest marked label.
struct BasisSymbol {
    enum class Kind : std::uint8_t { Lambda, Psi, DeltaIrr, Boundary, Alpha, Beta };

    Kind kind = Kind::Lambda;
    int index = 0;           // psi label, boundary genus part, or alpha/beta index
    std::vector<int> labels; // boundary label set T, sorted ascending

    static BasisSymbol lambda() { return {Kind::Lambda, 0, {}}; }
    static BasisSymbol psi(int k) { return {Kind::Psi, k, {}}; }
    static BasisSymbol delta_irr() { return {Kind::DeltaIrr, 0, {}}; }
    static BasisSymbol boundary(int i, std::vector<int> labels);
    static BasisSymbol alpha(int i) { return {Kind::Alpha, i, {}}; }
    static BasisSymbol beta(int i) { return {Kind::Beta, i, {}}; }

    bool operator==(const BasisSymbol&) const = default;

    // Total order; doubles as the rendering order (lambda, psi_1..psi_n,
    // dirr, boundary by (genus part, |T|, lex), then a_i/b_i interleaved).
    std::strong_ordering operator<=>(const BasisSymbol& o) const {
        auto g = group();
        auto og = o.group();
        if (auto c = g <=> og; c != 0) return c;
        if (auto c = index <=> o.index; c != 0) return c;
        if (group() == 3) {
            if (auto c = labels.size() <=> o.labels.size(); c != 0) return c;
        }
        if (group() == 4) {
            int a = kind == Kind::Beta ? 1 : 0;
            int b = o.kind == Kind::Beta ? 1 : 0;
            if (auto c = a <=> b; c != 0) return c;
        }
        return std::lexicographical_compare_three_way(labels.begin(), labels.end(),
                                                      o.labels.begin(), o.labels.end());
    }

    // DSL spelling: l, psi_3, dirr, d{1:}, d{0:{1,2}}, a_0, b_2.
    std::string str() const;

private:
    int group() const {
        switch (kind) {
            case Kind::Lambda: return 0;
            case Kind::Psi: return 1;
            case Kind::DeltaIrr: return 2;
            case Kind::Boundary: return 3;
            case Kind::Alpha: return 4;
            case Kind::Beta: return 4;
        }
        return 5;
    }
};

// Resolves a boundary presentation (i, T) on a pointed space to the
// canonical symbol for the divisor it denotes. The presentations (i, T)
// and (g-i, complement of T) denote the same divisor; the canonical one
// has the smaller genus part, ties broken by which label set contains the
// smallest marked label. Throws InvalidIndex when i or a label is out of
// range or the divisor is unstable (a genus-0 part with fewer than two
// labels on either presentation).
BasisSymbol canonicalize_boundary(const SpaceId& space, int i, std::vector<int> labels);

// True when the symbol is a legal basis generator of the space (boundary
// symbols must already be canonical).
bool symbol_valid(const SpaceId& space, const BasisSymbol& sym);

// Throwing form of symbol_valid; the message names the symbol and space.
void require_symbol(const SpaceId& space, const BasisSymbol& sym);

// Every basis symbol of the space, in rendering order. Exponential in n
// (one boundary symbol per canonical subset); intended for the small n
// this library works with.
std::vector<BasisSymbol> enumerate_symbols(const SpaceId& space);

// Calls fn(i, T) once per canonical boundary symbol of the pointed space.
void for_each_canonical_boundary(const SpaceId& space,
                                 const std::function<void(int, const std::vector<int>&)>& fn);

} // namespace picalc
