#pragma once

#include <map>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "picalc/basis.hpp"
#include "picalc/rational.hpp"

namespace picalc {

// A divisor class written in the basis of its space. Stored sparsely:
// absent symbols have coefficient zero, except for the symbols listed in
// unknown_symbols(), whose coefficients the class does not determine at
// all (partial classes; sources print these with a trailing "- ...").
// Zero coefficients are never stored, keys are canonical and valid, and
// no stored key is unknown.
class DivisorClass {
    using TermMap = std::map<BasisSymbol, Rat>;
    using SymbolSet = std::set<BasisSymbol>;

public:
    explicit DivisorClass(SpaceId space)
        : space_(space), coeffs_(empty_terms()), unknown_(empty_symbols()) {}
    DivisorClass(SpaceId space, std::map<BasisSymbol, Rat> coeffs,
                 std::set<BasisSymbol> unknown = {});

    // Unchecked fast path for the library's own assembly routines: the
    // caller guarantees every key is a valid canonical symbol of the
    // space and that no stored key is unknown. Zero coefficients are
    // still dropped. Validating keys costs a canonicalization each, which
    // dominates on spaces whose boundary basis is exponential in n.
    struct Trusted {};
    DivisorClass(Trusted, SpaceId space, std::map<BasisSymbol, Rat> coeffs,
                 std::set<BasisSymbol> unknown = {});

    static DivisorClass zero(SpaceId space) { return DivisorClass(space); }

    const SpaceId& space() const { return space_; }
    const std::map<BasisSymbol, Rat>& terms() const { return *coeffs_; }

    bool fully_known() const { return unknown_->empty(); }
    const std::set<BasisSymbol>& unknown_symbols() const { return *unknown_; }
    bool knows(const BasisSymbol& sym) const { return !unknown_->contains(sym); }

    // The coefficient of a known symbol; throws UnknownSupport for a
    // symbol outside the class's known support.
    Rat coeff(const BasisSymbol& sym) const;

    bool is_zero() const { return coeffs_->empty(); }

    bool operator==(const DivisorClass& other) const {
        return space_ == other.space_ &&
               (coeffs_ == other.coeffs_ || *coeffs_ == *other.coeffs_) &&
               (unknown_ == other.unknown_ || *unknown_ == *other.unknown_);
    }

private:
    // The stored maps are immutable once the constructor finishes, so
    // copies share them. A class on a many-pointed space carries tens of
    // thousands of terms; deep copies of those dominated the audit paths.
    static std::shared_ptr<const TermMap> empty_terms();
    static std::shared_ptr<const SymbolSet> empty_symbols();

    SpaceId space_;
    std::shared_ptr<const TermMap> coeffs_;
    std::shared_ptr<const SymbolSet> unknown_;
};

// A test curve, recorded by its intersection numbers against the basis
// symbols of its space. Sparse; absent symbols pair to zero.
class CurveClass {
public:
    explicit CurveClass(SpaceId space) : space_(space) {}
    CurveClass(SpaceId space, std::map<BasisSymbol, Rat> pairings);

    static CurveClass zero(SpaceId space) { return CurveClass(space); }

    const SpaceId& space() const { return space_; }
    const std::map<BasisSymbol, Rat>& pairings() const { return pairings_; }
    Rat pairing(const BasisSymbol& sym) const;

    bool operator==(const CurveClass&) const = default;

private:
    SpaceId space_;
    std::map<BasisSymbol, Rat> pairings_;
};

// Exact linear combination sum(c_k * D_k). All terms must live on the
// given space. The result's known support is the intersection of the
// terms' known supports; accumulated coefficients at symbols that end up
// unknown are discarded. An empty term list yields the zero class.
DivisorClass combine(const SpaceId& space,
                     const std::vector<std::pair<Rat, DivisorClass>>& terms);

// Intersection number of a curve with a divisor class. Throws
// UnknownSupport when the curve pairs nontrivially with a symbol the
// class leaves unknown, and SpaceMismatch when the spaces differ.
Rat pair(const CurveClass& curve, const DivisorClass& cls);

// The sum of d{i:T} over every label subset T of cardinality c, each
// presentation canonicalized and the results merged. For i = 0 and c < 2
// every presentation is unstable and the sum is empty.
DivisorClass expand_aggregate(const SpaceId& space, int i, int c);

} // namespace picalc
