#include "doctest.h"
#include "picalc/classes.hpp"
#include "test_util.hpp"

using namespace picalc;

namespace {
const SpaceId m80 = SpaceId::pointed(8, 0);
const SpaceId s8 = SpaceId::spin(8);
}

TEST_CASE("divisor classes store sparse canonical terms") {
    DivisorClass d(m80, {{BasisSymbol::lambda(), 22}, {BasisSymbol::boundary(1, {}), 0}});
    CHECK_EQ(d.terms().size(), 1);
    CHECK_EQ(d.coeff(BasisSymbol::lambda()), 22);
    CHECK_EQ(d.coeff(BasisSymbol::boundary(2, {})), 0);
    CHECK(d.fully_known());
    CHECK_FALSE(d.is_zero());
    CHECK(DivisorClass::zero(m80).is_zero());

    // Keys must be canonical and valid for the space.
    CHECK_THROWS_CODE(Errc::InvalidIndex,
                      DivisorClass(m80, {{BasisSymbol::boundary(5, {}), 1}}));
    CHECK_THROWS_CODE(Errc::InvalidIndex, DivisorClass(s8, {{BasisSymbol::delta_irr(), 1}}));
}

TEST_CASE("partial classes refuse coefficient queries outside known support") {
    DivisorClass d(m80, {{BasisSymbol::lambda(), 1}}, {BasisSymbol::boundary(1, {})});
    CHECK_FALSE(d.fully_known());
    CHECK(d.knows(BasisSymbol::lambda()));
    CHECK_FALSE(d.knows(BasisSymbol::boundary(1, {})));
    CHECK_EQ(d.coeff(BasisSymbol::delta_irr()), 0);
    CHECK_THROWS_CODE(Errc::UnknownSupport, d.coeff(BasisSymbol::boundary(1, {})));
    // A stored coefficient may not sit at an unknown symbol.
    CHECK_THROWS_CODE(Errc::UnknownSupport,
                      DivisorClass(m80, {{BasisSymbol::lambda(), 1}}, {BasisSymbol::lambda()}));
}

TEST_CASE("combine is an exact linear combination") {
    DivisorClass a(m80, {{BasisSymbol::lambda(), 15}, {BasisSymbol::delta_irr(), -2}});
    DivisorClass b(m80, {{BasisSymbol::lambda(), Rat(1) / 2}, {BasisSymbol::boundary(1, {}), 3}});

    auto c = combine(m80, {{2, a}, {-4, b}});
    CHECK_EQ(c.coeff(BasisSymbol::lambda()), 28);
    CHECK_EQ(c.coeff(BasisSymbol::delta_irr()), -4);
    CHECK_EQ(c.coeff(BasisSymbol::boundary(1, {})), -12);

    // Cancellation erases the key entirely.
    auto z = combine(m80, {{1, a}, {-1, a}});
    CHECK(z.is_zero());
    CHECK(z.fully_known());

    CHECK(combine(m80, {}).is_zero());
    CHECK_THROWS_CODE(Errc::SpaceMismatch,
                      combine(m80, {{1, DivisorClass::zero(SpaceId::pointed(7, 0))}}));
}

TEST_CASE("combine intersects known supports and discards unknowable sums") {
    DivisorClass full(m80, {{BasisSymbol::lambda(), 1}, {BasisSymbol::boundary(1, {}), 5}});
    DivisorClass part(m80, {{BasisSymbol::delta_irr(), 2}}, {BasisSymbol::boundary(1, {})});

    auto c = combine(m80, {{1, full}, {1, part}});
    CHECK_FALSE(c.fully_known());
    CHECK_EQ(c.coeff(BasisSymbol::lambda()), 1);
    CHECK_EQ(c.coeff(BasisSymbol::delta_irr()), 2);
    // full's contribution at the unknown symbol is not representable.
    CHECK_THROWS_CODE(Errc::UnknownSupport, c.coeff(BasisSymbol::boundary(1, {})));
    CHECK_EQ(c.unknown_symbols().size(), 1);
}

TEST_CASE("pairing is the sparse dot product with support checking") {
    DivisorClass d(m80, {{BasisSymbol::lambda(), 22}, {BasisSymbol::delta_irr(), -3}});
    CurveClass gamma(m80, {{BasisSymbol::lambda(), 8}, {BasisSymbol::delta_irr(), 59}});
    CHECK_EQ(pair(gamma, d), 22 * 8 - 3 * 59);

    CHECK_THROWS_CODE(Errc::SpaceMismatch, pair(CurveClass::zero(SpaceId::pointed(7, 0)), d));

    DivisorClass part(m80, {{BasisSymbol::lambda(), 22}}, {BasisSymbol::delta_irr()});
    CHECK_THROWS_CODE(Errc::UnknownSupport, pair(gamma, part));
    // Curves that do not meet the unknown symbol pair fine.
    CurveClass lam_only(m80, {{BasisSymbol::lambda(), 3}});
    CHECK_EQ(pair(lam_only, part), 66);
}

TEST_CASE("aggregate expansion sums one term per label subset") {
    const auto m1111 = SpaceId::pointed(11, 11);
    auto agg = expand_aggregate(m1111, 0, 2);
    CHECK_EQ(agg.terms().size(), 55); // C(11,2) canonical two-label sets
    for (const auto& [sym, c] : agg.terms()) {
        CHECK_EQ(c, 1);
        CHECK_EQ(sym.index, 0);
        CHECK_EQ(sym.labels.size(), 2);
    }

    CHECK(expand_aggregate(m1111, 0, 1).is_zero());
    CHECK(expand_aggregate(m1111, 0, 0).is_zero());

    // Tie case: on M(4,2) the two singleton presentations of the genus-2
    // split reduce to the same canonical symbol and merge.
    auto tie = expand_aggregate(SpaceId::pointed(4, 2), 2, 1);
    CHECK_EQ(tie.terms().size(), 1);
    CHECK_EQ(tie.coeff(BasisSymbol::boundary(2, {1})), 2);

    CHECK_THROWS_CODE(Errc::InvalidIndex, expand_aggregate(m1111, 6, 12));
    CHECK_THROWS_CODE(Errc::InvalidIndex, expand_aggregate(m1111, -1, 2));
    CHECK_THROWS_CODE(Errc::InvalidIndex, expand_aggregate(s8, 1, 0));
}
