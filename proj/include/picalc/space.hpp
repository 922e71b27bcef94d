#pragma once

#include <string>

#include "picalc/error.hpp"

namespace picalc {

// A moduli space the calculus works over: either curves of genus g with n
// labelled points, or even spin curves of genus g (no marked points).
struct SpaceId {
    enum class Kind { PointedCurves, EvenSpin };

    Kind kind = Kind::PointedCurves;
    int g = 2;
    int n = 0;

    static SpaceId pointed(int g, int n) {
        check(g, n);
        return SpaceId{Kind::PointedCurves, g, n};
    }

    static SpaceId spin(int g) {
        check(g, 0);
        return SpaceId{Kind::EvenSpin, g, 0};
    }

    bool operator==(const SpaceId&) const = default;

    std::string str() const {
        if (kind == Kind::EvenSpin) return "S+(" + std::to_string(g) + ")";
        return "M(" + std::to_string(g) + "," + std::to_string(n) + ")";
    }

    // Accepts the same grammar str() emits: "M(g,n)" or "S+(g)".
    static SpaceId parse(const std::string& text);

private:
    static void check(int g, int n) {
        if (g < 2) throw CalcError(Errc::InvalidGenus, "genus must be at least 2, got " + std::to_string(g));
        if (n < 0) throw CalcError(Errc::InvalidIndex, "marked-point count must be nonnegative, got " + std::to_string(n));
    }
};

} // namespace picalc
