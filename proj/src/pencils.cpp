#include "picalc/pencils.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace picalc {

long noether_c2(long chi, long k_squared) { return 12 * chi - k_squared; }

CurveClass surface_pencil_curve(const SpaceId& space, const FibrationRecipe& r) {
    if (space.kind != SpaceId::Kind::PointedCurves)
        throw CalcError(Errc::SpaceMismatch, "surface pencils live on pointed spaces");
    const int g = space.g;
    const int d = r.base_change_degree;
    if (d < 1) throw CalcError(Errc::InvalidIndex, "base change degree must be positive");
    if (r.chi + g - 1 < 0)
        throw CalcError(Errc::NegativeCoefficient, "recipe gives a negative lambda pairing");

    std::map<BasisSymbol, Rat> p;
    p[BasisSymbol::lambda()] = Rat(d) * (r.chi + g - 1);

    std::set<int> seen;
    for (const auto& s : r.sections) {
        if (s.label < 1 || s.label > space.n)
            throw CalcError(Errc::InvalidIndex,
                            "section label " + std::to_string(s.label) + " out of range on " + space.str());
        if (!seen.insert(s.label).second)
            throw CalcError(Errc::DuplicateLabel,
                            "two sections carry label " + std::to_string(s.label));
        p[BasisSymbol::psi(s.label)] = -Rat(s.self_intersection);
    }

    const Rat total = Rat(d) * (r.c2 + 4 * (g - 1));
    Rat hit_sum = 0;
    for (const auto& [sym, v] : r.boundary_hits) {
        if (sym.kind != BasisSymbol::Kind::Boundary)
            throw CalcError(Errc::InvalidIndex,
                            "explicit hits must be boundary symbols, got " + sym.str());
        require_symbol(space, sym);
        p[sym] += v;
        hit_sum += v;
    }
    const Rat dirr = total - hit_sum;
    if (dirr < 0)
        throw CalcError(Errc::NegativeBoundary,
                        "explicit boundary hits exceed the total boundary degree " +
                            rat_to_string(total));
    p[BasisSymbol::delta_irr()] = dirr;
    return CurveClass(space, std::move(p));
}

CurveClass spin_pencil_curve(int g, const SpinFibrationRecipe& r) {
    const SpaceId space = SpaceId::spin(g);
    if (!r.base.sections.empty())
        throw CalcError(Errc::UnsupportedSymbol, "spin spaces carry no psi classes");
    if (!r.base.boundary_hits.empty())
        throw CalcError(Errc::UnsupportedSymbol,
                        "spin recipes take their boundary data from beta0 and higher_hits");
    if (r.beta0 < 0)
        throw CalcError(Errc::NegativeCoefficient, "beta0 multiplicity must be nonnegative");
    const int d = r.base.base_change_degree;
    if (d < 1) throw CalcError(Errc::InvalidIndex, "base change degree must be positive");

    std::map<BasisSymbol, Rat> p;
    p[BasisSymbol::lambda()] = Rat(d) * (r.base.chi + g - 1);
    const Rat total = Rat(d) * (r.base.c2 + 4 * (g - 1));
    const Rat alpha0 = total - 2 * r.beta0;
    if (alpha0 < 0)
        throw CalcError(Errc::NegativeBoundary,
                        "2 beta0 exceeds the total boundary degree " + rat_to_string(total));
    p[BasisSymbol::alpha(0)] = alpha0;
    p[BasisSymbol::beta(0)] = r.beta0;
    for (const auto& [sym, v] : r.higher_hits) {
        if ((sym.kind != BasisSymbol::Kind::Alpha && sym.kind != BasisSymbol::Kind::Beta) ||
            sym.index < 1)
            throw CalcError(Errc::InvalidIndex,
                            "higher hits must be a_i or b_i with i >= 1, got " + sym.str());
        require_symbol(space, sym);
        p[sym] += v;
    }
    return CurveClass(space, std::move(p));
}

CurveClass base_change_curve(const CurveClass& curve, int degree,
                             const std::vector<PromotedSection>& promoted) {
    if (degree < 1) throw CalcError(Errc::InvalidIndex, "base change degree must be positive");
    const SpaceId src = curve.space();
    if (src.kind != SpaceId::Kind::PointedCurves)
        throw CalcError(Errc::SpaceMismatch, "base change acts on pointed-space curves");

    int n = src.n;
    for (const auto& ps : promoted) n = std::max(n, ps.label);
    const SpaceId target = SpaceId::pointed(src.g, n);

    std::map<BasisSymbol, Rat> p;
    for (const auto& [sym, v] : curve.pairings()) p[sym] = Rat(degree) * v;
    for (const auto& ps : promoted) {
        if (ps.label < 1)
            throw CalcError(Errc::InvalidIndex, "promoted label must be positive");
        auto psi = BasisSymbol::psi(ps.label);
        if (p.contains(psi))
            throw CalcError(Errc::DuplicateLabel,
                            "label " + std::to_string(ps.label) + " already carries a section");
        p[psi] = -Rat(ps.self_intersection) + ps.ramification;
    }
    return CurveClass(target, std::move(p));
}

namespace {

struct ParsedId {
    std::string name;
    std::vector<int> args;
};

ParsedId parse_id(const std::string& id) {
    ParsedId out;
    std::size_t p = 0;
    while (p < id.size() && (std::isalnum(static_cast<unsigned char>(id[p])) || id[p] == '_'))
        ++p;
    out.name = id.substr(0, p);
    if (out.name.empty()) throw CalcError(Errc::UnknownId, "empty catalog id");
    if (p == id.size()) return out;
    if (id[p] != '(' || id.back() != ')')
        throw CalcError(Errc::UnknownId, "malformed catalog id '" + id + "'");
    std::size_t q = p + 1;
    while (q < id.size() - 1) {
        std::size_t start = q;
        if (q < id.size() - 1 && id[q] == '-') ++q;
        while (q < id.size() - 1 && std::isdigit(static_cast<unsigned char>(id[q]))) ++q;
        if (q == start) throw CalcError(Errc::UnknownId, "malformed catalog id '" + id + "'");
        out.args.push_back(std::stoi(id.substr(start, q - start)));
        if (q < id.size() - 1) {
            if (id[q] != ',') throw CalcError(Errc::UnknownId, "malformed catalog id '" + id + "'");
            ++q;
        }
    }
    return out;
}

void need_args(const ParsedId& pid, std::size_t count) {
    if (pid.args.size() != count)
        throw CalcError(Errc::UnknownId, "catalog id " + pid.name + " takes " +
                                             std::to_string(count) + " parameter(s)");
}

std::vector<SectionSpec> unit_sections(int n) {
    std::vector<SectionSpec> s;
    for (int k = 1; k <= n; ++k) s.push_back({k, -1});
    return s;
}

// Sections of the plane-pencil blow-ups: two five-fold base points then
// simple ones.
std::vector<SectionSpec> plane_pencil_sections(int n_simple) {
    std::vector<SectionSpec> s{{1, -5}, {2, -5}};
    for (int k = 3; k <= 2 + n_simple; ++k) s.push_back({k, -2});
    return s;
}

CurveClass glue_pair_curve(int i, int j) {
    const SpaceId sp = SpaceId::pointed(10, 10);
    if (i < 1 || j < 1 || i >= j || j > 10)
        throw CalcError(Errc::Unsupported, "OrbitPair labels must satisfy 1 <= i < j <= 10");
    std::map<BasisSymbol, Rat> p;
    p[BasisSymbol::lambda()] = 22;
    p[BasisSymbol::delta_irr()] = 154;
    for (int k = 1; k <= 10; ++k) p[BasisSymbol::psi(k)] = (k == i || k == j) ? 5 : 2;
    p[BasisSymbol::boundary(0, {i, j})] = 2;
    return CurveClass(sp, std::move(p));
}

} // namespace

CurveClass catalog_curve(const std::string& id) {
    const ParsedId pid = parse_id(id);

    if (pid.name == "SpinK3") {
        need_args(pid, 1);
        const int g = pid.args[0];
        if (g < 7 || g > 9)
            throw CalcError(Errc::Unsupported, "SpinK3 is stored for genus 7..9");
        return spin_pencil_curve(g, {{8, 80, {}, {}, 1}, 8 * BLOWN_UP_NODE_BETA0, {}});
    }
    if (pid.name == "Cone4") {
        need_args(pid, 0);
        return spin_pencil_curve(4, {{1, 22, {}, {}, 1}, BLOWN_UP_NODE_BETA0, {}});
    }
    if (pid.name == "Septic8") {
        need_args(pid, 1);
        const int n = pid.args[0];
        if (n < 0 || n > 21)
            throw CalcError(Errc::Unsupported, "Septic8 carries at most the 21 free base points");
        FibrationRecipe r{1, static_cast<int>(noether_c2(1, 9 - 28)), unit_sections(n), {}, 1};
        return surface_pencil_curve(SpaceId::pointed(8, n), r);
    }
    if (pid.name == "SpinDoubleElliptic") {
        need_args(pid, 0);
        return spin_pencil_curve(8, {{2, 38, {}, {}, 1}, 2 * ADMISSIBLE_COVER_BETA0, {}});
    }
    if (pid.name == "K3Pointed") {
        need_args(pid, 1);
        const int g = pid.args[0];
        if (g < 3 || g > 11 || g == 10)
            throw CalcError(Errc::Unsupported,
                            "K3Pointed is stored for genus 3..11 except 10");
        FibrationRecipe r{2, 22 + 2 * g, unit_sections(g), {}, 1};
        return surface_pencil_curve(SpaceId::pointed(g, g), r);
    }
    if (pid.name == "OrbitPair") {
        need_args(pid, 3);
        if (pid.args[0] != 10)
            throw CalcError(Errc::Unsupported, "OrbitPair is stored for genus 10 only");
        return glue_pair_curve(pid.args[1], pid.args[2]);
    }
    if (pid.name == "OrbitAverage") {
        need_args(pid, 1);
        if (pid.args[0] != 10)
            throw CalcError(Errc::Unsupported, "OrbitAverage is stored for genus 10 only");
        std::map<BasisSymbol, Rat> acc;
        for (int i = 1; i <= 10; ++i)
            for (int j = i + 1; j <= 10; ++j) {
                const CurveClass gamma = glue_pair_curve(i, j);
                for (const auto& [sym, v] : gamma.pairings())
                    acc[sym] += v / 90; // 1/(g(g-1)) with g = 10
            }
        return CurveClass(SpaceId::pointed(10, 10), std::move(acc));
    }
    if (pid.name == "RT") {
        need_args(pid, 1);
        const int c = pid.args[0];
        if (c < 2 || c > 11)
            throw CalcError(Errc::Unsupported, "RT label sets have 2..11 elements");
        const SpaceId sp = SpaceId::pointed(11, 11);
        std::map<BasisSymbol, Rat> p;
        p[BasisSymbol::lambda()] = 12;
        p[BasisSymbol::delta_irr()] = 84;
        std::vector<int> t;
        for (int k = 1; k <= c; ++k) t.push_back(k);
        p[BasisSymbol::boundary(0, t)] = -1;
        for (int k = c + 1; k <= 11; ++k) p[BasisSymbol::psi(k)] = 1;
        return CurveClass(sp, std::move(p));
    }
    if (pid.name == "Lefschetz11") {
        need_args(pid, 0);
        return surface_pencil_curve(SpaceId::pointed(11, 0), {2, 44, {}, {}, 1});
    }
    if (pid.name == "SexticU") {
        need_args(pid, 0);
        FibrationRecipe r{6, 66, plane_pencil_sections(11),
                          {{BasisSymbol::boundary(0, {1, 2}), 2}}, 1};
        auto gamma = surface_pencil_curve(SpaceId::pointed(5, 13), r);
        return base_change_curve(gamma, 6, {{14, 0, 10}});
    }
    if (pid.name == "Glue78") {
        need_args(pid, 1);
        const int n = pid.args[0];
        if (n < 0 || n > 21)
            throw CalcError(Errc::Unsupported, "Glue78 is stored for 0..21 sections");
        const SpaceId sp = SpaceId::pointed(8, n);
        std::map<BasisSymbol, Rat> p;
        p[BasisSymbol::delta_irr()] = -14;
        p[BasisSymbol::boundary(1, {})] = 1;
        for (int k = 1; k <= n; ++k) p[BasisSymbol::psi(k)] = 1;
        return CurveClass(sp, std::move(p));
    }
    if (pid.name == "SepticsG7A") {
        need_args(pid, 0);
        FibrationRecipe r{8, 82, plane_pencil_sections(10),
                          {{BasisSymbol::boundary(0, {1, 2}), 2}}, 1};
        auto mid = surface_pencil_curve(SpaceId::pointed(7, 12), r);
        return base_change_curve(mid, 7, {{13, -12, 12}});
    }
    if (pid.name == "SepticsG7B") {
        need_args(pid, 0);
        FibrationRecipe r{1, 29, unit_sections(13), {}, 1};
        return surface_pencil_curve(SpaceId::pointed(7, 13), r);
    }
    if (pid.name == "TwoPointTest") {
        need_args(pid, 1);
        const int g = pid.args[0];
        const SpaceId sp = SpaceId::pointed(g, 2);
        return CurveClass(sp, {{BasisSymbol::psi(1), 1},
                               {BasisSymbol::psi(2), 2 * g - 1},
                               {BasisSymbol::boundary(0, {1, 2}), 1}});
    }
    throw CalcError(Errc::UnknownId, "no catalog curve named '" + pid.name + "'");
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"SpinK3(g)", "S+(g), g = 7..9",
         "pencil of spin curves on a blown-up canonical surface of Euler characteristic 8"},
        {"Cone4", "S+(4)",
         "genus-4 spin pencil on a blown-up quadric cone resolution"},
        {"Septic8(n)", "M(8,n), n = 0..21",
         "pencil of septic plane curves with seven assigned nodes and n free base-point sections"},
        {"SpinDoubleElliptic", "S+(8)",
         "spin pencil on a blown-up double cover of an elliptic ruled surface"},
        {"K3Pointed(g)", "M(g,g), g = 3..11, g != 10",
         "pencil of hyperplane curves on a polarized K3 surface, all base points promoted"},
        {"OrbitPair(10,i,j)", "M(10,10)",
         "two half-pencils glued along the labels i and j"},
        {"OrbitAverage(10)", "M(10,10)",
         "symmetrized average of the OrbitPair curves over all label pairs"},
        {"RT(c)", "M(11,11), c = 2..11",
         "attach a fixed c-pointed rational tail to a Lefschetz pencil member at a moving point"},
        {"Lefschetz11", "M(11,0)",
         "Lefschetz pencil of genus-11 hyperplane curves on a K3 surface"},
        {"SexticU", "M(5,14)",
         "sextic plane pencil with two five-fold points, pulled back by a degree-6 base change"},
        {"Glue78(n)", "M(8,n), n = 0..21",
         "glue a moving point of a genus-7 curve to a fixed elliptic tail"},
        {"SepticsG7A", "M(7,13)",
         "septic plane pencil with two five-fold points, degree-7 base change, multisection promoted"},
        {"SepticsG7B", "M(7,13)",
         "pencil of septics with eight assigned nodes and thirteen base-point sections"},
        {"TwoPointTest(g)", "M(g,2)",
         "fixed general curve with one fixed and one moving labelled point"},
    };
    return entries;
}

} // namespace picalc
