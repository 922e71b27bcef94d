#pragma once

#include <string>

#include "picalc/classes.hpp"

namespace picalc {

// A pencil of curves on a fibered surface, recorded by the numerical data
// of the fully blown-up surface. The curve's pairings follow from it:
//   lambda  = d (chi + g - 1)
//   total boundary = d (c2 + 4(g - 1))
//   psi_label = -(section self-intersection)
//   dirr    = total - sum of the explicit boundary hits.
struct SectionSpec {
    int label = 0;
    long self_intersection = 0;
};

struct FibrationRecipe {
    int chi = 0;
    int c2 = 0;
    std::vector<SectionSpec> sections;
    std::vector<std::pair<BasisSymbol, Rat>> boundary_hits;
    int base_change_degree = 1;
};

// Noether bookkeeping: c2 = 12 chi - K^2. Blowing up once sends
// (chi, K^2) to (chi, K^2 - 1) and so c2 to c2 + 1.
long noether_c2(long chi, long k_squared);

CurveClass surface_pencil_curve(const SpaceId& space, const FibrationRecipe& r);

// Spin pencils: no sections, and the boundary degree splits as
// a_0 + 2 b_0 = total, with b_0 supplied by the construction.
struct SpinFibrationRecipe {
    FibrationRecipe base;
    Rat beta0 = 0;
    std::vector<std::pair<BasisSymbol, Rat>> higher_hits; // a_i / b_i, i >= 1
};

// b_0 multiplicities the catalog's spin recipes are assembled from: a
// blown-up node of the spin fibre counts once; a fibre replaced by an
// admissible double cover of a one-nodal curve counts 7/2.
inline const Rat BLOWN_UP_NODE_BETA0 = 1;
inline const Rat ADMISSIBLE_COVER_BETA0 = Rat(7, 2);

CurveClass spin_pencil_curve(int g, const SpinFibrationRecipe& r);

// Pull a pencil back along a degree-d base change and promote a
// multisection to honest sections: every pairing scales by d and each
// promoted label k gains psi_k = -(self-intersection on the cover) +
// (ramification contribution).
struct PromotedSection {
    int label = 0;
    long self_intersection = 0;
    long ramification = 0;
};

CurveClass base_change_curve(const CurveClass& curve, int degree,
                             const std::vector<PromotedSection>& promoted);

// The built-in test curves, by stable string id ("Cone4", "RT(5)",
// "OrbitPair(10,2,7)", ...). UnknownId if the name does not resolve;
// Unsupported if the parameters leave the stored range.
CurveClass catalog_curve(const std::string& id);

struct CatalogEntry {
    std::string pattern;  // e.g. "SpinK3(g)"
    std::string space;    // e.g. "S+(g), g = 7..9"
    std::string summary;
};

const std::vector<CatalogEntry>& catalog_entries();

} // namespace picalc
