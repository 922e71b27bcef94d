#pragma once

#include "picalc/classes.hpp"

namespace picalc {

// Linear substitution maps between the spaces. Each one applies a fixed
// generator table; coefficients at unknown symbols of a partial input
// stay unknown, and every target symbol reachable from an unknown source
// symbol becomes unknown in the output.

// Pullback along the spin-structure forgetful cover: source M(g,0),
// target S+(g). l -> l, dirr -> a_0 + 2 b_0, d{i:} -> a_i + b_i.
DivisorClass spin_pullback(const DivisorClass& d);

// Degree of that cover: 2^(g-1) (2^g + 1).
Rat spin_cover_degree(int g);

// Pullback along the map forgetting all n labels: source M(g,0), target
// M(g,n). l and dirr pass through; d{i:} spreads over every canonical
// symbol with genus split {i, g-i}.
DivisorClass forgetful_pullback(const DivisorClass& d, int n);

// Pullback along the map remembering only the first two labels: source
// M(g,2), target M(g,n) with n >= 2.
//   psi_j    -> psi_j - sum_{nonempty T in {3..n}} d{0:{j} u T}   (j = 1,2)
//   d{0:{1,2}} -> sum_{T in {3..n}} d{0:{1,2} u T}
//   d{i:T0}  -> sum_{T in {3..n}} d{i:T0 u T}                     (i >= 1)
DivisorClass two_point_pullback(const DivisorClass& d, int n);

// Pullback along the elliptic-tail glueing map: source M(g,0) with
// g >= 3, target M(g-1,1). l and dirr pass through and
// d{1:} -> -psi_1 + d{1:} (the genus-(g-2) presentation reflected); there
// is no rule for d{i:} with i >= 2 (UnsupportedSymbol).
DivisorClass elliptic_tail_pullback(const DivisorClass& d);

// Pushforward of the product with the diagonal wall along the map
// forgetting the second label: source M(g,2), target M(g,1). The
// coefficient table it implements:
//   l -> l, dirr -> dirr, d{0:{1,2}} -> -psi_1, psi_1 and psi_2 -> 0.
// Stored coefficients outside those five symbols have no rule
// (UnsupportedSymbol). For a partial input only l, dirr and psi_1 of the
// output are trusted; everything else becomes unknown.
DivisorClass section_product_pushforward(const DivisorClass& d);

} // namespace picalc
