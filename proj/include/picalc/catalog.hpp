#pragma once

#include "picalc/classes.hpp"

namespace picalc {

// Named divisor classes. Each constructor returns the class in the basis
// of its space; callers never assemble these coefficient tables by hand.

// The theta-null class on S+(g):
// (1/4) l - (1/16) a_0 - (1/2) (b_1 + ... + b_{g/2}).
DivisorClass theta_null_class(int g);

// Canonical class of S+(g):
// 13 l - 2 a_0 - 3 b_0 - 2 sum_{i>=1} (a_i + b_i) - (a_1 + b_1).
DivisorClass canonical_spin_class(int g);

// Canonical class of M(g,n):
// 13 l + sum psi_k - 2 dirr - 2 sum_{canonical (i,T)} d{i:T} - sum_T d{1:T},
// the last sum running over every label subset.
DivisorClass canonical_mgn_class(int g, int n);

// The even-ramification divisor class on M(g,0) for the three genera with
// a printed expansion (7, 8 and 11); Unsupported otherwise.
DivisorClass bn_class(int g);

// The pointed pencil divisor on M(g,g), g >= 3:
// -l + sum psi_k - sum_{canonical (i,T)} C(| |T| - i | + 1, 2) d{i:T}.
// The binomial weight agrees on the two presentations of every symbol;
// the implementation asserts that.
DivisorClass pointed_pencil_class(int g);

// Normalizing constant for the singular-curve classes below. Defined for
// g >= 4 with g = 1 mod 3, where d = (2g+7)/3:
// 24 (g-2)! / ((g-d+5)! (g-d+3)! (g-d+1)!).
Rat c_const(int g);

// Nodal-curve class on M(g,2), known only on lambda, psi_1, psi_2, dirr
// and d{0:{1,2}} (partial class):
// c_g [ (g+4) l + ((g+2)/6)(psi_1 + psi_2) - ((g+2)/6) dirr - g d{0:{1,2}} ].
DivisorClass node_class(int g);

// Cuspidal-curve class on M(g,1), fully known:
// c_g [ (g+4) l + g psi_1 - ((g+2)/6) dirr
//       - sum_{i=1}^{g-1} (i+1)(g-i) d{i:{1}} ]   (presentations canonical).
DivisorClass cusp_class(int g);

// The second-Chern-style pairing of the nodal locus construction:
// -2 (c_g (g-d+5) / 4) + (d-1) (3 g c_g / 4)  with d = (2g+7)/3.
Rat node_c2_pairing(int g);

// The two effective combinations used on M(11,0):
// B = bn + 4 d{3:} + 7 d{4:} + 8 d{5:}, and
// b_prime(a_1..a_5) = 2 bn + sum a_i d{i:}, all a_i >= 0.
DivisorClass b_class_11();
DivisorClass b_prime_class_11(const Rat& a1, const Rat& a2, const Rat& a3,
                              const Rat& a4, const Rat& a5);

} // namespace picalc
