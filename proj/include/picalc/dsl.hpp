#pragma once

#include <string>

#include "picalc/classes.hpp"

namespace picalc {

// Text form for divisor classes and curve vectors. The grammar is shipped
// in docs/grammar.md; in short:
//
//   class  := expr [ '-' '...' ]        (the marker makes the class partial:
//                                        only the symbols written out, plus
//                                        the stored keys, stay known)
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := ['-'] primary
//   primary:= number | symbol | named '(' ints ')' | map '^' '*' '(' expr ')'
//           | '(' expr ')'
//   number := digits ['/' digits]
//   symbol := 'l' | 'la' | 'psi_'k | 'dirr' | 'a_'i | 'b_'i
//           | 'd{'i':''}' | 'd{'i':{'k,..'}''}' | 'd{'i':'c'}'
//
// The three boundary spellings are the empty label set, an explicit label
// set, and the aggregate over every label subset of size c. Named classes
// are theta(g), K_spin(g), K(g,n), bn(g), Dg(g), node(g), cusp(g). Maps are
// pi^* (onto S+(g) from M(g,0)), phi^* (onto M(g,n) from M(g,0)), phi12^*
// (onto M(g,n) from M(g,2)) and j^* (onto M(g,1) from M(g+1,0)); the source
// space is inferred from the space the expression elaborates against.
//
// Curves are comma-separated assignments "l=9, a_0=52, b_0=7" against
// explicit symbols; "0" and the empty string are the zero curve.

// Parses and elaborates a class expression on the given space.
// Throws SyntaxError (malformed text) or TypeError (well-formed text that
// does not elaborate on the space); messages cite the offending offset.
DivisorClass parse_class(const std::string& text, const SpaceId& space);

// Parses a curve vector on the given space; errors as parse_class.
CurveClass parse_curve(const std::string& text, const SpaceId& space);

// Canonical text form: terms in basis order, reduced fractions, unit
// coefficients omitted, " - ..." appended to partial classes, "0" for the
// zero class or curve. render/parse round-trips exactly.
std::string render_class(const DivisorClass& d);
std::string render_curve(const CurveClass& c);

} // namespace picalc
