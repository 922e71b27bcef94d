#pragma once

#include <stdexcept>
#include <string>

namespace picalc {

// Machine-inspectable failure kinds. Every throwing operation in the
// library raises CalcError with one of these codes plus a human message
// naming the offending symbol, index or token span.
enum class Errc {
    SpaceMismatch,       // operands live on different moduli spaces
    UnknownSupport,      // a coefficient outside a partial class's known support was needed
    InvalidIndex,        // genus part, psi label or marked label out of range
    InvalidGenus,        // named class or curve not defined for this genus
    Unsupported,         // requested value is outside the catalog's domain
    UnsupportedSymbol,   // a map has no rule for this generator
    NegativeCoefficient, // a construction requires nonnegative inputs
    NegativeBoundary,    // explicit boundary hits exceed the total boundary degree
    DuplicateLabel,      // a section label or promoted label repeats
    UnknownId,           // catalog id does not resolve
    SyntaxError,         // DSL text failed to tokenize/parse
    TypeError,           // DSL expression is well-formed but ill-typed
    ZeroDelta0,          // slope undefined: no irreducible-boundary coefficient
    SignError,           // slope numerator/denominator not of the required signs
};

const char* errc_name(Errc c);

class CalcError : public std::runtime_error {
public:
    CalcError(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::SpaceMismatch: return "SpaceMismatch";
        case Errc::UnknownSupport: return "UnknownSupport";
        case Errc::InvalidIndex: return "InvalidIndex";
        case Errc::InvalidGenus: return "InvalidGenus";
        case Errc::Unsupported: return "Unsupported";
        case Errc::UnsupportedSymbol: return "UnsupportedSymbol";
        case Errc::NegativeCoefficient: return "NegativeCoefficient";
        case Errc::NegativeBoundary: return "NegativeBoundary";
        case Errc::DuplicateLabel: return "DuplicateLabel";
        case Errc::UnknownId: return "UnknownId";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::TypeError: return "TypeError";
        case Errc::ZeroDelta0: return "ZeroDelta0";
        case Errc::SignError: return "SignError";
    }
    return "CalcError";
}

} // namespace picalc
