#include "picalc/dsl.hpp"

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "picalc/basis.hpp"
#include "picalc/catalog.hpp"
#include "picalc/detail/memo.hpp"
#include "picalc/error.hpp"
#include "picalc/maps.hpp"

namespace picalc {

namespace {

struct Token {
    enum class Kind { Num, Ident, Punct, Ellipsis, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

[[noreturn]] void syntax_error(const std::string& what, const Token& tok) {
    const std::string found =
        tok.kind == Token::Kind::End ? "end of input" : "'" + tok.text + "'";
    throw CalcError(Errc::SyntaxError, what + " at offset " +
                                           std::to_string(tok.pos) + ", found " +
                                           found);
}

[[noreturn]] void type_error(const std::string& what, std::size_t pos) {
    throw CalcError(Errc::TypeError,
                    what + " (at offset " + std::to_string(pos) + ")");
}

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Kind::Num, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i + 1;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                                    s[j] == '_'))
                ++j;
            out.push_back({Token::Kind::Ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (c == '.') {
            if (s.compare(i, 3, "...") == 0) {
                out.push_back({Token::Kind::Ellipsis, "...", i});
                i += 3;
                continue;
            }
            throw CalcError(Errc::SyntaxError,
                            "stray '.' at offset " + std::to_string(i));
        }
        if (std::string("+-*/(){}:,=^").find(static_cast<char>(c)) !=
            std::string::npos) {
            out.push_back({Token::Kind::Punct, std::string(1, s[i]), i});
            ++i;
            continue;
        }
        throw CalcError(Errc::SyntaxError, "unexpected character '" +
                                               std::string(1, s[i]) +
                                               "' at offset " + std::to_string(i));
    }
    out.push_back({Token::Kind::End, "", s.size()});
    return out;
}

using Value = std::variant<Rat, DivisorClass>;

bool is_named_class(const std::string& n) {
    return n == "theta" || n == "K_spin" || n == "K" || n == "bn" || n == "Dg" ||
           n == "node" || n == "cusp";
}

bool is_map_name(const std::string& n) {
    return n == "pi" || n == "phi" || n == "phi12" || n == "j";
}

class Parser {
public:
    Parser(const std::string& text, SpaceId space)
        : toks_(lex(text)), space_(space) {}

    DivisorClass run_class() {
        Value v = expr();
        bool partial = false;
        if (at_punct('-') && toks_[i_ + 1].kind == Token::Kind::Ellipsis) {
            i_ += 2;
            partial = true;
        }
        if (cur().kind != Token::Kind::End)
            syntax_error("expected '+', '-', '*' or end of expression", cur());
        DivisorClass d = to_class(std::move(v), 0);
        if (partial) d = widen_unknown(d);
        return d;
    }

    CurveClass run_curve() {
        if (cur().kind == Token::Kind::End) return CurveClass::zero(space_);
        if (cur().kind == Token::Kind::Num && cur().text == "0" &&
            toks_[i_ + 1].kind == Token::Kind::End)
            return CurveClass::zero(space_);
        std::map<BasisSymbol, Rat> p;
        while (true) {
            const Token head = cur();
            const BasisSymbol sym = curve_symbol();
            expect_punct('=', "after the symbol");
            Rat v = signed_number();
            if (p.contains(sym))
                syntax_error("duplicate assignment for '" + sym.str() + "'", head);
            p.emplace(sym, std::move(v));
            if (at_punct(',')) {
                ++i_;
                continue;
            }
            break;
        }
        if (cur().kind != Token::Kind::End)
            syntax_error("expected ',' or end of input", cur());
        return CurveClass(space_, std::move(p));
    }

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;
    SpaceId space_;
    std::set<BasisSymbol> mentioned_;

    const Token& cur() const { return toks_[i_]; }

    bool at_punct(char c) const {
        return cur().kind == Token::Kind::Punct && cur().text[0] == c;
    }

    void expect_punct(char c, const std::string& where) {
        if (!at_punct(c))
            syntax_error(std::string("expected '") + c + "' " + where, cur());
        ++i_;
    }

    int expect_int(const std::string& what) {
        if (cur().kind != Token::Kind::Num || cur().text.size() > 6)
            syntax_error("expected " + what, cur());
        const int v = std::stoi(cur().text);
        ++i_;
        return v;
    }

    // ---- values ----------------------------------------------------

    DivisorClass to_class(Value v, std::size_t pos) {
        if (std::holds_alternative<DivisorClass>(v))
            return std::get<DivisorClass>(std::move(v));
        if (std::get<Rat>(v) == 0) return DivisorClass::zero(space_);
        type_error("a bare number is not a class", pos);
    }

    Value mul(Value a, Value b, std::size_t pos) {
        if (std::holds_alternative<Rat>(a) && std::holds_alternative<Rat>(b))
            return Rat(std::get<Rat>(a) * std::get<Rat>(b));
        if (std::holds_alternative<DivisorClass>(a) &&
            std::holds_alternative<DivisorClass>(b))
            type_error("cannot multiply two classes", pos);
        const Rat s = std::holds_alternative<Rat>(a) ? std::get<Rat>(a)
                                                     : std::get<Rat>(b);
        const DivisorClass& c = std::holds_alternative<Rat>(a)
                                    ? std::get<DivisorClass>(b)
                                    : std::get<DivisorClass>(a);
        return combine(space_, {{s, c}});
    }

    Value negate(Value v) {
        if (std::holds_alternative<Rat>(v)) return Rat(-std::get<Rat>(v));
        return combine(space_, {{-1, std::get<DivisorClass>(v)}});
    }

    // ---- grammar ---------------------------------------------------

    Value expr() {
        Value v = term();
        if (!(at_punct('+') || at_punct('-'))) return v;
        // Sums are merged once at the end rather than once per operator;
        // the per-merge cost scales with the boundary basis, which is
        // exponential in the number of marked points. Numbers keep a
        // running scalar total until the first class summand appears;
        // from then on every number summand must be zero, exactly as if
        // the sum had been folded pairwise left to right.
        std::vector<std::pair<Rat, DivisorClass>> parts;
        Rat scalar = 0;
        bool is_class = false;
        const auto take = [&](Value val, bool minus, std::size_t pos) {
            if (std::holds_alternative<Rat>(val)) {
                const Rat r = std::get<Rat>(val);
                if (!is_class) scalar += minus ? -r : r;
                else if (r != 0) type_error("a bare number is not a class", pos);
                return;
            }
            if (!is_class) {
                if (scalar != 0) type_error("a bare number is not a class", pos);
                is_class = true;
            }
            parts.emplace_back(minus ? Rat(-1) : Rat(1),
                               std::get<DivisorClass>(std::move(val)));
        };
        take(std::move(v), false, cur().pos);
        while (at_punct('+') || at_punct('-')) {
            if (at_punct('-') && toks_[i_ + 1].kind == Token::Kind::Ellipsis)
                break; // the partial marker belongs to the caller
            const bool minus = cur().text[0] == '-';
            const std::size_t pos = cur().pos;
            ++i_;
            take(term(), minus, pos);
        }
        if (!is_class) return scalar;
        return combine(space_, parts);
    }

    Value term() {
        Value v = factor();
        while (at_punct('*')) {
            const std::size_t pos = cur().pos;
            ++i_;
            Value rhs = factor();
            v = mul(std::move(v), std::move(rhs), pos);
        }
        return v;
    }

    Value factor() {
        if (at_punct('-')) {
            ++i_;
            return negate(factor());
        }
        return primary();
    }

    Value primary() {
        const Token t = cur();
        if (t.kind == Token::Kind::Num) {
            ++i_;
            Rat v(t.text);
            if (at_punct('/')) {
                ++i_;
                const Token& den = cur();
                if (den.kind != Token::Kind::Num)
                    syntax_error("expected a denominator", den);
                if (den.text.find_first_not_of('0') == std::string::npos)
                    syntax_error("zero denominator", den);
                v /= Rat(den.text);
                ++i_;
            }
            return v;
        }
        if (t.kind == Token::Kind::Punct && t.text[0] == '(') {
            ++i_;
            Value v = expr();
            expect_punct(')', "to close the parenthesis");
            return v;
        }
        if (t.kind == Token::Kind::Ident) return ident_primary();
        syntax_error("expected an expression", t);
    }

    Value ident_primary() {
        const Token t = cur();
        if (const auto sym = simple_symbol(t)) {
            ++i_;
            return unit(*sym, t.pos);
        }
        if (t.text == "d") {
            ++i_;
            return boundary_primary(t.pos);
        }
        if (is_named_class(t.text)) {
            ++i_;
            return named_primary(t.text, t.pos);
        }
        if (is_map_name(t.text)) {
            ++i_;
            return map_primary(t.text, t.pos);
        }
        syntax_error("unknown name '" + t.text + "'", t);
    }

    std::optional<BasisSymbol> simple_symbol(const Token& t) const {
        const std::string& n = t.text;
        if (n == "l" || n == "la") return BasisSymbol::lambda();
        if (n == "dirr") return BasisSymbol::delta_irr();
        if (n.starts_with("psi_")) return BasisSymbol::psi(suffix_int(t, 4));
        if (n.starts_with("a_")) return BasisSymbol::alpha(suffix_int(t, 2));
        if (n.starts_with("b_")) return BasisSymbol::beta(suffix_int(t, 2));
        return std::nullopt;
    }

    static int suffix_int(const Token& t, std::size_t from) {
        const std::string digits = t.text.substr(from);
        if (digits.empty() || digits.size() > 6 ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            syntax_error("expected digits after '" + t.text.substr(0, from) + "'",
                         t);
        return std::stoi(digits);
    }

    Value unit(const BasisSymbol& sym, std::size_t pos) {
        try {
            require_symbol(space_, sym);
        } catch (const CalcError& e) {
            type_error(e.what(), pos);
        }
        mentioned_.insert(sym);
        return DivisorClass(space_, {{sym, 1}});
    }

    // d{i:}, d{i:{labels}} or the aggregate d{i:c}; the 'd' ident is
    // already consumed.
    Value boundary_primary(std::size_t dpos) {
        expect_punct('{', "after 'd'");
        const int i = expect_int("a genus part");
        expect_punct(':', "after the genus part");
        if (at_punct('}')) {
            ++i_;
            return unit(canon(i, {}, dpos), dpos);
        }
        if (cur().kind == Token::Kind::Num) {
            const int c = expect_int("a label count");
            expect_punct('}', "to close the subscript");
            try {
                DivisorClass agg = expand_aggregate(space_, i, c);
                for (const auto& [s, v] : agg.terms()) mentioned_.insert(s);
                return agg;
            } catch (const CalcError& e) {
                type_error(e.what(), dpos);
            }
        }
        expect_punct('{', "to open the label set");
        std::vector<int> labels;
        labels.push_back(expect_int("a label"));
        while (at_punct(',')) {
            ++i_;
            labels.push_back(expect_int("a label"));
        }
        expect_punct('}', "to close the label set");
        expect_punct('}', "to close the subscript");
        return unit(canon(i, std::move(labels), dpos), dpos);
    }

    BasisSymbol canon(int i, std::vector<int> labels, std::size_t pos) {
        try {
            return canonicalize_boundary(space_, i, std::move(labels));
        } catch (const CalcError& e) {
            type_error(e.what(), pos);
        }
    }

    Value named_primary(const std::string& name, std::size_t pos) {
        expect_punct('(', "after '" + name + "'");
        std::vector<int> args;
        args.push_back(expect_int("a parameter"));
        while (at_punct(',')) {
            ++i_;
            args.push_back(expect_int("a parameter"));
        }
        expect_punct(')', "to close the parameter list");

        const std::size_t want = name == "K" ? 2 : 1;
        if (args.size() != want)
            type_error("'" + name + "' takes " + std::to_string(want) +
                           " parameter(s)",
                       pos);
        DivisorClass d = DivisorClass::zero(space_);
        try {
            if (name == "theta") d = theta_null_class(args[0]);
            else if (name == "K_spin") d = canonical_spin_class(args[0]);
            else if (name == "K") d = canonical_mgn_class(args[0], args[1]);
            else if (name == "bn") d = bn_class(args[0]);
            else if (name == "Dg") d = pointed_pencil_class(args[0]);
            else if (name == "node") d = node_class(args[0]);
            else d = cusp_class(args[0]);
        } catch (const CalcError& e) {
            type_error(e.what(), pos);
        }
        if (!(d.space() == space_))
            type_error("'" + name + "(...)' lives on " + d.space().str() +
                           ", the expression elaborates on " + space_.str(),
                       pos);
        return d;
    }

    Value map_primary(const std::string& name, std::size_t pos) {
        expect_punct('^', "after '" + name + "'");
        expect_punct('*', "in the pullback marker");
        expect_punct('(', "after '" + name + "^*'");

        const SpaceId outer = space_;
        space_ = map_source(name, pos);
        // Symbols written inside the argument live on the source space;
        // they do not count as mentioned on the outer space.
        std::set<BasisSymbol> outer_mentioned = std::move(mentioned_);
        mentioned_.clear();
        Value arg = expr();
        DivisorClass on_source = to_class(std::move(arg), pos);
        space_ = outer;
        mentioned_ = std::move(outer_mentioned);
        expect_punct(')', "to close the pullback");

        try {
            if (name == "pi") return spin_pullback(on_source);
            if (name == "phi") return forgetful_pullback(on_source, space_.n);
            if (name == "phi12") return two_point_pullback(on_source, space_.n);
            return elliptic_tail_pullback(on_source);
        } catch (const CalcError& e) {
            type_error(e.what(), pos);
        }
    }

    SpaceId map_source(const std::string& name, std::size_t pos) const {
        if (name == "pi") {
            if (space_.kind != SpaceId::Kind::EvenSpin)
                type_error("pi^* produces classes on a spin space, not " +
                               space_.str(),
                           pos);
            return SpaceId::pointed(space_.g, 0);
        }
        if (space_.kind != SpaceId::Kind::PointedCurves)
            type_error("'" + name + "^*' produces classes on a pointed space, not " +
                           space_.str(),
                       pos);
        if (name == "phi") return SpaceId::pointed(space_.g, 0);
        if (name == "phi12") {
            if (space_.n < 2)
                type_error("phi12^* needs at least two labels on " + space_.str(),
                           pos);
            return SpaceId::pointed(space_.g, 2);
        }
        if (space_.n != 1)
            type_error("j^* produces classes on a one-pointed space, not " +
                           space_.str(),
                       pos);
        return SpaceId::pointed(space_.g + 1, 0);
    }

    // ---- curves ----------------------------------------------------

    BasisSymbol curve_symbol() {
        const Token t = cur();
        if (t.kind != Token::Kind::Ident)
            syntax_error("expected a symbol", t);
        if (const auto sym = simple_symbol(t)) {
            ++i_;
            try {
                require_symbol(space_, *sym);
            } catch (const CalcError& e) {
                type_error(e.what(), t.pos);
            }
            return *sym;
        }
        if (t.text == "d") {
            ++i_;
            expect_punct('{', "after 'd'");
            const int i = expect_int("a genus part");
            expect_punct(':', "after the genus part");
            if (at_punct('}')) {
                ++i_;
                return canon(i, {}, t.pos);
            }
            if (cur().kind == Token::Kind::Num)
                syntax_error("aggregate subscripts cannot be assigned", cur());
            expect_punct('{', "to open the label set");
            std::vector<int> labels;
            labels.push_back(expect_int("a label"));
            while (at_punct(',')) {
                ++i_;
                labels.push_back(expect_int("a label"));
            }
            expect_punct('}', "to close the label set");
            expect_punct('}', "to close the subscript");
            return canon(i, std::move(labels), t.pos);
        }
        syntax_error("expected a symbol, not '" + t.text + "'", t);
    }

    Rat signed_number() {
        bool minus = false;
        if (at_punct('-')) {
            minus = true;
            ++i_;
        }
        const Token& t = cur();
        if (t.kind != Token::Kind::Num) syntax_error("expected a number", t);
        Rat v(t.text);
        ++i_;
        if (at_punct('/')) {
            ++i_;
            const Token& den = cur();
            if (den.kind != Token::Kind::Num)
                syntax_error("expected a denominator", den);
            if (den.text.find_first_not_of('0') == std::string::npos)
                syntax_error("zero denominator", den);
            v /= Rat(den.text);
            ++i_;
        }
        return minus ? Rat(-v) : v;
    }

    DivisorClass widen_unknown(const DivisorClass& d) const {
        std::set<BasisSymbol> known;
        for (const auto& [s, v] : d.terms()) known.insert(s);
        for (const auto& s : mentioned_)
            if (d.knows(s)) known.insert(s);
        std::set<BasisSymbol> unknown;
        for (const auto& s : enumerate_symbols(space_))
            if (!known.contains(s)) unknown.insert(s);
        return DivisorClass(space_, d.terms(), std::move(unknown));
    }
};

} // namespace

DivisorClass parse_class(const std::string& text, const SpaceId& space) {
    // The audit and the test suites evaluate some long expressions on
    // many-pointed spaces several times over; identical text on the same
    // space always denotes the same class, so parses are cached. Failed
    // parses are not cached and throw every time.
    static detail::ClassMemo memo;
    return memo.get(space.str() + '|' + text,
                    [&] { return Parser(text, space).run_class(); });
}

CurveClass parse_curve(const std::string& text, const SpaceId& space) {
    return Parser(text, space).run_curve();
}

std::string render_class(const DivisorClass& d) {
    std::string out;
    for (const auto& [sym, c] : d.terms()) {
        const bool neg = c < 0;
        const Rat a = neg ? Rat(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (a != 1) out += rat_to_string(a) + "*";
        out += sym.str();
    }
    if (out.empty()) out = "0";
    if (!d.fully_known()) out += " - ...";
    return out;
}

std::string render_curve(const CurveClass& c) {
    std::string out;
    for (const auto& [sym, v] : c.pairings()) {
        if (!out.empty()) out += ", ";
        out += sym.str() + "=" + rat_to_string(v);
    }
    return out.empty() ? "0" : out;
}

} // namespace picalc
