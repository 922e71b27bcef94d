#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "picalc/claims.hpp"
#include "picalc/cli.hpp"
#include "picalc/pencils.hpp"

using namespace picalc;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("eval prints the canonical class") {
    const CliRun residual =
        cli({"eval", "K_spin(8) - 1/2*pi^*(bn(8)) - 8*theta(8)", "--space", "S+(8)"});
    CHECK(residual.code == 0);
    CHECK(residual.out ==
          "4*a_1 + 8*b_1 + 10*a_2 + 14*b_2 + 13*a_3 + 17*b_3 + 14*a_4 + 18*b_4\n");
    CHECK(residual.err.empty());

    const CliRun zero = cli({"eval", "0"});
    CHECK(zero.code == 0);
    CHECK(zero.out == "0\n");

    // The default space admits plain symbol arithmetic without a flag.
    const CliRun sym = cli({"eval", "2*l - l + dirr - dirr"});
    CHECK(sym.code == 0);
    CHECK(sym.out == "l\n");
}

TEST_CASE("eval rejects bad input with exit 2") {
    const CliRun undefined = cli({"eval", "bn(9)"});
    CHECK(undefined.code == 2);
    CHECK(undefined.out.empty());
    CHECK(undefined.err.find("Unsupported") != std::string::npos);

    const CliRun syntax = cli({"eval", "l +", "--space", "M(8,0)"});
    CHECK(syntax.code == 2);
    CHECK(syntax.err.find("SyntaxError") != std::string::npos);

    const CliRun space = cli({"eval", "l", "--space", "Q(3)"});
    CHECK(space.code == 2);
    CHECK(space.err.find("bad space") != std::string::npos);
}

TEST_CASE("pair prints exact rationals") {
    const CliRun theta = cli({"pair", "SpinDoubleElliptic", "theta(8)", "--space", "S+(8)"});
    CHECK(theta.code == 0);
    CHECK(theta.out == "-1\n");

    const CliRun lefschetz =
        cli({"pair", "Lefschetz11",
             "2*bn(11) + 62*d{1:} + 61*d{2:} + 58*d{3:} + 54*d{4:} + 49*d{5:}",
             "--space", "M(11,0)"});
    CHECK(lefschetz.code == 0);
    CHECK(lefschetz.out == "0\n");

    const CliRun zero_curve = cli({"pair", "0", "22*l - 3*dirr", "--space", "M(8,0)"});
    CHECK(zero_curve.code == 0);
    CHECK(zero_curve.out == "0\n");

    // Fractional pairings print as p/q, never as decimals.
    const CliRun fractional =
        cli({"pair", "SpinK3(8)", "1/32*a_0", "--space", "S+(8)"});
    CHECK(fractional.code == 0);
    CHECK(fractional.out == "23/8\n");

    const CliRun unknown = cli({"pair", "NoSuchCurve(3)", "l", "--space", "M(8,0)"});
    CHECK(unknown.code == 2);
    CHECK(!unknown.err.empty());
}

TEST_CASE("verify audits the ledger") {
    const CliRun full = cli({"verify"});
    CHECK(full.code == 0);  // clean: allowlisted mismatches are expected
    CHECK(full.out.find("83 claims: 78 matched, 0 mismatched, 3 allowlisted "
                        "mismatches, 2 skipped, 0 errors") != std::string::npos);

    const CliRun spin = cli({"verify", "--filter", "thm1.5.*"});
    CHECK(spin.code == 0);
    CHECK(spin.out.find("4 claims: 4 matched") != std::string::npos);
    CHECK(spin.out.find("thm1.5.theta.pairing = -2") != std::string::npos);

    // Allowlisted mismatches report both values side by side.
    const CliRun g7 = cli({"verify", "--filter", "g7.*"});
    CHECK(g7.code == 0);
    CHECK(g7.out.find("MISMATCH-ALLOWLISTED") != std::string::npos);
    CHECK(g7.out.find("(-14, 28, -28)") != std::string::npos);
    CHECK(g7.out.find("(-1, 2, -2)") != std::string::npos);

    const CliRun empty = cli({"verify", "--filter", "no.such.claim"});
    CHECK(empty.code == 0);
    CHECK(empty.out.find("0 claims") != std::string::npos);
}

TEST_CASE("verify emits parseable JSON") {
    const CliRun json = cli({"verify", "--format", "json"});
    CHECK(json.code == 0);
    const Report parsed = report_from_json(json.out);
    CHECK(parsed == run_claims("*"));

    const CliRun filtered =
        cli({"verify", "--filter", "gen11.*", "--format", "json"});
    CHECK(filtered.code == 0);
    CHECK(report_from_json(filtered.out) == run_claims("gen11.*"));

    const CliRun bad = cli({"verify", "--format", "yaml"});
    CHECK(bad.code == 2);
}

TEST_CASE("catalog lists the built-in curves") {
    const CliRun list = cli({"catalog", "--list"});
    CHECK(list.code == 0);
    size_t lines = 0;
    for (char ch : list.out) lines += ch == '\n';
    CHECK(lines == catalog_entries().size());
    CHECK(list.out.find("SpinK3(g)\n") != std::string::npos);
    CHECK(list.out.find("Lefschetz11\n") != std::string::npos);

    const CliRun table = cli({"catalog"});
    CHECK(table.code == 0);
    for (const CatalogEntry& e : catalog_entries()) {
        CAPTURE(e.pattern);
        CHECK(table.out.find(e.pattern) != std::string::npos);
        CHECK(table.out.find(e.summary) != std::string::npos);
    }
}

TEST_CASE("usage errors exit 2, help exits 0") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"eval"}).code == 2);             // missing expression
    CHECK(cli({"pair", "Cone4"}).code == 2);    // missing class
    CHECK(cli({"eval", "l", "--bogus"}).code == 2);

    const CliRun help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("eval") != std::string::npos);
    CHECK(help.out.find("verify") != std::string::npos);
}
