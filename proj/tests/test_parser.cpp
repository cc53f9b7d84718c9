#include "doctest.h"

#include "schsym/parser.hpp"
#include "schsym/printer.hpp"
#include "schsym/reps.hpp"

#include "support/gen.hpp"

using namespace schsym;

namespace {

const SymbolTable& table() { return rep_symbols(); }

DiffOp parse(const std::string& s) { return parse_expr(s, table()); }

}  // namespace

TEST_CASE("composition in the source text is operator composition") {
    CHECK(parse("Dx*x") == parse("x*Dx + 1"));
    CHECK(parse("Dt*t^2") == parse("t^2*Dt + 2*t"));
    CHECK(parse("Dx^2*x") == parse("x*Dx^2 + 2*Dx"));
    CHECK(format_expr(parse("Dx*x"), table()) == "x*Dx + 1");
}

TEST_CASE("precedence and grouping") {
    CHECK(parse("2*a + 3*a") == parse("5*a"));
    CHECK(parse("-t^2") == parse("-(t^2)"));
    CHECK(parse("(Dt + Dx)*(t + x)") == parse("Dt*t + Dt*x + Dx*t + Dx*x"));
    CHECK(parse("1/2*x") == parse("x/2"));
    CHECK(parse("x^2/(4*a)") == parse("1/4*a^-1*x^2"));
    CHECK(parse("a^-2") == parse("1/(a^2)"));
}

TEST_CASE("exponentials parse with linear-in-t and x^2 arguments") {
    DiffOp e = parse("exp(4*a*nu*t)");
    ExpArg arg = ExpArg::single(Rational(4), Monomial::sym(sym::a) * Monomial::sym(sym::nu),
                                ExpBase::t);
    CHECK(e == DiffOp::from_ring(RingElement::exponential(arg)));

    CHECK(parse("exp(nu*x^2)*exp(-nu*x^2)") == DiffOp::identity());
    CHECK(parse("exp(nu*t + nu*x^2)") == parse("exp(nu*t)*exp(nu*x^2)"));

    // Arguments outside that family are rejected.
    CHECK_THROWS_AS(parse("exp(x)"), ParseError);
    CHECK_THROWS_AS(parse("exp(t^2)"), ParseError);
    CHECK_THROWS_AS(parse("exp(Dt)"), ParseError);
}

TEST_CASE("errors carry 1-based token positions") {
    try {
        parse("Dt Dt +");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.token_index() == 2);
        CHECK(e.offset() == 3);
    }

    try {
        parse("t + + x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.token_index() == 3);
    }

    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("(t + x"), ParseError);
    CHECK_THROWS_AS(parse("q"), ParseError);         // undeclared symbol
    CHECK_THROWS_AS(parse("t^x"), ParseError);       // exponent must be an integer
    CHECK_THROWS_AS(parse("1/(t + x)"), ParseError); // no ring inverse
}

TEST_CASE("round trip: parse after format is the identity") {
    gen::Gen g(510);
    for (int k = 0; k < 1000; ++k) {
        DiffOp p = g.op(3, 2, 2);
        CHECK(parse(format_expr(p, table())) == p);
    }
    CHECK(parse(format_expr(DiffOp::zero(), table())).is_zero());
}

TEST_CASE("definition files bind names to operators") {
    DefFile defs = parse_defs(
        "# sample\n"
        "symbols: a nu omega u b\n"
        "\n"
        "ham = Dt + a*Dx^2   # free evolution\n"
        "dil = t*Dt + 1/2*x*Dx + 1/4\n");
    REQUIRE(defs.entries.size() == 2);
    CHECK(defs.symbols.index("omega").has_value());
    REQUIRE(defs.find("ham") != nullptr);
    CHECK(*defs.find("ham") ==
          DiffOp::d_t() + DiffOp::term(RingElement::symbol(sym::a), 0, 2));
    CHECK(defs.find("nope") == nullptr);
    CHECK(*defs.find("dil") == build_rep(RepCase::constant).op("z_0"));
}

TEST_CASE("fixture files reproduce the built-in representations") {
    const std::string dir = SCHSYM_FIXTURE_DIR;
    const std::pair<const char*, RepCase> cases[] = {
        {"/constant.def", RepCase::constant},
        {"/linear.def", RepCase::linear},
        {"/quadratic.def", RepCase::quadratic},
    };
    for (const auto& [file, rc] : cases) {
        CAPTURE(file);
        DefFile defs = load_defs(dir + file);
        NamedBasis rep = build_rep(rc);
        REQUIRE(defs.entries.size() == rep.size());
        for (const auto& elem : rep) {
            const DiffOp* parsed = defs.find(elem.name);
            REQUIRE(parsed != nullptr);
            CHECK(*parsed == elem.op);
        }
    }
}
