#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace dixq;

namespace {

using Kn = RatFunc<Rational>;

Poly<Rational> P(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly<Rational>::from_coeffs(std::move(c));
}

} // namespace

TEST_CASE("parser handles the documented grammar", "[cli][parser]") {
    Rational z(0), o(1);
    CHECK(parse_ratfunc_n<Rational>("n+1", z, o) == Kn(P({1, 1})));
    CHECK(parse_ratfunc_n<Rational>("(n^2-1)/(4*n)", z, o) ==
          Kn(P({-1, 0, 1}), P({0, 4})));
    CHECK(parse_ratfunc_n<Rational>("2+3*4^2", z, o) == Kn(Rational(50)));
    CHECK(parse_ratfunc_n<Rational>("2^-1", z, o) == Kn(Rational(1, 2)));
    CHECK(parse_ratfunc_n<Rational>("-n^2", z, o) == Kn(-P({0, 0, 1})));
    CHECK(parse_ratfunc_n<Rational>(" ( n + 1 ) * ( n - 1 ) ", z, o) == Kn(P({-1, 0, 1})));

    // symbolic coefficients
    KcSym c1 = sym_c1(), c2 = sym_c2();
    RatFunc<KcSym> e = parse_ratfunc_n<KcSym>("c1*n^2 + c2", c1, c2);
    CHECK(e == RatFunc<KcSym>(Poly<KcSym>::from_coeffs({c2, KcSym(RatC1(Rational(0))), c1})));
}

TEST_CASE("parser reports byte offsets for errors", "[cli][parser]") {
    Rational z(0), o(1);
    try {
        parse_ratfunc_n<Rational>("n+", z, o);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
    CHECK_THROWS_AS(parse_ratfunc_n<Rational>("n n", z, o), ParseError);     // trailing input
    CHECK_THROWS_AS(parse_ratfunc_n<Rational>("1/(n-n)", z, o), ParseError); // zero division
    CHECK_THROWS_AS(parse_ratfunc_n<Rational>("(n+1", z, o), ParseError);
    CHECK_THROWS_AS(parse_ratfunc_n<Rational>("n^x", z, o), ParseError);
}

TEST_CASE("coefficient strings are canonical and re-parseable", "[cli][format]") {
    Rational z(0), o(1);
    Kn u(P({4, 2}));
    CHECK(coeff_str(u) == "2*n + 4");
    CHECK(parse_ratfunc_n<Rational>(coeff_str(u), z, o) == u);

    Kn r(P({-1, 0, 1}), P({0, 4}));
    CHECK(parse_ratfunc_n<Rational>(coeff_str(r), z, o) == r);

    KcSym c1 = sym_c1(), c2 = sym_c2();
    RatFunc<KcSym> s = parse_ratfunc_n<KcSym>("(c1^2/4 - c2)*n - 1/2", c1, c2);
    CHECK(parse_ratfunc_n<KcSym>(coeff_str(s), c1, c2) == s);
}

TEST_CASE("operator text rendering is stable", "[cli][format]") {
    DiffOp<Rational> op;
    op.set(1, Kn(Rational(1)));
    op.set(-1, Kn(P({2, -1})));
    CHECK(op_text(op) == "T^1: 1\nT^-1: -n + 2\n");
    CHECK(op_latex(op) == "T^{1} + \\left(-n + 2\\right)T^{-1}");
}

TEST_CASE("operators round-trip through JSON", "[cli][format]") {
    Rational z(0), o(1);
    CurveParams<Rational> cv = make_curve(z, o);
    auto [L2, L3] = theorem2_operators(cv);
    for (const DiffOp<Rational>* op : {&L2, &L3}) {
        nlohmann::ordered_json j = op_to_json(*op, "0", "1", "n+1", "n");
        CHECK(j["support"][0] == op->i_min());
        CHECK(j["support"][1] == op->i_max());
        CHECK(j["curve"]["c1"] == "0");
        CHECK(j["params"]["gamma"] == "n");
        DiffOp<Rational> back = op_from_json(j, z, o);
        CHECK(back == *op);
    }

    // symbolic round-trip
    KcSym c1 = sym_c1(), c2 = sym_c2();
    DiffOp<KcSym> golden = golden_L2_symbolic(c1, c2);
    DiffOp<KcSym> back = op_from_json(op_to_json(golden, "sym", "sym", "n+1", "n"), c1, c2);
    CHECK(back == golden);
}

TEST_CASE("reference tables have the expected support", "[cli][format]") {
    DiffOp<Rational> e2 = golden_example_L2_corrected();
    CHECK(e2.i_min() == -2);
    CHECK(e2.i_max() == 2);
    DiffOp<Rational> e3 = golden_example_L3();
    CHECK(e3.i_min() == -3);
    CHECK(e3.i_max() == 3);
    // the two second-order variants differ exactly in the T^-2 coefficient
    DiffOp<Rational> printed = golden_example_L2_printed();
    DiffOp<Rational> diff = e2 - printed;
    CHECK(diff.i_min() == -2);
    CHECK(diff.i_max() == -2);
}
