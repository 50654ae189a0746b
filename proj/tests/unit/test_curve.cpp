#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace dixq;
using testutil::Rng;

namespace {

KcSym S(long num, long den = 1) { return KcSym(RatC1(Rational(num, den))); }

FieldElement<Rational> random_elem(Rng& rng, const Poly<Rational>& f) {
    return FieldElement<Rational>(rng.ratfunc(2, 1), rng.ratfunc(2, 1), f);
}

} // namespace

TEST_CASE("make_curve rejects singular quartics", "[curve]") {
    CHECK_THROWS_AS(make_curve(Rational(0), Rational(2)), std::domain_error);  // (z^2+1)^2
    CHECK_THROWS_AS(make_curve(Rational(0), Rational(-2)), std::domain_error); // (z^2-1)^2
    CHECK_NOTHROW(make_curve(Rational(0), Rational(1)));
}

TEST_CASE("branch_w_series passes the squaring oracle", "[curve]") {
    CurveParams<Rational> cv = make_curve(Rational(0), Rational(1));
    Laurent<Rational> t = branch_w_series(cv, 4);
    CHECK(t.coeff(0) == Rational(1));
    CHECK(t.coeff(2) == Rational(1, 2));
    CHECK(t.coeff(4) == Rational(3, 8));
    CHECK((t * t - Laurent<Rational>::from_poly(cv.F(), 4)).is_zero_to_order());

    CurveParams<KcSym> cs = make_curve(sym_c1(), sym_c2());
    Laurent<KcSym> ts = branch_w_series(cs, 1);
    CHECK(ts.coeff(0) == S(1));
    CHECK(ts.coeff(1) == sym_c1() * S(1, 2));

    CHECK(branch_w_series(cv, 0) == Laurent<Rational>::constant(Rational(1), 0));
}

TEST_CASE("lambda_m reproduces the order-2 display", "[curve]") {
    CurveParams<KcSym> cs = make_curve(sym_c1(), sym_c2());
    FieldElement<KcSym> lam = lambda_m(cs, 2);
    // 1/(2z^2) + c1/(4z) + w/(2z^2) == (1 + (c1/2) z + w) / (2 z^2)
    Poly<KcSym> den = Poly<KcSym>::from_coeffs({S(0), S(0), S(2)});
    Poly<KcSym> g = Poly<KcSym>::from_coeffs({S(1), sym_c1() * S(1, 2)});
    FieldElement<KcSym> expected(RatFunc<KcSym>(g, den), RatFunc<KcSym>(Poly<KcSym>(S(1)), den),
                                 cs.F());
    CHECK(lam == expected);

    CurveParams<Rational> c0 = make_curve(Rational(0), Rational(1));
    FieldElement<Rational> l3 = lambda_m(c0, 3);
    Poly<Rational> den3 =
        Poly<Rational>::from_coeffs({Rational(0), Rational(0), Rational(0), Rational(2)});
    Poly<Rational> g3 = Poly<Rational>::from_coeffs({Rational(1), Rational(0), Rational(1, 2)});
    CHECK(l3 == FieldElement<Rational>(RatFunc<Rational>(g3, den3),
                                       RatFunc<Rational>(Poly<Rational>(Rational(1)), den3),
                                       c0.F()));

    CHECK_THROWS(lambda_m(c0, 1));
}

TEST_CASE("expand_at_Q of lambda_1 gives the printed expansion coefficients", "[curve]") {
    CurveParams<KcSym> cs = make_curve(sym_c1(), sym_c2());
    Laurent<KcSym> ls = expand_at_Q(lambda_m(cs, 2), cs, 0);
    CHECK(ls.low() == -2);
    CHECK(ls.coeff(-2) == S(1));
    CHECK(ls.coeff(-1) == sym_c1() * S(1, 2));                             // p1 = c1/2
    CHECK(ls.coeff(0) == sym_c2() * S(1, 4) - sym_c1() * sym_c1() * S(1, 16)); // p0
}

TEST_CASE("lambda_m has pole order m at Q and is regular at sigma Q", "[curve]") {
    CurveParams<Rational> cv = make_curve(Rational(2, 3), Rational(-1));
    for (int m : {2, 3, 4}) {
        FieldElement<Rational> lam = lambda_m(cv, m);
        Laurent<Rational> plus = expand_at_Q(lam, cv, 0);
        CHECK(plus.low() == -m);
        CHECK(plus.coeff(-m) == Rational(1));
        Laurent<Rational> minus = expand_at_Q(lam, cv, 0, -1);
        CHECK(minus.low() >= 0);
    }
}

TEST_CASE("function field arithmetic reduces w^2 to F", "[curve]") {
    CurveParams<Rational> cv = make_curve(Rational(1), Rational(3));
    Poly<Rational> f = cv.F();
    using FE = FieldElement<Rational>;
    FE w = FE::w(f);
    CHECK(w * w == FE(RatFunc<Rational>(f), RatFunc<Rational>(), f));

    Rng rng(201);
    FE x = random_elem(rng, f);
    // norm form (A + Bw)(A - Bw) = A^2 - B^2 F
    FE norm = x * x.sigma();
    CHECK(norm.b().is_zero());
    CHECK(norm.a() == x.a() * x.a() - x.b() * x.b() * RatFunc<Rational>(f));

    // 1/w = w/F
    FE one = FE::constant(Rational(1), f);
    CHECK(one / w == FE(RatFunc<Rational>(), RatFunc<Rational>(Poly<Rational>(Rational(1)), f), f));
    CHECK((x / w) * w == x);
    CHECK_THROWS_AS(x / FE(RatFunc<Rational>(), RatFunc<Rational>(), f), std::domain_error);
}

TEST_CASE("sigma is an involution and field axioms hold", "[curve]") {
    CurveParams<Rational> cv = make_curve(Rational(-1, 2), Rational(2));
    Poly<Rational> f = cv.F();
    Rng rng(202);
    for (int t = 0; t < 5; ++t) {
        FieldElement<Rational> x = random_elem(rng, f), y = random_elem(rng, f),
                               z = random_elem(rng, f);
        CHECK(x.sigma().sigma() == x);
        CHECK((x.sigma() * y.sigma()) == (x * y).sigma());
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("expand_at_Q is a ring homomorphism", "[curve]") {
    CurveParams<Rational> cv = make_curve(Rational(1, 3), Rational(0));
    Poly<Rational> f = cv.F();
    Rng rng(203);
    for (int t = 0; t < 5; ++t) {
        FieldElement<Rational> x = random_elem(rng, f), y = random_elem(rng, f);
        int order = 4;
        Laurent<Rational> ex = expand_at_Q(x, cv, order);
        Laurent<Rational> ey = expand_at_Q(y, cv, order);
        Laurent<Rational> exy = expand_at_Q(x * y, cv, order);
        Laurent<Rational> prod = ex * ey;
        int shared = std::min(exy.order(), prod.order());
        CHECK((exy.truncated(shared) - prod.truncated(shared)).is_zero_to_order());
        CHECK((expand_at_Q(x + y, cv, order) - (ex + ey)).is_zero_to_order());
    }

    FieldElement<Rational> seven = FieldElement<Rational>::constant(Rational(7), f);
    CHECK(expand_at_Q(seven, cv, 0).coeff(0) == Rational(7));
}

TEST_CASE("residue_at extracts simple-pole residues in the extension", "[curve]") {
    CurveParams<Rational> cv = make_curve(Rational(0), Rational(1));
    Poly<Rational> f = cv.F();
    // (3 + 2w) / (z - 5) at the point (5, sqrt(F(5)))
    Poly<Rational> den = Poly<Rational>::from_coeffs({Rational(-5), Rational(1)});
    FieldElement<Rational> x(RatFunc<Rational>(Poly<Rational>(Rational(3)), den),
                             RatFunc<Rational>(Poly<Rational>(Rational(2)), den), f);
    Rational d = f.eval(Rational(5));
    QuadExt<Rational> w0 = QuadExt<Rational>::root(d);
    CHECK(residue_at(x, Rational(5), w0) ==
          QuadExt<Rational>::base(Rational(3), d) + w0.scaled(Rational(2)));
}
