#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace dixq;
using testutil::Rng;

namespace {

KcSym S(long num, long den = 1) { return KcSym(RatC1(Rational(num, den))); }

ParameterSequences<Rational> default_params() {
    return {RatFunc<Rational>(Poly<Rational>::from_coeffs({Rational(1), Rational(1)})),
            RatFunc<Rational>::variable()};
}

ParameterSequences<KcSym> default_params_sym() {
    return {RatFunc<KcSym>(Poly<KcSym>::from_coeffs({S(1), S(1)})), RatFunc<KcSym>::variable()};
}

} // namespace

TEST_CASE("cd_coeffs matches spot values and the symbolic d(n)", "[spectral_data]") {
    CurveParams<Rational> cv = make_curve(Rational(0), Rational(1));
    auto [c, d] = cd_coeffs(default_params(), cv);
    CHECK(c.eval(Rational(2)) == Rational(-3, 2));
    CHECK(d.eval(Rational(2)) == Rational(-3));

    CurveParams<KcSym> cs = make_curve(sym_c1(), sym_c2());
    auto [cS, dS] = cd_coeffs(default_params_sym(), cs);
    // d(n) = -(n+1) identically, independent of the curve
    CHECK(dS == RatFunc<KcSym>(Poly<KcSym>::from_coeffs({S(-1), S(-1)})));
}

TEST_CASE("cd_coeffs rejects degenerate parameters", "[spectral_data]") {
    CurveParams<Rational> cv = make_curve(Rational(0), Rational(1));
    ParameterSequences<Rational> constant_gamma{RatFunc<Rational>::variable(),
                                                RatFunc<Rational>(Rational(3))};
    CHECK_THROWS_AS(cd_coeffs(constant_gamma, cv), std::domain_error);
}

TEST_CASE("chi1 is sigma-invariant and vanishes over gamma(n+1)", "[spectral_data]") {
    CurveParams<Rational> cv = make_curve(Rational(0), Rational(1));
    ChiPair<Rational> chis = chi_pair(default_params(), cv);
    CHECK(chis.chi1.b().is_zero());
    CHECK(chis.chi1.sigma() == chis.chi1);

    // at n = 4 the determinant zeros sit over z = gamma(5) = 5, both branches
    FieldElement<Rational> chi1 = specialize_n(chis.chi1, Rational(4));
    Rational d = cv.F().eval(Rational(5));
    QuadExt<Rational> s = QuadExt<Rational>::root(d);
    CHECK(chi1.eval_at_point(Rational(5), s).is_zero());
    CHECK(chi1.eval_at_point(Rational(5), -s).is_zero());
}

TEST_CASE("chi2 has residue 1 at the preferred point", "[spectral_data]") {
    Rng rng(301);
    for (int t = 0; t < 5; ++t) {
        testutil::Draw dr = testutil::random_draw(rng);
        ChiPair<Rational> chis = chi_pair(dr.params, dr.curve);
        CurveParams<RatFunc<Rational>> cl = lift_curve(dr.curve);
        Laurent<RatFunc<Rational>> s = expand_at_Q(chis.chi2, cl, 0);
        CHECK(s.low() >= -1);
        CHECK(s.coeff(-1) == RatFunc<Rational>(Rational(1)));
    }
}

TEST_CASE("odd part of chi2 is w gamma / (z (gamma - z))", "[spectral_data]") {
    Rng rng(302);
    testutil::Draw dr = testutil::random_draw(rng);
    using Kn = RatFunc<Rational>;
    ChiPair<Rational> chis = chi_pair(dr.params, dr.curve);
    FieldElement<Kn> odd = chis.chi2 - chis.chi2.sigma();
    CHECK(odd.a().is_zero());
    const Kn& g = dr.params.gamma;
    Poly<Kn> den = Poly<Kn>::from_coeffs({Kn(), g, Kn(Rational(-1))}); // z(gamma - z)
    CHECK(odd.b() == RatFunc<Kn>(Poly<Kn>(g), den));
}

TEST_CASE("closed-form series coefficients match spot values", "[spectral_data]") {
    CurveParams<Rational> cv = make_curve(Rational(0), Rational(1));
    SeriesCoeffs<Rational> sc = series_coeffs_closed(default_params(), cv);
    CHECK(sc.b0.eval(Rational(2)) == Rational(9, 4));
    CHECK(sc.b1.eval(Rational(2)) == Rational(3, 8));
    CHECK(sc.e1.eval(Rational(2)) == Rational(0));
    CHECK(sc.e0.eval(Rational(1)) == Rational(-5, 2));

    CurveParams<KcSym> cs = make_curve(sym_c1(), sym_c2());
    SeriesCoeffs<KcSym> ss = series_coeffs_closed(default_params_sym(), cs);
    // e0(n) = c1/4 - (2n+3)/2
    RatFunc<KcSym> expected_e0(
        Poly<KcSym>::from_coeffs({sym_c1() * S(1, 4) - S(3, 2), S(-1)}));
    CHECK(ss.e0 == expected_e0);
}

TEST_CASE("closed forms agree with the expansion of chi1, chi2", "[spectral_data][property]") {
    Rng rng(303);
    using Kn = RatFunc<Rational>;
    for (int t = 0; t < 5; ++t) {
        testutil::Draw dr = testutil::random_draw(rng);
        ChiPair<Rational> chis = chi_pair(dr.params, dr.curve);
        SeriesCoeffs<Rational> sc = series_coeffs_closed(dr.params, dr.curve);
        CurveParams<Kn> cl = lift_curve(dr.curve);
        Laurent<Kn> s1 = expand_at_Q(chis.chi1, cl, 1);
        CHECK(s1.coeff(0) == sc.b0);
        CHECK(s1.coeff(1) == sc.b1);
        // chi2 - 1/z
        FieldElement<Kn> inv_z(RatFunc<Kn>(Poly<Kn>(Kn(Rational(1))), Poly<Kn>::variable()),
                               RatFunc<Kn>(), chis.chi2.f());
        Laurent<Kn> s2 = expand_at_Q(chis.chi2 - inv_z, cl, 1);
        CHECK(s2.coeff(0) == sc.e0);
        CHECK(s2.coeff(1) == sc.e1);
    }
}

TEST_CASE("KN constraints hold on a window for the distinguished family", "[spectral_data]") {
    CurveParams<Rational> cv = make_curve(Rational(0), Rational(1));
    KnReport rep = check_kn_constraints(default_params(), cv, 5, 15);
    CHECK(rep.ok);
    CHECK(rep.checked == 11);
    CHECK(rep.failures.empty());
}

TEST_CASE("KN constraints hold as rational-function identities", "[spectral_data]") {
    CurveParams<Rational> cv = make_curve(Rational(0), Rational(1));
    KnReport rep = check_kn_identities(default_params(), cv);
    CHECK(rep.ok);

    Rng rng(304);
    testutil::Draw dr = testutil::random_draw(rng);
    CHECK(check_kn_identities(dr.params, dr.curve).ok);
}

TEST_CASE("degenerate window raises a domain error, not a failure", "[spectral_data]") {
    CurveParams<Rational> cv = make_curve(Rational(0), Rational(1));
    // gamma(0) = 0 violates the point invariants inside the window
    CHECK_THROWS_AS(check_kn_constraints(default_params(), cv, -2, 2), std::domain_error);
}

TEST_CASE("perturbing c(n) breaks the residue relation", "[spectral_data]") {
    CurveParams<Rational> cv = make_curve(Rational(0), Rational(1));
    ParameterSequences<Rational> p = default_params();
    ChiPair<Rational> chis = chi_pair(p, cv);
    auto [c, d] = cd_coeffs(p, cv);
    Rational n(6);
    auto run = [&](const Rational& cn) {
        return kn_check_core<Rational>(
            specialize_n(chis.chi1, n), specialize_n(chis.chi2, n),
            specialize_n(chis.chi2, Rational(5)), p.a.eval(n), p.a.eval(Rational(5)),
            p.gamma.eval(n), p.gamma.eval(Rational(5)), p.gamma.eval(Rational(7)),
            d.eval(Rational(5)), d.eval(n), cn, cv.F());
    };
    CHECK(run(c.eval(n)).empty());
    auto fails = run(c.eval(n) + Rational(1));
    CHECK(!fails.empty());
    bool residue_failed = false;
    for (const auto& f : fails)
        if (f.find("residue") != std::string::npos || f.find("Res_P chi1") != std::string::npos)
            residue_failed = true;
    CHECK(residue_failed);
}
