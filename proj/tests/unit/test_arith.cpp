#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace dixq;
using testutil::Rng;

namespace {

Poly<Rational> P(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly<Rational>::from_coeffs(std::move(c));
}

} // namespace

TEST_CASE("ratfunc_normalize cancels common factors", "[exact_arith]") {
    // (n^2 - 1)/(n - 1) -> n + 1
    RatFunc<Rational> r = ratfunc_normalize(P({-1, 0, 1}), P({-1, 1}));
    CHECK(r.num() == P({1, 1}));
    CHECK(r.den() == P({1}));

    // 0/(n^3 + 7) -> 0/1
    RatFunc<Rational> z = ratfunc_normalize(Poly<Rational>(), P({7, 0, 0, 1}));
    CHECK(z.is_zero());
    CHECK(z.den().is_one());

    // (2n + 4)/2 -> n + 2 (monic denominator)
    RatFunc<Rational> c = ratfunc_normalize(P({4, 2}), P({2}));
    CHECK(c.num() == P({2, 1}));
    CHECK(c.den().is_one());
}

TEST_CASE("ratfunc_normalize rejects the zero denominator", "[exact_arith]") {
    CHECK_THROWS_AS(ratfunc_normalize(P({1}), Poly<Rational>()), std::domain_error);
}

TEST_CASE("ratfunc normalization is invariant under common factors", "[exact_arith]") {
    Rng rng(101);
    for (int t = 0; t < 20; ++t) {
        RatFunc<Rational> r = rng.ratfunc(3, 2);
        Poly<Rational> p = rng.poly_deg_le(2);
        if (p.is_zero()) continue;
        CHECK(ratfunc_normalize(r.num() * p, r.den() * p) == r);
    }
}

TEST_CASE("rational function field axioms hold on random triples", "[exact_arith]") {
    Rng rng(102);
    for (int t = 0; t < 10; ++t) {
        RatFunc<Rational> x = rng.ratfunc(2, 1), y = rng.ratfunc(2, 1), z = rng.ratfunc(2, 1);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!y.is_zero()) CHECK((x / y) * y == x);
        // cross-check canonical-form equality against evaluation
        for (int k = 0; k < 5; ++k) {
            Rational nv(rng.integer(50, 1000));
            try {
                CHECK((x * (y + z)).eval(nv) == x.eval(nv) * (y.eval(nv) + z.eval(nv)));
            } catch (const std::domain_error&) {
                // evaluation point hit a pole; the symbolic check above stands
            }
        }
    }
}

TEST_CASE("poly_interpolate recovers a linear coefficient", "[exact_arith]") {
    std::vector<std::pair<Rational, Rational>> pts;
    for (long n : {5, 6, 7}) pts.emplace_back(Rational(n), Rational(2 * n + 4));
    CHECK(poly_interpolate(pts, 2) == P({4, 2}));
}

TEST_CASE("poly_interpolate handles constants and inconsistent data", "[exact_arith]") {
    std::vector<std::pair<Rational, Rational>> c = {{Rational(5), Rational(3)},
                                                    {Rational(6), Rational(3)}};
    CHECK(poly_interpolate(c, 1) == P({3}));

    std::vector<std::pair<Rational, Rational>> sq;
    for (long n : {1, 2, 3, 4}) sq.emplace_back(Rational(n), Rational(n * n));
    CHECK_THROWS(poly_interpolate(sq, 1));

    std::vector<std::pair<Rational, Rational>> dup = {{Rational(5), Rational(1)},
                                                      {Rational(5), Rational(2)}};
    CHECK_THROWS(poly_interpolate(dup, 1));
}

TEST_CASE("poly_interpolate is a left inverse of evaluation", "[exact_arith]") {
    Rng rng(103);
    for (int t = 0; t < 10; ++t) {
        Poly<Rational> p = rng.poly_deg_le(4);
        std::vector<std::pair<Rational, Rational>> pts;
        for (long n = 20; n < 27; ++n) pts.emplace_back(Rational(n), p.eval(Rational(n)));
        CHECK(poly_interpolate(pts, 4) == p);
    }
}

TEST_CASE("ratfunc_reconstruct recovers random rational functions", "[exact_arith]") {
    Rng rng(104);
    for (int t = 0; t < 6; ++t) {
        RatFunc<Rational> r = rng.ratfunc(3, 2);
        std::vector<std::pair<Rational, Rational>> pts;
        long n = 20;
        while (pts.size() < 16) {
            try {
                pts.emplace_back(Rational(n), r.eval(Rational(n)));
            } catch (const std::domain_error&) {
            }
            ++n;
        }
        CHECK(ratfunc_reconstruct(pts, 8) == r);
    }
}

TEST_CASE("series_sqrt of the symbolic quartic", "[exact_arith]") {
    KcSym c1 = sym_c1(), c2 = sym_c2();
    Poly<KcSym> F = Poly<KcSym>::from_coeffs({KcSym(RatC1(Rational(1))), c1, c2,
                                              KcSym(RatC1(Rational(0))),
                                              KcSym(RatC1(Rational(1)))});
    Laurent<KcSym> t = series_sqrt(Laurent<KcSym>::from_poly(F, 2), 2);
    KcSym half = KcSym(RatC1(Rational(1, 2)));
    CHECK(t.coeff(0) == KcSym(RatC1(Rational(1))));
    CHECK(t.coeff(1) == c1 * half);
    // c2/2 - c1^2/8
    CHECK(t.coeff(2) == c2 * half - c1 * c1 * KcSym(RatC1(Rational(1, 8))));
    CHECK((t * t - Laurent<KcSym>::from_poly(F, 2)).is_zero_to_order());
}

TEST_CASE("series_sqrt specialized and degenerate cases", "[exact_arith]") {
    Laurent<Rational> s = Laurent<Rational>::from_poly(P({1, 0, 1, 0, 1}), 4);
    Laurent<Rational> t = series_sqrt(s, 4);
    CHECK(t.coeff(0) == Rational(1));
    CHECK(t.coeff(2) == Rational(1, 2));
    CHECK(t.coeff(4) == Rational(3, 8));
    CHECK((t * t - s).is_zero_to_order());

    CHECK(series_sqrt(Laurent<Rational>::constant(Rational(1), 3), 3) ==
          Laurent<Rational>::constant(Rational(1), 3));

    CHECK_THROWS_AS(series_sqrt(Laurent<Rational>::constant(Rational(4), 3), 3),
                    std::domain_error);
}

TEST_CASE("series_sqrt squares back for random unit series", "[exact_arith]") {
    Rng rng(105);
    for (int t = 0; t < 10; ++t) {
        std::vector<Rational> c = {Rational(1)};
        for (int i = 0; i < 6; ++i) c.push_back(rng.rational());
        Laurent<Rational> s = Laurent<Rational>::from_coeffs(0, c, 6);
        Laurent<Rational> r = series_sqrt(s, 6);
        CHECK((r * r - s).is_zero_to_order());
    }
}

TEST_CASE("laurent arithmetic tracks truncation pessimistically", "[exact_arith]") {
    Laurent<Rational> a = Laurent<Rational>::from_coeffs(-1, {Rational(1), Rational(2)}, 0);
    Laurent<Rational> b = Laurent<Rational>::from_poly(P({1, 1}), 5);
    Laurent<Rational> prod = a * b;
    CHECK(prod.low() == -1);
    CHECK(prod.order() == 0); // min(a.order + b.low, b.order + a.low)
    CHECK(prod.coeff(-1) == Rational(1));

    Laurent<Rational> inv = a.inverse();
    CHECK((inv * a).coeff(0) == Rational(1));
}

TEST_CASE("quadratic extension arithmetic is exact", "[exact_arith]") {
    using Q = QuadExt<Rational>;
    Rational d(21, 16); // not a rational square
    Q w = Q::root(d);
    CHECK(w * w == Q::base(d, d));
    Q x(Rational(2), Rational(3), d);
    CHECK(x * x.inverse() == Q::base(Rational(1), d));
    CHECK(x.conj() * x == Q::base(Rational(4) - Rational(9) * d, d));
    CHECK_THROWS_AS(Q::base(Rational(0), d).inverse(), std::domain_error);

    Q other = Q::root(Rational(5));
    CHECK_THROWS_AS(x + other, std::domain_error);
}
