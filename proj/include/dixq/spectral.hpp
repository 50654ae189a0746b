#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curve.hpp"

namespace dixq {

// Closed-form parameter sequences a(n), gamma(n) over the coefficient field K.
template <class K>
struct ParameterSequences {
    RatFunc<K> a, gamma;
};

template <class K>
RatFunc<K> shift_n(const RatFunc<K>& f, long k) {
    return f.shifted_arg(K(k));
}

template <class K>
FieldElement<RatFunc<K>> shift_n(const FieldElement<RatFunc<K>>& e, long k) {
    auto sh = [&](const RatFunc<K>& c) { return shift_n(c, k); };
    return FieldElement<RatFunc<K>>(map_ratfunc<RatFunc<K>, RatFunc<K>>(e.a(), sh),
                                    map_ratfunc<RatFunc<K>, RatFunc<K>>(e.b(), sh), e.f());
}

// Specialize the discrete variable n to a scalar value.
template <class K>
FieldElement<K> specialize_n(const FieldElement<RatFunc<K>>& e, const K& n) {
    auto ev = [&](const RatFunc<K>& c) { return c.eval(n); };
    Poly<K> f = map_poly<RatFunc<K>, K>(e.f(), ev);
    return FieldElement<K>(map_ratfunc<RatFunc<K>, K>(e.a(), ev),
                           map_ratfunc<RatFunc<K>, K>(e.b(), ev), f);
}

template <class K>
struct ChiPair {
    FieldElement<RatFunc<K>> chi1, chi2;
};

namespace detail {

template <class K>
void require_nondegenerate(const ParameterSequences<K>& p) {
    const RatFunc<K>& g = p.gamma;
    if (g.is_zero()) throw std::domain_error("degenerate parameters: gamma identically zero");
    if ((g - shift_n(g, -1)).is_zero())
        throw std::domain_error("degenerate parameters: gamma(n) = gamma(n-1) identically");
    if ((g - shift_n(g, 1)).is_zero())
        throw std::domain_error("degenerate parameters: gamma(n) = gamma(n+1) identically");
}

} // namespace detail

// c(n), d(n) entering the closed form of chi1, chi2.
template <class K>
std::pair<RatFunc<K>, RatFunc<K>> cd_coeffs(const ParameterSequences<K>& p,
                                            const CurveParams<K>& curve) {
    detail::require_nondegenerate(p);
    using Kn = RatFunc<K>;
    const Kn& a = p.a;
    const Kn& g = p.gamma;
    Kn gm = shift_n(g, -1), gp = shift_n(g, 1);
    Kn ap = shift_n(a, 1);
    Kn Fg = curve.F().template eval_as<Kn>(g);
    Kn c = (gm * (a * a - Fg)) / (Kn(K(4)) * g * (g - gm));
    Kn d = ((ap - Kn(K(1))) * g + (a + Kn(K(1))) * gp) / (Kn(K(2)) * (g - gp) * gp);
    return {c, d};
}

// Closed form: chi1 = c(n)/(z - gamma(n)) + c(n)/(gamma(n) - gamma(n+1)),
// chi2 = 1/(2z) + a(n)/(2(z - gamma(n))) + w gamma(n)/(2z(gamma(n) - z)) + d(n).
template <class K>
ChiPair<K> chi_pair(const ParameterSequences<K>& p, const CurveParams<K>& curve) {
    using Kn = RatFunc<K>;
    auto [c, d] = cd_coeffs(p, curve);
    const Kn& a = p.a;
    const Kn& g = p.gamma;
    Kn gp = shift_n(g, 1);
    CurveParams<Kn> cv = lift_curve(curve);
    Poly<Kn> f = cv.F();
    Poly<Kn> z = Poly<Kn>::variable();
    Poly<Kn> z_minus_g = Poly<Kn>::from_coeffs({-g, Kn(K(1))});

    RatFunc<Kn> chi1a = RatFunc<Kn>(Poly<Kn>(c), z_minus_g) + RatFunc<Kn>(c / (g - gp));
    FieldElement<Kn> chi1(chi1a, RatFunc<Kn>(), f);

    RatFunc<Kn> chi2a = RatFunc<Kn>(Poly<Kn>(Kn(K(1))), z.scaled(Kn(K(2)))) +
                        RatFunc<Kn>(Poly<Kn>(a), z_minus_g.scaled(Kn(K(2)))) + RatFunc<Kn>(d);
    // 2z(gamma - z) = 2 gamma z - 2 z^2
    Poly<Kn> den_b = Poly<Kn>::from_coeffs({Kn(), g * Kn(K(2)), Kn(K(-2))});
    RatFunc<Kn> chi2b(Poly<Kn>(g), den_b);
    FieldElement<Kn> chi2(chi2a, chi2b, f);
    return {chi1, chi2};
}

// Closed forms of the z^0 and z^1 expansion coefficients of chi1 and
// chi2 - 1/z in closed form.
template <class K>
struct SeriesCoeffs {
    RatFunc<K> b0, b1, e0, e1;
};

template <class K>
SeriesCoeffs<K> series_coeffs_closed(const ParameterSequences<K>& p,
                                     const CurveParams<K>& curve) {
    detail::require_nondegenerate(p);
    using Kn = RatFunc<K>;
    const Kn& a = p.a;
    const Kn& g = p.gamma;
    Kn gm = shift_n(g, -1), gp = shift_n(g, 1);
    Kn ap = shift_n(a, 1);
    Kn Fg = curve.F().template eval_as<Kn>(g);
    Kn one(K(1));
    Kn c1(curve.c1), c2(curve.c2);

    Kn b0 = (gm * gp * (Fg - a * a)) / (Kn(K(4)) * (gm - g) * (g - gp) * g * g);
    Kn b1 = (gm * (a * a - Fg)) / (Kn(K(4)) * (gm - g) * g * g * g);
    Kn e0 = (c1 / Kn(K(2)) + one / g - a / g +
             ((ap - one) * g + (a + one) * gp) / ((g - gp) * gp)) /
            Kn(K(2));
    Kn e1 = (Kn(K(8)) - Kn(K(8)) * a + Kn(K(4)) * c1 * g - (c1 * c1 - Kn(K(4)) * c2) * g * g) /
            (Kn(K(16)) * g * g);
    return {b0, b1, e0, e1};
}

// ---- Krichever-Novikov constraint checks on the Tyurin parameters ----

struct KnReport {
    bool ok = true;
    int checked = 0;
    std::vector<std::string> failures;
};

namespace detail {

// alpha-vector component a_1(n) (and a_2 with the other branch):
// a_j(n) = -chi2(n-1, (gamma(n), +-sqrt(F(gamma(n))))), via the closed form
// that the construction of chi1, chi2 determines.
template <class L>
QuadExt<L> alpha_component_closed(const L& gn, const L& gnm1, const L& anm1, const L& dnm1,
                                  const QuadExt<L>& sn) {
    QuadExt<L> r = QuadExt<L>::base(L(1) / (L(2) * gn), sn.d());
    r = r + QuadExt<L>::base(anm1 / (L(2) * (gn - gnm1)), sn.d());
    r = r + sn.scaled(gnm1 / (L(2) * gn * (gnm1 - gn)));
    r = r + QuadExt<L>::base(dnm1, sn.d());
    return r;
}

} // namespace detail

// Core check at one abstract value of n, over any coefficient field L.
// chi1_n, chi2_n are chi(n, .); chi2_nm1 is chi2(n-1, .).
template <class L>
std::vector<std::string> kn_check_core(const FieldElement<L>& chi1_n,
                                       const FieldElement<L>& chi2_n,
                                       const FieldElement<L>& chi2_nm1, const L& an, const L& anm1,
                                       const L& gn, const L& gnm1, const L& gnp1, const L& dnm1,
                                       const L& dn, const L& cn, const Poly<L>& F) {
    std::vector<std::string> fails;
    L Fgn = F.eval(gn);
    L Fgnp1 = F.eval(gnp1);
    QuadExt<L> sn = QuadExt<L>::root(Fgn);       // sqrt(F(gamma(n)))
    QuadExt<L> snp1 = QuadExt<L>::root(Fgnp1);   // sqrt(F(gamma(n+1)))

    // KN residue relations at P(n) and sigma P(n), with the
    // alpha-components a_j(n) = -chi2(n-1, P(n)) / -chi2(n-1, sigma P(n)).
    QuadExt<L> res_chi1 = residue_at(chi1_n, gn, sn);
    QuadExt<L> res2_P = residue_at(chi2_n, gn, sn);
    QuadExt<L> res2_sP = residue_at(chi2_n, gn, -sn);
    QuadExt<L> half_minus = QuadExt<L>::base(an, sn.d()).scaled(L(1) / L(2)) - sn.scaled(L(1) / L(2));
    QuadExt<L> half_plus = QuadExt<L>::base(an, sn.d()).scaled(L(1) / L(2)) + sn.scaled(L(1) / L(2));
    if (res2_P != half_minus) fails.push_back("Res_P chi2 != (a(n) - sqrt(F))/2");
    if (res2_sP != half_plus) fails.push_back("Res_sigmaP chi2 != (a(n) + sqrt(F))/2");
    if (res_chi1 != QuadExt<L>::base(cn, sn.d())) fails.push_back("Res_P chi1 != c(n)");

    // a_1(n) = -chi2(n-1, P(n)); alpha_component_closed is the chi2 value.
    QuadExt<L> a1 = -detail::alpha_component_closed(gn, gnm1, anm1, dnm1, sn);
    QuadExt<L> a2 = -detail::alpha_component_closed(gn, gnm1, anm1, dnm1, -sn);
    QuadExt<L> eval_chi2_nm1_P = chi2_nm1.eval_at_point(gn, sn);
    if (a1 != -eval_chi2_nm1_P) fails.push_back("alpha closed form != -chi2(n-1, P(n))");
    if (res_chi1 != a1 * res2_P) fails.push_back("residue relation at P(n)");
    if (res_chi1 != a2 * res2_sP) fails.push_back("residue relation at sigma P(n)");

    // Determinant zeros: chi1(n, .) vanishes at both points over gamma(n+1).
    if (!chi1_n.eval_at_point(gnp1, snp1).is_zero()) fails.push_back("chi1 vanishing at P(n+1)");
    if (!chi1_n.eval_at_point(gnp1, -snp1).is_zero()) fails.push_back("chi1 vanishing at sigma P(n+1)");

    // Alpha transport: alpha_j(n+1) chi(n, gamma_j(n+1)) = 0.  With
    // chi = [[0,1],[chi1,chi2]] and alpha = (a_j, 1) the components are
    // chi1(n, pt) (the vanishing above) and a_j(n+1) + chi2(n, pt).
    QuadExt<L> a1p = -detail::alpha_component_closed(gnp1, gn, an, dn, snp1);
    QuadExt<L> a2p = -detail::alpha_component_closed(gnp1, gn, an, dn, -snp1);
    if (!(a1p + chi2_n.eval_at_point(gnp1, snp1)).is_zero()) fails.push_back("alpha transport at P(n+1)");
    if (!(a2p + chi2_n.eval_at_point(gnp1, -snp1)).is_zero())
        fails.push_back("alpha transport at sigma P(n+1)");
    return fails;
}

// Window check: every n in [n_from, n_to], exact arithmetic in the
// quadratic extension generated by sqrt(F(gamma(n))).
template <class K>
KnReport check_kn_constraints(const ParameterSequences<K>& p, const CurveParams<K>& curve,
                              int n_from, int n_to) {
    auto chis = chi_pair(p, curve);
    auto [c, d] = cd_coeffs(p, curve);
    KnReport rep;
    for (int n = n_from; n <= n_to; ++n) {
        K nk(n);
        K gn = p.gamma.eval(nk), gnm1 = p.gamma.eval(K(n - 1)), gnp1 = p.gamma.eval(K(n + 1));
        if (is_zero_value(gn) || is_zero_value(gnp1) || gn == gnp1 || gn == gnm1)
            throw std::domain_error("kn check: degenerate parameter values at n = " +
                                    std::to_string(n));
        FieldElement<K> chi1n = specialize_n(chis.chi1, nk);
        FieldElement<K> chi2n = specialize_n(chis.chi2, nk);
        FieldElement<K> chi2nm1 = specialize_n(chis.chi2, K(n - 1));
        auto fails = kn_check_core<K>(chi1n, chi2n, chi2nm1, p.a.eval(nk), p.a.eval(K(n - 1)), gn,
                                      gnm1, gnp1, d.eval(K(n - 1)), d.eval(nk), c.eval(nk),
                                      curve.F());
        ++rep.checked;
        for (auto& f : fails) {
            rep.ok = false;
            rep.failures.push_back("n=" + std::to_string(n) + ": " + f);
        }
    }
    return rep;
}

// Identity check: the same constraints as rational-function identities in
// n, in the quadratic extension with w_n^2 = F(gamma(n)).
template <class K>
KnReport check_kn_identities(const ParameterSequences<K>& p, const CurveParams<K>& curve) {
    using Kn = RatFunc<K>;
    auto chis = chi_pair(p, curve);
    auto [c, d] = cd_coeffs(p, curve);
    CurveParams<Kn> cv = lift_curve(curve);
    KnReport rep;
    auto fails = kn_check_core<Kn>(chis.chi1, chis.chi2, shift_n(chis.chi2, -1), p.a,
                                   shift_n(p.a, -1), p.gamma, shift_n(p.gamma, -1),
                                   shift_n(p.gamma, 1), shift_n(d, -1), d, c, cv.F());
    rep.checked = 1;
    for (auto& f : fails) {
        rep.ok = false;
        rep.failures.push_back("symbolic n: " + f);
    }
    return rep;
}

} // namespace dixq
