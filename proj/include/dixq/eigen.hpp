#pragma once

#include <string>
#include <vector>

#include "builder.hpp"

namespace dixq {

// A point (z0, w0) of the curve, with w0 in the quadratic extension
// Q[w]/(w^2 - F(z0)).  No rational point search is ever needed.
struct CurvePoint {
    Rational z0;
    QuadExt<Rational> w0;
};

inline CurvePoint make_point(const CurveParams<Rational>& curve, const Rational& z0,
                             int branch_sign = +1) {
    if (is_zero_value(z0))
        throw std::domain_error("make_point: z0 = 0 is the preferred point Q");
    Rational d = curve.F().eval(z0);
    QuadExt<Rational> w0 = QuadExt<Rational>::root(d);
    if (branch_sign < 0) w0 = -w0;
    return {z0, w0};
}

struct PsiWindow {
    int n_first = 0; // index of values[0]
    std::vector<QuadExt<Rational>> values;

    const QuadExt<Rational>& at(int n) const {
        int idx = n - n_first;
        if (idx < 0 || idx >= static_cast<int>(values.size()))
            throw std::out_of_range("psi window: index outside window");
        return values[static_cast<size_t>(idx)];
    }
};

// psi(n0-1) = s0, psi(n0) = s1, extended forward by
// psi(n+1) = chi1(n) psi(n-1) + chi2(n) psi(n).
inline PsiWindow psi_window(const ParameterSequences<Rational>& params,
                            const CurveParams<Rational>& curve, const CurvePoint& pt, int n0,
                            int len, const QuadExt<Rational>& s0, const QuadExt<Rational>& s1) {
    if (s0.is_zero() && s1.is_zero())
        throw std::invalid_argument("psi_window: zero seed");
    if (len < 0) throw std::invalid_argument("psi_window: negative length");
    ChiPair<Rational> chis = chi_pair(params, curve);
    PsiWindow win;
    win.n_first = n0 - 1;
    win.values = {s0, s1};
    for (int n = n0; n < n0 + len; ++n) {
        Rational nk(n);
        Rational gn;
        try {
            gn = params.gamma.eval(nk);
        } catch (const std::domain_error&) {
            throw std::domain_error("psi_window: gamma pole at n = " + std::to_string(n));
        }
        if (gn == pt.z0)
            throw std::domain_error("psi_window: chi pole (z0 = gamma(n)) at n = " +
                                    std::to_string(n));
        QuadExt<Rational> c1v, c2v;
        try {
            c1v = specialize_n(chis.chi1, nk).eval_at_point(pt.z0, pt.w0);
            c2v = specialize_n(chis.chi2, nk).eval_at_point(pt.z0, pt.w0);
        } catch (const std::domain_error&) {
            throw std::domain_error("psi_window: chi coefficient pole at n = " + std::to_string(n));
        }
        win.values.push_back(c1v * win.at(n - 1) + c2v * win.at(n));
    }
    return win;
}

struct ResidualReport {
    bool ok = true;
    QuadExt<Rational> eigenvalue;
    int n_from = 0, n_to = 0;
    std::vector<std::string> failures;
};

// Checks (L psi)(n) = lam(z0, w0) psi(n) exactly at every admissible n.
template <class LamK>
ResidualReport residual_check(const DiffOp<Rational>& L, const FieldElement<LamK>& lam,
                              const PsiWindow& psi, const CurvePoint& pt) {
    ResidualReport rep;
    FieldElement<Rational> lam_s;
    if constexpr (std::is_same_v<LamK, Rational>)
        lam_s = lam;
    else
        lam_s = specialize_n(lam, Rational(0)); // lambda has constant coefficients
    rep.eigenvalue = lam_s.eval_at_point(pt.z0, pt.w0);

    int n_from = psi.n_first - std::min(0, L.i_min());
    int n_to = psi.n_first + static_cast<int>(psi.values.size()) - 1 - std::max(0, L.i_max());
    if (n_from > n_to) throw std::domain_error("residual_check: window narrower than support");
    rep.n_from = n_from;
    rep.n_to = n_to;
    for (int n = n_from; n <= n_to; ++n) {
        QuadExt<Rational> acc = QuadExt<Rational>::base(Rational(0), pt.w0.d());
        for (const auto& [i, u] : L.coeffs()) {
            Rational uv;
            try {
                uv = u.eval(Rational(n));
            } catch (const std::domain_error&) {
                throw std::domain_error("residual_check: coefficient pole at n = " +
                                        std::to_string(n));
            }
            acc = acc + psi.at(n + i).scaled(uv);
        }
        QuadExt<Rational> resid = acc - rep.eigenvalue * psi.at(n);
        if (!resid.is_zero()) {
            rep.ok = false;
            rep.failures.push_back("nonzero residual at n = " + std::to_string(n));
        }
    }
    return rep;
}

} // namespace dixq
