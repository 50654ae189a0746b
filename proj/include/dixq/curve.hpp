#pragma once

#include <stdexcept>

#include "fields.hpp"
#include "quadext.hpp"
#include "series.hpp"

namespace dixq {

// Spectral curve w^2 = F(z) = z^4 + c2 z^2 + c1 z + 1.
template <class K>
struct CurveParams {
    K c1, c2;

    Poly<K> F() const {
        return Poly<K>::from_coeffs({K(1), c1, c2, K(0), K(1)});
    }
};

// In SPECIALIZED mode a singular curve is rejected; symbolic parameters
// are assumed generic.
template <class K>
CurveParams<K> make_curve(const K& c1, const K& c2) {
    CurveParams<K> cv{c1, c2};
    if constexpr (std::is_same_v<K, Rational>) {
        Poly<K> f = cv.F();
        if (poly_gcd(f, f.derivative()).degree() != 0)
            throw std::domain_error("singular curve: F(z) has a repeated root");
    }
    return cv;
}

template <class K>
CurveParams<RatFunc<K>> lift_curve(const CurveParams<K>& cv) {
    return CurveParams<RatFunc<K>>{RatFunc<K>(cv.c1), RatFunc<K>(cv.c2)};
}

// Element A(z) + B(z) w of the function field, reduced modulo w^2 - F(z).
template <class K>
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(RatFunc<K> a, RatFunc<K> b, Poly<K> f)
        : a_(std::move(a)), b_(std::move(b)), f_(std::move(f)) {}

    static FieldElement constant(const K& k, const Poly<K>& f) {
        return FieldElement(RatFunc<K>(k), RatFunc<K>(), f);
    }
    static FieldElement w(const Poly<K>& f) {
        return FieldElement(RatFunc<K>(), RatFunc<K>(K(1)), f);
    }

    const RatFunc<K>& a() const { return a_; }
    const RatFunc<K>& b() const { return b_; }
    const Poly<K>& f() const { return f_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    FieldElement sigma() const { return FieldElement(a_, -b_, f_); }

    FieldElement operator-() const { return FieldElement(-a_, -b_, f_); }

    FieldElement operator+(const FieldElement& o) const {
        check(o);
        return FieldElement(a_ + o.a_, b_ + o.b_, join(o));
    }
    FieldElement operator-(const FieldElement& o) const { return *this + (-o); }

    FieldElement operator*(const FieldElement& o) const {
        check(o);
        const Poly<K>& f = join(o);
        RatFunc<K> fr(f);
        return FieldElement(a_ * o.a_ + b_ * o.b_ * fr, a_ * o.b_ + b_ * o.a_, f);
    }

    FieldElement operator/(const FieldElement& o) const {
        check(o);
        if (o.is_zero()) throw std::domain_error("division by the zero field element");
        const Poly<K>& f = join(o);
        RatFunc<K> fr(f);
        RatFunc<K> norm = o.a_ * o.a_ - o.b_ * o.b_ * fr;
        // norm = (A+Bw)(A-Bw) is nonzero for o nonzero on an irreducible curve
        FieldElement conj(o.a_, -o.b_, f);
        FieldElement num = *this * conj;
        return FieldElement(num.a_ / norm, num.b_ / norm, f);
    }

    FieldElement scaled(const RatFunc<K>& k) const {
        return FieldElement(a_ * k, b_ * k, f_);
    }

    bool operator==(const FieldElement& o) const {
        if (is_zero() && o.is_zero()) return true;
        return a_ == o.a_ && b_ == o.b_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    QuadExt<K> eval_at_point(const K& z0, const QuadExt<K>& w0) const {
        QuadExt<K> av = QuadExt<K>::base(a_.eval(z0), w0.d());
        QuadExt<K> bv = QuadExt<K>::base(b_.eval(z0), w0.d());
        return av + bv * w0;
    }

private:
    RatFunc<K> a_, b_;
    Poly<K> f_;

    const Poly<K>& join(const FieldElement& o) const { return f_.is_zero() ? o.f_ : f_; }
    void check(const FieldElement& o) const {
        if (!f_.is_zero() && !o.f_.is_zero() && !(f_ == o.f_))
            throw std::domain_error("field elements from different curves");
    }
};

template <class K>
Laurent<K> branch_w_series(const CurveParams<K>& curve, int order) {
    if (order < 0) throw std::invalid_argument("branch_w_series: negative order");
    return Laurent<K>::from_poly(curve.F(), order).sqrt_unit();
}

// lambda_m = (G_{m-1}(z) + w) / (2 z^m) with G the Taylor polynomial of the
// branch of w through Q = (0,1).  For m = 2 this is the classical
// 1/(2z^2) + c1/(4z) + w/(2z^2).
template <class K>
FieldElement<K> lambda_m(const CurveParams<K>& curve, int m) {
    if (m < 2) throw std::invalid_argument("lambda_m: m must be >= 2");
    Laurent<K> ws = branch_w_series(curve, m - 1);
    std::vector<K> g(m, K(0));
    for (int i = 0; i < m; ++i) g[i] = ws.coeff(i);
    Poly<K> G = Poly<K>::from_coeffs(std::move(g));
    std::vector<K> d(m + 1, K(0));
    d[m] = K(2);
    Poly<K> den = Poly<K>::from_coeffs(std::move(d));
    return FieldElement<K>(RatFunc<K>(G, den), RatFunc<K>(Poly<K>(K(1)), den), curve.F());
}

template <class K>
int valuation_at_zero(const RatFunc<K>& f) {
    if (f.is_zero()) throw std::domain_error("valuation of zero");
    int vn = 0, vd = 0;
    while (is_zero_value(f.num().coeff(vn))) ++vn;
    while (is_zero_value(f.den().coeff(vd))) ++vd;
    return vn - vd;
}

// Laurent expansion along the branch w = +branch_w_series (branch_sign=+1)
// or its sigma image (branch_sign=-1).
template <class K>
Laurent<K> expand_at_Q(const FieldElement<K>& elem, const CurveParams<K>& curve, int order,
                       int branch_sign = +1) {
    Laurent<K> as = ratfunc_to_series(elem.a(), order);
    Laurent<K> total = as;
    if (!elem.b().is_zero()) {
        int vb = valuation_at_zero(elem.b());
        int worder = std::max(0, order - vb);
        Laurent<K> ws = branch_w_series(curve, worder);
        if (branch_sign < 0) ws = -ws;
        Laurent<K> bs = ratfunc_to_series(elem.b(), order);
        total = total + bs * ws;
    }
    if (total.is_zero_to_order() && !elem.is_zero())
        throw std::runtime_error("expand_at_Q: truncation order too small to see the lowest term");
    return total;
}

template <class K>
K residue_at_simple_pole_ratfunc(const RatFunc<K>& f, const K& z0) {
    K dv = f.den().eval(z0);
    if (!is_zero_value(dv)) return K(0);
    K dp = f.den().derivative().eval(z0);
    if (is_zero_value(dp)) throw std::domain_error("residue: pole is not simple");
    return f.num().eval(z0) / dp;
}

// Residue at the point (z0, w0); w is analytic there, both components may
// have at most a simple pole.
template <class K>
QuadExt<K> residue_at(const FieldElement<K>& elem, const K& z0, const QuadExt<K>& w0) {
    K ra = residue_at_simple_pole_ratfunc(elem.a(), z0);
    K rb = residue_at_simple_pole_ratfunc(elem.b(), z0);
    return QuadExt<K>::base(ra, w0.d()) + QuadExt<K>::base(rb, w0.d()) * w0;
}

} // namespace dixq
