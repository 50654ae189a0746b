#pragma once

#include "ratfunc.hpp"

namespace dixq {

// Coefficient field Q(c1, c2), represented as the iterated rational
// function field Q(c1)(c2).  SPECIALIZED mode uses plain Rational instead.
using RatC1 = RatFunc<Rational>;
using KcSym = RatFunc<RatC1>;

inline KcSym sym_c1() { return KcSym(RatC1::variable()); }
inline KcSym sym_c2() { return KcSym::variable(); }

template <class K1, class K2, class F>
Poly<K2> map_poly(const Poly<K1>& p, F f) {
    std::vector<K2> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(f(x));
    return Poly<K2>::from_coeffs(std::move(c));
}

template <class K1, class K2, class F>
RatFunc<K2> map_ratfunc(const RatFunc<K1>& r, F f) {
    return RatFunc<K2>(map_poly<K1, K2>(r.num(), f), map_poly<K1, K2>(r.den(), f));
}

inline Rational specialize_c(const KcSym& v, const Rational& c1, const Rational& c2) {
    auto eval2 = [&](const Poly<RatC1>& p) {
        Rational r(0);
        for (int i = p.degree(); i >= 0; --i) r = r * c2 + p.coeff(i).eval(c1);
        return r;
    };
    Rational d = eval2(v.den());
    if (is_zero_value(d)) throw std::domain_error("specialize_c: evaluation at a pole");
    return eval2(v.num()) / d;
}

template <class K>
K from_rational(const Rational& q) {
    if constexpr (std::is_same_v<K, Rational>)
        return q;
    else
        return K(from_rational<typename K::coeff_type>(q));
}

} // namespace dixq
