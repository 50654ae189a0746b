#pragma once

#include <stdexcept>

#include "poly.hpp"

namespace dixq {

// Rational function num/den in canonical form: den monic, gcd(num, den) = 1.
// The canonical form makes equality a pair of polynomial comparisons.
template <class K>
class RatFunc {
public:
    using coeff_type = K;

    RatFunc() : den_(Poly<K>(K(1))) {}
    RatFunc(const K& k) : num_(k), den_(Poly<K>(K(1))) {}
    RatFunc(long v) : RatFunc(K(v)) {}
    RatFunc(const Poly<K>& n) : num_(n), den_(Poly<K>(K(1))) {}
    RatFunc(const Poly<K>& n, const Poly<K>& d) : num_(n), den_(d) { normalize(); }

    static RatFunc variable() { return RatFunc(Poly<K>::variable()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const {
        if (is_zero() || o.is_zero()) return RatFunc();
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }

    RatFunc inverse() const { return RatFunc(K(1)) / *this; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    K eval(const K& x) const {
        K d = den_.eval(x);
        if (is_zero_value(d)) throw std::domain_error("evaluation at a pole");
        return num_.eval(x) / d;
    }

    // f(x + delta)
    RatFunc shifted_arg(const K& delta) const {
        return RatFunc(num_.shifted_arg(delta), den_.shifted_arg(delta));
    }

    RatFunc pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    }

private:
    Poly<K> num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
        if (num_.is_zero()) {
            den_ = Poly<K>(K(1));
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        K lc = den_.leading();
        if (!is_one_value(lc)) {
            K inv = K(1) / lc;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
};

// Spec-shaped entry point; the constructor already canonicalizes.
template <class K>
RatFunc<K> ratfunc_normalize(const Poly<K>& num, const Poly<K>& den) {
    return RatFunc<K>(num, den);
}

} // namespace dixq
