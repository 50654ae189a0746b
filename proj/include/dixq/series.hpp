#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ratfunc.hpp"

namespace dixq {

// Truncated Laurent series: coefficients for exponents low .. order are
// known, everything above is unknown.  A series that is zero to its order
// has an empty coefficient vector and low == order + 1.
template <class K>
class Laurent {
public:
    Laurent() : low_(0), order_(-1) {}

    static Laurent zero_to(int order) {
        Laurent s;
        s.low_ = order + 1;
        s.order_ = order;
        return s;
    }

    static Laurent from_coeffs(int low, std::vector<K> c, int order) {
        Laurent s;
        s.low_ = low;
        s.c_ = std::move(c);
        s.order_ = order;
        if (static_cast<int>(s.c_.size()) != order - low + 1)
            throw std::invalid_argument("laurent: coefficient count mismatch");
        s.trim();
        return s;
    }

    static Laurent from_poly(const Poly<K>& p, int order) {
        std::vector<K> c(order + 1, K(0));
        for (int i = 0; i <= std::min(order, p.degree()); ++i) c[i] = p.coeff(i);
        if (p.degree() > order)
            ; // truncated
        return from_coeffs(0, std::move(c), order);
    }

    static Laurent constant(const K& k, int order) { return from_poly(Poly<K>(k), order); }

    int low() const { return low_; }
    int order() const { return order_; }
    bool is_zero_to_order() const { return c_.empty(); }

    K coeff(int e) const {
        if (e > order_) throw std::domain_error("laurent: coefficient beyond truncation order");
        if (e < low_) return K(0);
        return c_[e - low_];
    }

    Laurent truncated(int order) const {
        if (order > order_) throw std::domain_error("laurent: cannot extend truncation order");
        Laurent s;
        s.low_ = low_;
        s.order_ = order;
        if (low_ > order) {
            s.low_ = order + 1;
            return s;
        }
        s.c_.assign(c_.begin(), c_.begin() + (order - low_ + 1));
        s.trim();
        return s;
    }

    Laurent shifted_exp(int k) const {
        Laurent s = *this;
        s.low_ += k;
        s.order_ += k;
        return s;
    }

    Laurent operator-() const {
        Laurent s = *this;
        for (auto& x : s.c_) x = -x;
        return s;
    }

    Laurent operator+(const Laurent& o) const {
        int order = std::min(order_, o.order_);
        int low = std::min(low_, o.low_);
        if (low > order) return zero_to(order);
        std::vector<K> c(order - low + 1, K(0));
        for (int e = low; e <= order; ++e) {
            K v(0);
            if (e >= low_ && e <= order_ && e - low_ < static_cast<int>(c_.size())) v = v + c_[e - low_];
            if (e >= o.low_ && e <= o.order_ && e - o.low_ < static_cast<int>(o.c_.size())) v = v + o.c_[e - o.low_];
            c[e - low] = v;
        }
        return from_coeffs(low, std::move(c), order);
    }

    Laurent operator-(const Laurent& o) const { return *this + (-o); }

    Laurent operator*(const Laurent& o) const {
        if (is_zero_to_order()) return zero_to(order_ + o.low_);
        if (o.is_zero_to_order()) return zero_to(o.order_ + low_);
        int order = std::min(order_ + o.low_, o.order_ + low_);
        int low = low_ + o.low_;
        if (low > order) return zero_to(order);
        std::vector<K> c(order - low + 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (is_zero_value(c_[i])) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) {
                int e = low_ + static_cast<int>(i) + o.low_ + static_cast<int>(j);
                if (e > order) break;
                c[e - low] = c[e - low] + c_[i] * o.c_[j];
            }
        }
        return from_coeffs(low, std::move(c), order);
    }

    Laurent scaled(const K& k) const {
        Laurent s = *this;
        for (auto& x : s.c_) x = x * k;
        s.trim();
        return s;
    }

    // Multiplicative inverse; the series must be visibly nonzero.
    Laurent inverse() const {
        if (is_zero_to_order())
            throw std::domain_error("laurent: inverse of a series that is zero to its order");
        int v = low_;
        int rel = order_ - v; // relative degree of the unit part
        int out_order = order_ - 2 * v;
        std::vector<K> u(rel + 1, K(0));
        K c0inv = K(1) / c_[0];
        u[0] = c0inv;
        for (int k = 1; k <= rel; ++k) {
            K s(0);
            for (int j = 1; j <= k; ++j) s = s + c_[j] * u[k - j];
            u[k] = -s * c0inv;
        }
        return from_coeffs(-v, std::move(u), out_order);
    }

    // Square root of a series with low == 0 and constant term 1.
    Laurent sqrt_unit() const {
        if (is_zero_to_order() || low_ != 0 || !is_one_value(c_[0]))
            throw std::domain_error("series_sqrt: series must have constant term 1");
        int n = order_;
        std::vector<K> t(n + 1, K(0));
        t[0] = K(1);
        K half = K(1) / K(2);
        for (int k = 1; k <= n; ++k) {
            K s(0);
            for (int j = 1; j < k; ++j) s = s + t[j] * t[k - j];
            t[k] = (coeff(k) - s) * half;
        }
        return from_coeffs(0, std::move(t), n);
    }

    bool operator==(const Laurent& o) const {
        return low_ == o.low_ && order_ == o.order_ && c_ == o.c_;
    }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

private:
    int low_, order_;
    std::vector<K> c_; // c_[i] is the coefficient of z^(low_+i)

    void trim() {
        while (!c_.empty() && is_zero_value(c_.front())) {
            c_.erase(c_.begin());
            ++low_;
        }
        if (c_.empty()) low_ = order_ + 1;
        while (!c_.empty() && is_zero_value(c_.back()) &&
               low_ + static_cast<int>(c_.size()) - 1 > order_)
            c_.pop_back();
    }
};

template <class K>
Laurent<K> series_sqrt(const Laurent<K>& s, int order) {
    return s.truncated(std::min(order, s.order())).sqrt_unit();
}

// Exact Laurent expansion of a rational function at z = 0.
template <class K>
Laurent<K> ratfunc_to_series(const RatFunc<K>& f, int order) {
    if (f.is_zero()) return Laurent<K>::zero_to(order);
    const Poly<K>& num = f.num();
    const Poly<K>& den = f.den();
    int vd = 0;
    while (is_zero_value(den.coeff(vd))) ++vd;
    int vn = 0;
    while (is_zero_value(num.coeff(vn))) ++vn;
    // den = z^vd * u,  u(0) != 0
    int rel = order + vd - vn; // needed relative order of u^-1 * (num/z^vn)
    if (rel < 0) return Laurent<K>::zero_to(order);
    std::vector<K> u(rel + 1, K(0));
    for (int i = 0; i <= rel; ++i) u[i] = den.coeff(vd + i);
    Laurent<K> us = Laurent<K>::from_coeffs(0, std::move(u), rel);
    std::vector<K> nv(rel + 1, K(0));
    for (int i = 0; i <= rel; ++i) nv[i] = num.coeff(vn + i);
    Laurent<K> ns = Laurent<K>::from_coeffs(0, std::move(nv), rel);
    Laurent<K> r = ns * us.inverse();
    return r.shifted_exp(vn - vd).truncated(order);
}

} // namespace dixq
