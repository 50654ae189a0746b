#pragma once

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace dixq {

// Dense univariate polynomial over a field K.  Degree of the zero
// polynomial is the sentinel -1.
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(const K& k) {
        if (!is_zero_value(k)) c_.push_back(k);
    }
    Poly(long v) : Poly(K(v)) {}

    static Poly from_coeffs(std::vector<K> c) {
        Poly p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }

    static Poly variable() { return from_coeffs({K(0), K(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && is_one_value(c_[0]); }

    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
        return c_[i];
    }

    const std::vector<K>& coeffs() const { return c_; }

    const K& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    K constant() const { return coeff(0); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<K> c(std::max(c_.size(), o.c_.size()), K(0));
        for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) c[i] = c[i] + o.c_[i];
        return from_coeffs(std::move(c));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<K> c(c_.size() + o.c_.size() - 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (is_zero_value(c_[i])) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                c[i + j] = c[i + j] + c_[i] * o.c_[j];
        }
        return from_coeffs(std::move(c));
    }

    Poly scaled(const K& k) const {
        Poly r;
        if (is_zero_value(k)) return r;
        r.c_ = c_;
        for (auto& x : r.c_) x = x * k;
        r.trim();
        return r;
    }

    // Quotient and remainder; requires K to be a field.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        Poly q, r = *this;
        const K& lc = d.leading();
        std::vector<K> qc(r.degree() >= d.degree() ? r.degree() - d.degree() + 1 : 0, K(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            K f = r.leading() / lc;
            int sh = r.degree() - d.degree();
            qc[sh] = f;
            std::vector<K> rc = r.c_;
            for (int i = 0; i <= d.degree(); ++i)
                rc[sh + i] = rc[sh + i] - f * d.c_[i];
            rc.pop_back();
            r = from_coeffs(std::move(rc));
        }
        q = from_coeffs(std::move(qc));
        return {q, r};
    }

    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    Poly exact_div(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(K(1) / leading());
    }

    Poly derivative() const {
        if (degree() < 1) return Poly();
        std::vector<K> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K(static_cast<long>(i));
        return from_coeffs(std::move(c));
    }

    template <class T>
    T eval_as(const T& x) const {
        T r(0);
        for (int i = degree(); i >= 0; --i) r = r * x + T(c_[i]);
        return r;
    }

    K eval(const K& x) const { return eval_as<K>(x); }

    // p(x + delta)
    Poly shifted_arg(const K& delta) const {
        Poly r = *this;
        if (is_zero_value(delta) || is_zero()) return r;
        // repeated synthetic division by (x - (-delta))
        std::vector<K> c = r.c_;
        int n = degree();
        for (int j = 0; j < n; ++j)
            for (int i = n - 1; i >= j; --i) c[i] = c[i] + delta * c[i + 1];
        return from_coeffs(std::move(c));
    }

    Poly pow(unsigned e) const {
        Poly r(K(1)), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            b = b * b;
            e >>= 1u;
        }
        return r;
    }

    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    std::vector<K> c_;

    void trim() {
        while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
    }
};

namespace detail {

using u64 = std::uint64_t;

inline u64 zp_mul(u64 a, u64 b, u64 p) { return a * b % p; } // p < 2^31

inline u64 zp_pow(u64 b, u64 e, u64 p) {
    u64 r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = zp_mul(r, b, p);
        b = zp_mul(b, b, p);
        e >>= 1;
    }
    return r;
}

inline u64 zp_inv(u64 a, u64 p) { return zp_pow(a, p - 2, p); }

inline void zp_trim(std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline std::vector<u64> zp_rem(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
    u64 inv = zp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        u64 f = zp_mul(a.back(), inv, p);
        size_t sh = a.size() - b.size();
        if (f)
            for (size_t i = 0; i + 1 < b.size(); ++i)
                a[sh + i] = (a[sh + i] + p - zp_mul(f, b[i], p)) % p;
        a.pop_back();
        zp_trim(a);
    }
    return a;
}

inline std::vector<u64> zp_gcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
    while (!b.empty()) {
        auto r = zp_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) { // monic
        u64 inv = zp_inv(a.back(), p);
        for (auto& x : a) x = zp_mul(x, inv, p);
    }
    return a;
}

inline u64 gcd_prime(size_t i) {
    static std::mutex mtx;
    static std::vector<u64> ps;
    static u64 next = (u64(1) << 31) - 1;
    std::lock_guard<std::mutex> lock(mtx);
    while (ps.size() <= i) {
        while (!bmp::miller_rabin_test(Integer(next), 25)) next -= 2;
        ps.push_back(next);
        next -= 2;
    }
    return ps[i];
}

// Clear denominators and divide by integer content; result is primitive
// with positive leading coefficient.
inline std::vector<Integer> primitive_int(const Poly<Rational>& p) {
    Integer l(1);
    for (const auto& c : p.coeffs()) l = lcm(l, denom(c));
    std::vector<Integer> v;
    v.reserve(p.coeffs().size());
    Integer g(0);
    for (const auto& c : p.coeffs()) {
        Integer z = numer(c) * (l / denom(c));
        v.push_back(z);
        g = gcd(g, z);
    }
    if (!v.empty()) {
        if (v.back() < 0) g = -g;
        for (auto& z : v) z /= g;
    }
    return v;
}

inline Poly<Rational> rational_poly(const std::vector<Integer>& v) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (const auto& z : v) c.push_back(Rational(z));
    return Poly<Rational>::from_coeffs(std::move(c));
}

inline std::vector<u64> int_poly_mod(const std::vector<Integer>& v, u64 p) {
    std::vector<u64> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Integer m = v[i] % Integer(p);
        if (m < 0) m += Integer(p);
        r[i] = m.convert_to<u64>();
    }
    zp_trim(r);
    return r;
}

// Modular gcd with trial-division certificate; falls back to nothing
// (the prime list is long enough for the degrees seen here).
inline Poly<Rational> gcd_rational(const Poly<Rational>& A, const Poly<Rational>& B) {
    if (A.is_zero()) return B.monic();
    if (B.is_zero()) return A.monic();
    if (A.degree() == 0 || B.degree() == 0) return Poly<Rational>(Rational(1));
    std::vector<Integer> a = primitive_int(A), b = primitive_int(B);
    Integer lg = gcd(a.back(), b.back());
    Poly<Rational> ar = rational_poly(a), br = rational_poly(b);

    Integer modulus(0);
    std::vector<Integer> res; // symmetric residues of lg * monic-gcd image
    size_t deg_cur = SIZE_MAX;
    for (size_t pi = 0; pi < 4096; ++pi) {
        u64 p = gcd_prime(pi);
        if (a.back() % Integer(p) == 0 || b.back() % Integer(p) == 0) continue;
        auto g = zp_gcd(int_poly_mod(a, p), int_poly_mod(b, p), p);
        if (g.size() == 1) return Poly<Rational>(Rational(1));
        if (g.size() > deg_cur) continue; // unlucky prime
        u64 lgp = (lg % Integer(p) + Integer(p)).convert_to<u64>() % p;
        for (auto& x : g) x = zp_mul(x, lgp, p);
        if (g.size() < deg_cur) {
            deg_cur = g.size();
            modulus = 0;
            res.assign(g.size(), Integer(0));
        }
        // CRT combine
        Integer np(p);
        if (modulus == 0) {
            for (size_t i = 0; i < g.size(); ++i) res[i] = Integer(g[i]);
            modulus = np;
        } else {
            Integer newmod = modulus * np;
            Integer minv;
            // inverse of modulus mod p
            {
                Integer t = modulus % np;
                if (t < 0) t += np;
                minv = Integer(zp_inv(t.convert_to<u64>(), p));
            }
            for (size_t i = 0; i < g.size(); ++i) {
                Integer gi(g[i]);
                Integer cur = res[i] % np;
                if (cur < 0) cur += np;
                Integer diff = ((gi - cur) % np + np) % np;
                res[i] = res[i] + modulus * ((diff * minv) % np);
            }
            modulus = newmod;
        }
        // symmetric lift, primitive part, trial division
        std::vector<Integer> cand(res.size());
        Integer half = modulus / 2, content(0);
        for (size_t i = 0; i < res.size(); ++i) {
            Integer x = res[i] % modulus;
            if (x < 0) x += modulus;
            if (x > half) x -= modulus;
            cand[i] = x;
            content = gcd(content, x);
        }
        if (content == 0 || cand.back() == 0) continue;
        if (cand.back() < 0) content = -content;
        for (auto& x : cand) x /= content;
        Poly<Rational> gr = rational_poly(cand);
        if ((ar % gr).is_zero() && (br % gr).is_zero()) return gr.monic();
    }
    throw std::runtime_error("modular gcd failed to stabilize");
}

} // namespace detail

template <class K>
Poly<K> poly_gcd(const Poly<K>& a, const Poly<K>& b) {
    if constexpr (std::is_same_v<K, Rational>) {
        return detail::gcd_rational(a, b);
    } else {
        Poly<K> x = a, y = b;
        while (!y.is_zero()) {
            Poly<K> r = (x % y);
            x = y.monic();
            y = r.monic();
        }
        return x.monic();
    }
}

} // namespace dixq
