#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "ratfunc.hpp"

namespace dixq {

// Unique polynomial of degree <= degree_bound through all points.
// Overdetermined but inconsistent data is an error, never a fit.
template <class K>
Poly<K> poly_interpolate(const std::vector<std::pair<K, K>>& points, int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("poly_interpolate: negative degree bound");
    if (static_cast<int>(points.size()) < degree_bound + 1)
        throw std::invalid_argument("poly_interpolate: not enough points");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("poly_interpolate: duplicate nodes");

    // Newton form on the first degree_bound+1 nodes
    size_t m = static_cast<size_t>(degree_bound) + 1;
    std::vector<K> dd(m);
    for (size_t i = 0; i < m; ++i) dd[i] = points[i].second;
    for (size_t k = 1; k < m; ++k)
        for (size_t i = m - 1; i >= k; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - k].first);
    Poly<K> p(dd[m - 1]);
    for (size_t i = m - 1; i-- > 0;) {
        Poly<K> lin = Poly<K>::from_coeffs({-points[i].first, K(1)});
        p = p * lin + Poly<K>(dd[i]);
    }
    for (const auto& [x, y] : points)
        if (!(p.eval(x) == y))
            throw std::runtime_error("poly_interpolate: data inconsistent with degree bound");
    return p;
}

template <class K>
RatFunc<K> ratfunc_reconstruct_generic(const std::vector<std::pair<K, K>>& points,
                                       int max_total_degree);

namespace interp_detail {

using detail::gcd_prime;
using detail::u64;
using detail::zp_inv;
using detail::zp_mul;
using detail::zp_trim;

// residue of a rational in Z_p; false if the denominator vanishes mod p
inline bool rational_mod(const Rational& q, u64 p, u64& out) {
    u64 d = static_cast<u64>(denom(q) % Integer(p));
    if (d == 0) return false;
    Integer nm = numer(q) % Integer(p);
    if (nm < 0) nm += Integer(p);
    out = zp_mul(static_cast<u64>(nm), zp_inv(d, p), p);
    return true;
}

inline u64 zp_eval(const std::vector<u64>& c, u64 x, u64 p) {
    u64 r = 0;
    for (size_t i = c.size(); i-- > 0;) r = (zp_mul(r, x, p) + c[i]) % p;
    return r;
}

// rational number with |num|, den <= sqrt(M/2) congruent to u mod M
inline bool rational_lift(Integer u, const Integer& M, Rational& out) {
    Integer bound = bmp::sqrt(M >> 1);
    Integer a0 = M, a1 = u, x0(0), x1(1);
    while (a1 > bound) {
        Integer q = a0 / a1;
        Integer a2 = a0 - q * a1;
        a0 = a1;
        a1 = a2;
        Integer x2 = x0 - q * x1;
        x0 = x1;
        x1 = x2;
    }
    if (x1 == 0) return false;
    Integer den = x1, num = a1;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (den > bound || gcd(abs(num), den) != 1) return false;
    out = Rational(num) / Rational(den);
    return true;
}

struct ZpCandidate {
    int dr = -1, dt = -1;
    std::vector<u64> r, t; // t monic
    bool none = false;     // no row within the cap at this prime
};

// minimal-total-degree EEA row through the points mod p
inline bool cauchy_mod_p(const std::vector<std::pair<Rational, Rational>>& pts, int cap, u64 p,
                         ZpCandidate& out) {
    size_t n = pts.size();
    std::vector<u64> xs(n), ys(n);
    for (size_t i = 0; i < n; ++i)
        if (!rational_mod(pts[i].first, p, xs[i]) || !rational_mod(pts[i].second, p, ys[i]))
            return false;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (xs[i] == xs[j]) return false; // node collision mod p

    // Newton interpolation mod p
    std::vector<u64> dd = ys;
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) {
            u64 dx = (xs[i] + p - xs[i - k]) % p;
            if (dx == 0) return false;
            dd[i] = zp_mul((dd[i] + p - dd[i - 1]) % p, zp_inv(dx, p), p);
        }
    std::vector<u64> f{dd[n - 1]};
    for (size_t i = n - 1; i-- > 0;) {
        // f = f*(x - x_i) + dd[i]
        std::vector<u64> g(f.size() + 1, 0);
        for (size_t k = 0; k < f.size(); ++k) {
            g[k + 1] = (g[k + 1] + f[k]) % p;
            g[k] = (g[k] + zp_mul(f[k], p - xs[i], p)) % p;
        }
        g[0] = (g[0] + dd[i]) % p;
        f = std::move(g);
        zp_trim(f);
    }
    std::vector<u64> M{1};
    for (size_t i = 0; i < n; ++i) {
        std::vector<u64> g(M.size() + 1, 0);
        for (size_t k = 0; k < M.size(); ++k) {
            g[k + 1] = (g[k + 1] + M[k]) % p;
            g[k] = (g[k] + zp_mul(M[k], p - xs[i], p)) % p;
        }
        M = std::move(g);
    }

    // EEA rows on (M, f); r = f t mod M holds for every row, so a row fits
    // the data whenever t has no zero among the nodes
    auto degree = [](const std::vector<u64>& v) { return static_cast<int>(v.size()) - 1; };
    std::vector<u64> r0 = M, r1 = f, t0, t1{1};
    int best_total = cap + 1;
    std::vector<u64> br, bt;
    auto consider = [&](const std::vector<u64>& r, const std::vector<u64>& t) {
        if (t.empty()) return;
        int total = r.empty() ? degree(t) : degree(r) + degree(t);
        if (total > cap || total >= best_total || total + 1 > static_cast<int>(n)) return;
        for (u64 x : xs)
            if (zp_eval(t, x, p) == 0) return;
        best_total = total;
        br = r;
        bt = t;
    };
    consider(r1, t1);
    while (!r1.empty()) {
        // r2 = r0 mod r1, q = r0 div r1
        std::vector<u64> q, r2 = r0;
        if (r2.size() >= r1.size()) {
            q.assign(r2.size() - r1.size() + 1, 0);
            u64 linv = zp_inv(r1.back(), p);
            for (size_t k = r2.size() - 1;; --k) {
                if (k + 1 < r1.size()) break;
                u64 c = zp_mul(r2[k], linv, p);
                if (c != 0) {
                    size_t off = k - (r1.size() - 1);
                    q[off] = c;
                    for (size_t j = 0; j < r1.size(); ++j)
                        r2[off + j] = (r2[off + j] + p - zp_mul(c, r1[j], p)) % p;
                }
                if (k == 0) break;
            }
        }
        zp_trim(r2);
        zp_trim(q);
        // t2 = t0 - q*t1
        std::vector<u64> t2(std::max(t0.size(), q.size() + t1.size()), 0);
        for (size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < t1.size(); ++j)
                t2[i + j] = (t2[i + j] + p - zp_mul(q[i], t1[j], p)) % p;
        zp_trim(t2);
        r0 = std::move(r1);
        t0 = std::move(t1);
        r1 = std::move(r2);
        t1 = std::move(t2);
        if (!r1.empty()) consider(r1, t1);
    }
    if (best_total > cap) {
        out.none = true;
        return true;
    }
    // normalize t monic
    u64 linv = zp_inv(bt.back(), p);
    for (auto& c : br) c = zp_mul(c, linv, p);
    for (auto& c : bt) c = zp_mul(c, linv, p);
    out.none = false;
    out.dr = degree(br);
    out.dt = degree(bt);
    out.r = std::move(br);
    out.t = std::move(bt);
    return true;
}

// Modular Cauchy interpolation with CRT lifting; exact final validation.
inline RatFunc<Rational> ratfunc_reconstruct_rational(
    const std::vector<std::pair<Rational, Rational>>& points, int max_total_degree) {
    size_t n = points.size();
    bool all_zero = true;
    for (const auto& [x, y] : points)
        if (!is_zero_value(y)) {
            all_zero = false;
            break;
        }
    if (all_zero) return RatFunc<Rational>();

    Integer modulus(0);
    std::vector<Integer> rr, tr; // CRT residues, symmetric combination deferred
    int dr = -1, dt = -1;
    size_t agree = 0, none_count = 0;
    size_t next_try = 4;
    for (size_t pi = 0; pi < 4096; ++pi) {
        u64 p = gcd_prime(pi);
        ZpCandidate cand;
        if (!cauchy_mod_p(points, max_total_degree, p, cand)) continue;
        if (cand.none) {
            // consistently impossible caps fail fast
            if (++none_count >= 3 && agree == 0)
                throw std::runtime_error(
                    "ratfunc_reconstruct: no rational function within the degree cap");
            continue;
        }
        int total = cand.dr < 0 ? cand.dt : cand.dr + cand.dt;
        int cur = agree == 0 ? -1 : (dr < 0 ? dt : dr + dt);
        if (agree == 0 || total > cur) {
            // higher total degree wins: degree drops mark unlucky primes
            dr = cand.dr;
            dt = cand.dt;
            rr.assign(static_cast<size_t>(dr) + 1, Integer(0));
            tr.assign(static_cast<size_t>(dt) + 1, Integer(0));
            modulus = 0;
            agree = 0;
        } else if (cand.dr != dr || cand.dt != dt) {
            continue; // unlucky prime
        }
        // CRT extend
        Integer P(p);
        if (modulus == 0) {
            for (int i = 0; i <= dr; ++i) rr[i] = Integer(cand.r[static_cast<size_t>(i)]);
            for (int i = 0; i <= dt; ++i) tr[i] = Integer(cand.t[static_cast<size_t>(i)]);
            modulus = P;
        } else {
            Integer mm = modulus % P;
            u64 minv = zp_inv(static_cast<u64>(mm), p);
            auto crt = [&](Integer& x, u64 v) {
                u64 xm = static_cast<u64>(x % P);
                u64 d = zp_mul((v + p - xm) % p, minv, p);
                x += modulus * Integer(d);
            };
            for (int i = 0; i <= dr; ++i) crt(rr[static_cast<size_t>(i)], cand.r[static_cast<size_t>(i)]);
            for (int i = 0; i <= dt; ++i) crt(tr[static_cast<size_t>(i)], cand.t[static_cast<size_t>(i)]);
            modulus *= P;
        }
        ++agree;
        if (agree < next_try) continue;
        next_try *= 2;
        // attempt rational lift of every coefficient
        std::vector<Rational> rc(static_cast<size_t>(dr) + 1), tc(static_cast<size_t>(dt) + 1);
        bool ok = true;
        for (int i = 0; i <= dr && ok; ++i) ok = rational_lift(rr[static_cast<size_t>(i)], modulus, rc[static_cast<size_t>(i)]);
        for (int i = 0; i <= dt && ok; ++i) ok = rational_lift(tr[static_cast<size_t>(i)], modulus, tc[static_cast<size_t>(i)]);
        if (!ok) continue;
        RatFunc<Rational> result;
        try {
            result = RatFunc<Rational>(Poly<Rational>::from_coeffs(rc),
                                       Poly<Rational>::from_coeffs(tc));
        } catch (const std::domain_error&) {
            continue;
        }
        bool valid = result.num().degree() + std::max(result.den().degree(), 0) <= max_total_degree;
        for (size_t i = 0; i < n && valid; ++i) {
            try {
                valid = result.eval(points[i].first) == points[i].second;
            } catch (const std::domain_error&) {
                valid = false;
            }
        }
        if (valid) return result;
    }
    throw std::runtime_error("ratfunc_reconstruct: modular reconstruction failed to stabilize");
}

} // namespace interp_detail

// Cauchy interpolation via the extended Euclidean algorithm: the rational
// function of minimal total degree through all points, if one exists with
// deg num + deg den <= max_total_degree.
template <class K>
RatFunc<K> ratfunc_reconstruct(const std::vector<std::pair<K, K>>& points, int max_total_degree) {
    if constexpr (std::is_same_v<K, Rational>) {
        if (!points.empty()) {
            for (size_t i = 0; i < points.size(); ++i)
                for (size_t j = i + 1; j < points.size(); ++j)
                    if (points[i].first == points[j].first)
                        throw std::invalid_argument("ratfunc_reconstruct: duplicate nodes");
            return interp_detail::ratfunc_reconstruct_rational(points, max_total_degree);
        }
    }
    return ratfunc_reconstruct_generic(points, max_total_degree);
}

// Direct exact-arithmetic variant, usable over any field.
template <class K>
RatFunc<K> ratfunc_reconstruct_generic(const std::vector<std::pair<K, K>>& points,
                                       int max_total_degree) {
    size_t n = points.size();
    if (n == 0) throw std::invalid_argument("ratfunc_reconstruct: no points");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("ratfunc_reconstruct: duplicate nodes");

    Poly<K> M(K(1));
    for (const auto& [x, y] : points) M = M * Poly<K>::from_coeffs({-x, K(1)});
    Poly<K> f = poly_interpolate(points, static_cast<int>(n) - 1);

    struct Row {
        Poly<K> r, t;
    };
    std::vector<Row> rows;
    Poly<K> r0 = M, r1 = f, t0, t1(K(1));
    rows.push_back({r1, t1});
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Poly<K> t2 = t0 - q * t1;
        r0 = r1;
        t0 = t1;
        r1 = r2;
        t1 = t2;
        if (!r1.is_zero()) rows.push_back({r1, t1});
    }
    const Row* best = nullptr;
    int best_total = max_total_degree + 1;
    for (const auto& row : rows) {
        if (row.t.is_zero()) continue;
        int total = row.r.degree() + row.t.degree();
        if (row.r.is_zero()) total = row.t.degree();
        if (total > max_total_degree || total >= best_total) continue;
        if (total + 1 > static_cast<int>(n)) continue; // outside the uniqueness window
        bool ok = true;
        for (const auto& [x, y] : points)
            if (is_zero_value(row.t.eval(x))) {
                ok = false;
                break;
            }
        if (!ok) continue;
        if (poly_gcd(row.r, row.t).degree() != 0 && !row.r.is_zero()) continue;
        best = &row;
        best_total = total;
    }
    if (!best)
        throw std::runtime_error("ratfunc_reconstruct: no rational function within the degree cap");
    RatFunc<K> result(best->r, best->t);
    for (const auto& [x, y] : points)
        if (!(result.eval(x) == y))
            throw std::runtime_error("ratfunc_reconstruct: candidate failed validation");
    return result;
}

} // namespace dixq
