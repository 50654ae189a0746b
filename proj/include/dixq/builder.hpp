#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffop.hpp"
#include "interp.hpp"

namespace dixq {

// Reduction of psi(n+k) to the basis (psi(n-1), psi(n)):
// psi(n+k) = r1_k psi(n-1) + r2_k psi(n), k in [-m, m].
template <class K>
struct BasisReduction {
    int m = 0;
    std::vector<std::pair<FieldElement<RatFunc<K>>, FieldElement<RatFunc<K>>>> r;

    const std::pair<FieldElement<RatFunc<K>>, FieldElement<RatFunc<K>>>& at(int k) const {
        return r.at(static_cast<size_t>(k + m));
    }
};

template <class K>
BasisReduction<K> reduce_basis(const ChiPair<K>& chis, int m) {
    using Kn = RatFunc<K>;
    using FE = FieldElement<Kn>;
    if (m < 1) throw std::invalid_argument("reduce_basis: m must be >= 1");
    if (chis.chi1.is_zero()) throw std::domain_error("reduce_basis: chi1 identically zero");
    const Poly<Kn>& f = chis.chi1.f();
    FE zero(RatFunc<Kn>(), RatFunc<Kn>(), f);
    FE one = FE::constant(Kn(K(1)), f);

    BasisReduction<K> red;
    red.m = m;
    red.r.assign(2 * m + 1, {zero, zero});
    auto& r = red.r;
    auto idx = [m](int k) { return static_cast<size_t>(k + m); };
    r[idx(-1)] = {one, zero};
    r[idx(0)] = {zero, one};
    // upward: psi(n+k+1) = chi1(n+k) psi(n+k-1) + chi2(n+k) psi(n+k)
    for (int k = 0; k < m; ++k) {
        FE c1k = shift_n(chis.chi1, k), c2k = shift_n(chis.chi2, k);
        r[idx(k + 1)] = {c1k * r[idx(k - 1)].first + c2k * r[idx(k)].first,
                         c1k * r[idx(k - 1)].second + c2k * r[idx(k)].second};
    }
    // downward: psi(n+k-1) = (psi(n+k+1) - chi2(n+k) psi(n+k)) / chi1(n+k)
    for (int k = -1; k > -m; --k) {
        FE c1k = shift_n(chis.chi1, k), c2k = shift_n(chis.chi2, k);
        if (c1k.is_zero())
            throw std::domain_error("reduce_basis: chi1 vanishes at shift " + std::to_string(k));
        r[idx(k - 1)] = {(r[idx(k + 1)].first - c2k * r[idx(k)].first) / c1k,
                         (r[idx(k + 1)].second - c2k * r[idx(k)].second) / c1k};
    }
    return red;
}

// L(lambda_1) in closed form from the series coefficients of chi1, chi2.
template <class K>
DiffOp<K> build_L2_closed(const ParameterSequences<K>& p, const CurveParams<K>& curve) {
    using Kn = RatFunc<K>;
    SeriesCoeffs<K> sc = series_coeffs_closed(p, curve);
    Kn b0 = sc.b0, b1 = sc.b1, e0 = sc.e0, e1 = sc.e1;
    Kn b0p = shift_n(b0, 1), e0p = shift_n(e0, 1), e1p = shift_n(e1, 1);
    Kn b0m = shift_n(b0, -1), b1m = shift_n(b1, -1), e0m = shift_n(e0, -1);
    if (b0m.is_zero())
        throw std::domain_error("build_L2_closed: b0 identically zero (degenerate parameters)");

    FieldElement<K> lam = lambda_m(curve, 2);
    Laurent<K> ls = expand_at_Q(lam, curve, 0);
    Kn p1(ls.coeff(-1)), p0(ls.coeff(0));

    Kn u1 = p1 - e0 - e0p;
    Kn u0 = p0 - b0 - b0p - p1 * e0 + e0 * e0 - e1 - e1p;
    Kn um1 = -b1 + b0 * (-p1 - b1m / b0m + e0m + e0);
    Kn um2 = b0 * b0m;

    DiffOp<K> L;
    L.set(2, Kn(K(1)));
    L.set(1, u1);
    L.set(0, u0);
    L.set(-1, um1);
    L.set(-2, um2);
    return L;
}

struct BuildOptions {
    int sample_base = 20;
    int max_samples = 160;
    long seed = 0; // offsets the sample base deterministically on retry
    int expansion_margin = 0;
    // The closing identity check over the symbolic shift variable.  Grid
    // specializations that are re-verified downstream may disable it.
    bool final_symbolic_check = true;
};

namespace detail {

// Solve the (possibly overdetermined) exact linear system A x = b.
// Returns nothing if the system is rank-deficient or inconsistent.
template <class K>
std::optional<std::vector<K>> solve_exact(std::vector<std::vector<K>> A, std::vector<K> b,
                                          size_t cols) {
    size_t rows = A.size();
    std::vector<size_t> pivot_row(cols, SIZE_MAX);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t pr = SIZE_MAX;
        for (size_t r = rank; r < rows; ++r)
            if (!is_zero_value(A[r][c])) {
                pr = r;
                break;
            }
        if (pr == SIZE_MAX) continue;
        std::swap(A[pr], A[rank]);
        std::swap(b[pr], b[rank]);
        K inv = K(1) / A[rank][c];
        for (size_t j = c; j < cols; ++j) A[rank][j] = A[rank][j] * inv;
        b[rank] = b[rank] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || is_zero_value(A[r][c])) continue;
            K f = A[r][c];
            for (size_t j = c; j < cols; ++j) A[r][j] = A[r][j] - f * A[rank][j];
            b[r] = b[r] - f * b[rank];
        }
        pivot_row[c] = rank;
        ++rank;
    }
    if (rank < cols) return std::nullopt;
    for (size_t r = rank; r < rows; ++r)
        if (!is_zero_value(b[r])) return std::nullopt;
    std::vector<K> x(cols);
    for (size_t c = 0; c < cols; ++c) x[c] = b[pivot_row[c]];
    return x;
}

// Basis reduction with n specialized to t before the recursion runs, so all
// arithmetic stays in K(z).  Throws std::domain_error on degenerate values.
template <class K>
void reduce_basis_at(const ChiPair<K>& chis, int m, const K& t, std::vector<FieldElement<K>>& r1,
                     std::vector<FieldElement<K>>& r2) {
    using FE = FieldElement<K>;
    Poly<K> f = map_poly<RatFunc<K>, K>(chis.chi1.f(), [&](const RatFunc<K>& c) {
        return c.eval(t); // curve coefficients are n-independent
    });
    FE zero(RatFunc<K>(), RatFunc<K>(), f);
    FE one = FE::constant(K(1), f);
    r1.assign(static_cast<size_t>(2 * m + 1), zero);
    r2.assign(static_cast<size_t>(2 * m + 1), zero);
    auto idx = [m](int k) { return static_cast<size_t>(k + m); };
    r1[idx(-1)] = one;
    r2[idx(0)] = one;
    for (int k = 0; k < m; ++k) {
        FE c1k = specialize_n(chis.chi1, t + K(k)), c2k = specialize_n(chis.chi2, t + K(k));
        r1[idx(k + 1)] = c1k * r1[idx(k - 1)] + c2k * r1[idx(k)];
        r2[idx(k + 1)] = c1k * r2[idx(k - 1)] + c2k * r2[idx(k)];
    }
    for (int k = -1; k > -m; --k) {
        FE c1k = specialize_n(chis.chi1, t + K(k)), c2k = specialize_n(chis.chi2, t + K(k));
        if (c1k.is_zero()) throw std::domain_error("reduce_basis_at: chi1 vanishes");
        r1[idx(k - 1)] = (r1[idx(k + 1)] - c2k * r1[idx(k)]) / c1k;
        r2[idx(k - 1)] = (r2[idx(k + 1)] - c2k * r2[idx(k)]) / c1k;
    }
}

} // namespace detail

// The elimination construction: the unique L = T^m + sum_{i<m} u_i T^i with
// support [-m, m] such that L psi = lambda_m psi via the basis reduction,
// i.e. P1 - lambda_m = 0 and P2 = 0 identically.
template <class K>
DiffOp<K> build_L_generic(const ParameterSequences<K>& p, const CurveParams<K>& curve, int m,
                          const BuildOptions& opts = {}) {
    using Kn = RatFunc<K>;
    if (m < 2) throw std::invalid_argument("build_L_generic: m must be >= 2");
    ChiPair<K> chis = chi_pair(p, curve);
    CurveParams<Kn> cvn = lift_curve(curve);
    FieldElement<Kn> lam_n = lambda_m(cvn, m);
    int order = 2 * m + 6 + opts.expansion_margin;

    // unknowns u_i for i = m-1 .. -m; column index m-1-i
    size_t cols = static_cast<size_t>(2 * m);
    auto col_of = [m](int i) { return static_cast<size_t>(m - 1 - i); };

    struct Sample {
        long t;
        std::vector<K> u;
    };
    std::vector<Sample> samples;
    long next_t = opts.sample_base + opts.seed;
    int skipped = 0;

    auto gather = [&](size_t target) {
        while (samples.size() < target) {
            if (skipped > opts.max_samples)
                throw std::runtime_error("build_L_generic: too many degenerate samples");
            long t = next_t++;
            K tk(t);
            std::vector<FieldElement<K>> r1, r2;
            FieldElement<K> lam_s;
            try {
                detail::reduce_basis_at(chis, m, tk, r1, r2);
                lam_s = specialize_n(lam_n, tk);
            } catch (const std::domain_error&) {
                ++skipped;
                continue;
            }
            std::vector<Laurent<K>> S1, S2;
            Laurent<K> lamS = expand_at_Q(lam_s, curve, order);
            bool bad = false;
            for (int k = -m; k <= m; ++k) {
                try {
                    S1.push_back(r1[k + m].is_zero() ? Laurent<K>::zero_to(order)
                                                     : expand_at_Q(r1[k + m], curve, order));
                    S2.push_back(r2[k + m].is_zero() ? Laurent<K>::zero_to(order)
                                                     : expand_at_Q(r2[k + m], curve, order));
                } catch (const std::runtime_error&) {
                    bad = true;
                    break;
                }
            }
            if (bad) {
                ++skipped;
                continue;
            }
            int elow = lamS.low();
            for (const auto& s : S1) elow = std::min(elow, s.low());
            for (const auto& s : S2) elow = std::min(elow, s.low());
            std::vector<std::vector<K>> A;
            std::vector<K> b;
            for (int e = elow; e <= order; ++e) {
                // P1 - lambda = 0 row
                std::vector<K> row(cols, K(0));
                for (int i = -m; i < m; ++i) row[col_of(i)] = S2[i + m].coeff(e);
                A.push_back(row);
                b.push_back(lamS.coeff(e) - S2[m + m].coeff(e));
                // P2 = 0 row
                std::vector<K> row2(cols, K(0));
                for (int i = -m; i < m; ++i) row2[col_of(i)] = S1[i + m].coeff(e);
                A.push_back(row2);
                b.push_back(K(0) - S1[m + m].coeff(e));
            }
            auto sol = detail::solve_exact<K>(std::move(A), std::move(b), cols);
            if (!sol) {
                ++skipped;
                continue;
            }
            // exact verification at this sample in the function field
            FieldElement<K> P1 = r2[m + m], P2 = r1[m + m];
            for (int i = -m; i < m; ++i) {
                RatFunc<K> ui((*sol)[col_of(i)]);
                P1 = P1 + r2[i + m].scaled(ui);
                P2 = P2 + r1[i + m].scaled(ui);
            }
            if (!(P1 == lam_s) || !P2.is_zero()) {
                ++skipped;
                continue;
            }
            samples.push_back({t, std::move(*sol)});
        }
    };

    size_t target = static_cast<size_t>(4 * m + 8);
    std::vector<Kn> u(cols);
    while (true) {
        gather(target);
        bool all_ok = true;
        std::string diag;
        for (size_t c = 0; c < cols && all_ok; ++c) {
            std::vector<std::pair<K, K>> pts;
            pts.reserve(samples.size());
            for (const auto& s : samples) pts.emplace_back(K(s.t), s.u[c]);
            bool done = false;
            if (4 * m + 3 <= static_cast<int>(pts.size())) {
                try {
                    u[c] = Kn(poly_interpolate(pts, 4 * m + 2));
                    done = true;
                } catch (const std::runtime_error&) {
                }
            }
            if (!done) {
                for (int cap : {6 * m, static_cast<int>(samples.size()) - 3}) {
                    try {
                        u[c] = ratfunc_reconstruct(pts, cap);
                        done = true;
                        break;
                    } catch (const std::runtime_error&) {
                    }
                }
            }
            if (!done) {
                all_ok = false;
                diag = "coefficient u_" + std::to_string(m - 1 - static_cast<int>(c)) +
                       " not reconstructible from " + std::to_string(samples.size()) + " samples";
            }
        }
        if (all_ok) break;
        if (static_cast<int>(target) * 2 > opts.max_samples)
            throw std::runtime_error("build_L_generic: reconstruction cap exceeded (" + diag + ")");
        target *= 2;
    }

    // Final verification that P1 - lambda_m = 0 and P2 = 0 identically in n:
    // a degree-bounded sampled proof.  Written over a common denominator,
    // the identity's numerator has n-degree at most `budget`; it has already
    // been checked exactly at every gathered sample, so vanishing at more
    // than `budget` distinct non-degenerate integers proves the identity.
    if (opts.final_symbolic_check) {
        auto fe_total = [](const FieldElement<Kn>& e) {
            long s = 0;
            auto scan = [&s](const RatFunc<Kn>& comp) {
                for (const auto& c : comp.num().coeffs())
                    s += std::max(0, c.num().degree()) + std::max(0, c.den().degree());
                for (const auto& c : comp.den().coeffs())
                    s += std::max(0, c.num().degree()) + std::max(0, c.den().degree());
            };
            scan(e.a());
            scan(e.b());
            return s;
        };
        // num+den n-degree bounds compose additively under + and *; a
        // division contributes three factors (conjugate and norm)
        long t1b = fe_total(chis.chi1), t2b = fe_total(chis.chi2);
        std::vector<long> B(static_cast<size_t>(2 * m + 1), 0);
        auto idx = [m](int k) { return static_cast<size_t>(k + m); };
        for (int k = 0; k < m; ++k) B[idx(k + 1)] = t1b + B[idx(k - 1)] + t2b + B[idx(k)];
        for (int k = -1; k > -m; --k)
            B[idx(k - 1)] = B[idx(k + 1)] + t2b + B[idx(k)] + 3 * t1b;
        long budget = B[idx(m)];
        for (int i = -m; i < m; ++i)
            budget += B[idx(i)] + std::max(0, u[col_of(i)].num().degree()) +
                      std::max(0, u[col_of(i)].den().degree());

        long verified = static_cast<long>(samples.size());
        long degenerate = 0;
        while (verified <= budget) {
            if (degenerate > budget + 1000)
                throw std::runtime_error("build_L_generic: verification points exhausted");
            long t = next_t++;
            K tk(t);
            std::vector<FieldElement<K>> r1, r2;
            FieldElement<K> lam_s;
            std::vector<RatFunc<K>> uv(cols);
            try {
                detail::reduce_basis_at(chis, m, tk, r1, r2);
                lam_s = specialize_n(lam_n, tk);
                for (size_t c = 0; c < cols; ++c) uv[c] = RatFunc<K>(u[c].eval(tk));
            } catch (const std::domain_error&) {
                ++degenerate;
                continue;
            }
            FieldElement<K> P1 = r2[static_cast<size_t>(2 * m)], P2 = r1[static_cast<size_t>(2 * m)];
            for (int i = -m; i < m; ++i) {
                P1 = P1 + r2[static_cast<size_t>(i + m)].scaled(uv[col_of(i)]);
                P2 = P2 + r1[static_cast<size_t>(i + m)].scaled(uv[col_of(i)]);
            }
            if (!(P1 == lam_s) || !P2.is_zero())
                throw std::runtime_error("build_L_generic: symbolic identity verification failed");
            ++verified;
        }
    }

    DiffOp<K> L;
    L.set(m, Kn(K(1)));
    for (int i = -m; i < m; ++i) L.set(i, u[col_of(i)]);
    return L;
}

// Specialize every coefficient of a symbolic-(c1, c2) operator.
inline DiffOp<Rational> specialize_c_op(const DiffOp<KcSym>& op, const Rational& c1,
                                        const Rational& c2) {
    DiffOp<Rational> out;
    for (const auto& [i, u] : op.coeffs())
        out.set(i, map_ratfunc<KcSym, Rational>(
                       u, [&](const KcSym& v) { return specialize_c(v, c1, c2); }));
    return out;
}

// Lifts a family (c1, c2) -> operator over Q, with coefficients polynomial
// in n, c1 and c2, to a single operator over Q(c1, c2) by bivariate
// interpolation on an integer grid.  Interpolation is verified on every
// grid node plus `extra` off-grid specializations against the builder.
template <class Builder>
DiffOp<KcSym> lift_symbolic_c(Builder&& build_at, int degree_bound = 5, long grid_base = 2,
                              int extra = 2) {
    int N = degree_bound + 3;
    for (int attempt = 0; attempt < 4; ++attempt, degree_bound += 3, N = degree_bound + 3) {
        // grid nodes; skip values where the builder rejects the curve/params
        std::vector<Rational> xs, ys;
        std::vector<std::vector<DiffOp<Rational>>> ops;
        long cx = grid_base;
        bool grid_ok = true;
        while (static_cast<int>(xs.size()) < N && grid_ok) {
            Rational x(cx++);
            std::vector<Rational> row_ys;
            std::vector<DiffOp<Rational>> row;
            long cy = grid_base;
            while (static_cast<int>(row.size()) < N) {
                if (cy - grid_base > 4 * N) {
                    grid_ok = false;
                    break;
                }
                Rational y(cy++);
                try {
                    row.push_back(build_at(x, y));
                    row_ys.push_back(y);
                } catch (const std::exception&) {
                }
            }
            if (!grid_ok) break;
            if (ys.empty())
                ys = row_ys;
            else if (ys != row_ys) {
                // all rows must share the same c2 nodes; rebuild the row on
                // the established nodes, skipping the x on failure
                row.clear();
                bool ok = true;
                for (const Rational& y : ys) {
                    try {
                        row.push_back(build_at(x, y));
                    } catch (const std::exception&) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
            }
            xs.push_back(x);
            ops.push_back(std::move(row));
        }
        if (!grid_ok) continue;

        int smin = 0, smax = 0;
        for (const auto& row : ops)
            for (const auto& op : row) {
                smin = std::min(smin, op.i_min());
                smax = std::max(smax, op.i_max());
                for (const auto& [i, u] : op.coeffs())
                    if (!u.is_polynomial())
                        throw std::runtime_error(
                            "lift_symbolic_c: non-polynomial coefficient in n");
            }

        DiffOp<KcSym> out;
        bool consistent = true;
        for (int s = smin; s <= smax && consistent; ++s) {
            int dn = -1;
            for (const auto& row : ops)
                for (const auto& op : row) dn = std::max(dn, op.coeff(s).num().degree());
            if (dn < 0) continue;
            std::vector<KcSym> ncoeffs(static_cast<size_t>(dn) + 1, KcSym(RatC1(Rational(0))));
            for (int k = 0; k <= dn && consistent; ++k) {
                // inner pass: polynomials in c2 for each fixed c1 node
                std::vector<Poly<Rational>> qc2(xs.size());
                for (size_t i = 0; i < xs.size() && consistent; ++i) {
                    std::vector<std::pair<Rational, Rational>> pts;
                    for (size_t j = 0; j < ys.size(); ++j)
                        pts.emplace_back(ys[j], ops[i][j].coeff(s).num().coeff(k));
                    try {
                        qc2[i] = poly_interpolate(pts, degree_bound);
                    } catch (const std::runtime_error&) {
                        consistent = false;
                    }
                }
                if (!consistent) break;
                int dc2 = -1;
                for (const auto& q : qc2) dc2 = std::max(dc2, q.degree());
                // outer pass: each c2-degree coefficient as a polynomial in c1
                std::vector<RatC1> cc(static_cast<size_t>(std::max(dc2, 0)) + 1,
                                      RatC1(Rational(0)));
                for (int e = 0; e <= dc2 && consistent; ++e) {
                    std::vector<std::pair<Rational, Rational>> pts;
                    for (size_t i = 0; i < xs.size(); ++i) pts.emplace_back(xs[i], qc2[i].coeff(e));
                    try {
                        cc[static_cast<size_t>(e)] = RatC1(poly_interpolate(pts, degree_bound));
                    } catch (const std::runtime_error&) {
                        consistent = false;
                    }
                }
                if (!consistent) break;
                if (dc2 >= 0) ncoeffs[static_cast<size_t>(k)] = KcSym(Poly<RatC1>::from_coeffs(cc));
            }
            if (!consistent) break;
            out.set(s, RatFunc<KcSym>(Poly<KcSym>::from_coeffs(std::move(ncoeffs))));
        }
        if (!consistent) continue; // degree bound too small; escalate

        // off-grid cross-checks: the lift must specialize back to the builder
        bool verified = true;
        long probe = grid_base + 4 * N + 11;
        for (int v = 0; v < extra && verified; ++v) {
            Rational x(probe + 2 * v), y(probe + 2 * v + 1);
            DiffOp<Rational> direct;
            try {
                direct = build_at(x, y);
            } catch (const std::exception&) {
                ++extra; // degenerate probe point; try another
                probe += 1;
                continue;
            }
            if (!(specialize_c_op(out, x, y) == direct)) verified = false;
        }
        if (!verified) continue;
        return out;
    }
    throw std::runtime_error("lift_symbolic_c: interpolation degree bound exceeded");
}

// The distinguished family a(n) = n+1, gamma(n) = n: polynomial coefficients.
template <class K>
std::pair<DiffOp<K>, DiffOp<K>> theorem2_operators(const CurveParams<K>& curve,
                                                   const BuildOptions& opts = {}) {
    using Kn = RatFunc<K>;
    ParameterSequences<K> p{Kn(Poly<K>::from_coeffs({K(1), K(1)})), Kn::variable()};
    DiffOp<K> L2 = build_L2_closed(p, curve);
    DiffOp<K> L3;
    if constexpr (std::is_same_v<K, KcSym>) {
        // Solving the elimination directly over Q(c1, c2) is prohibitively
        // slow; the coefficients are polynomial in c1, c2, so lift the fast
        // specialized builds by verified interpolation instead.
        L3 = lift_symbolic_c([&](const Rational& c1v, const Rational& c2v) {
            CurveParams<Rational> cv = make_curve(c1v, c2v);
            ParameterSequences<Rational> ps{
                RatFunc<Rational>(Poly<Rational>::from_coeffs({Rational(1), Rational(1)})),
                RatFunc<Rational>::variable()};
            BuildOptions o = opts;
            o.final_symbolic_check = false; // re-verified via off-grid probes
            return build_L_generic(ps, cv, 3, o);
        });
    } else {
        L3 = build_L_generic(p, curve, 3, opts);
    }
    for (const auto* op : {&L2, &L3})
        for (const auto& [i, c] : op->coeffs())
            if (!c.is_polynomial())
                throw std::runtime_error(
                    "theorem2_operators: non-polynomial coefficient at shift " + std::to_string(i));
    return {L2, L3};
}

// Resolve the lambda + alpha lambda_1 + beta ambiguity: find rational
// (alpha, beta) with ref = built + alpha L2 + beta Id, if any.
template <class K>
struct AffineMatch {
    bool exact = false;
    K alpha{}, beta{};
    DiffOp<K> residual;
};

template <class K>
AffineMatch<K> match_affine(const DiffOp<K>& built, const DiffOp<K>& l2, const DiffOp<K>& ref) {
    AffineMatch<K> res;
    DiffOp<K> diff = ref - built;
    RatFunc<K> a = diff.coeff(2);
    if (!a.is_polynomial() || a.num().degree() > 0) {
        res.residual = diff;
        return res;
    }
    res.alpha = a.num().constant();
    DiffOp<K> rem = diff - l2.scaled(RatFunc<K>(res.alpha));
    RatFunc<K> b = rem.coeff(0);
    if (!b.is_polynomial() || b.num().degree() > 0) {
        res.residual = rem;
        return res;
    }
    res.beta = b.num().constant();
    DiffOp<K> rem2 = rem - DiffOp<K>::identity().scaled(RatFunc<K>(res.beta));
    res.residual = rem2;
    res.exact = rem2.is_zero();
    return res;
}

// Additive constant in the T^0 term between two otherwise equal operators.
template <class K>
std::optional<K> constant_shift(const DiffOp<K>& built, const DiffOp<K>& ref) {
    DiffOp<K> diff = ref - built;
    if (diff.is_zero()) return K(0);
    if (diff.i_min() != 0 || diff.i_max() != 0) return std::nullopt;
    RatFunc<K> c = diff.coeff(0);
    if (!c.is_polynomial() || c.num().degree() > 0) return std::nullopt;
    return c.num().constant();
}

} // namespace dixq
