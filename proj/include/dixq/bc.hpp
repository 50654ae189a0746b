#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "diffop.hpp"

namespace dixq {

// Burchnall-Chaundy relation: a nonzero Q(lambda, mu) with Q(L2, L3) = 0.
// Monomials lambda^i mu^j are weighted by 2i + 3j.
struct BCMonomial {
    int i, j;
    bool operator==(const BCMonomial& o) const { return i == o.i && j == o.j; }
};

struct BCRelation {
    std::vector<BCMonomial> monomials; // canonical order, mu-major descending
    std::vector<Rational> coeffs;      // same indexing, leading one normalized to 1

    bool has_monomial(int i, int j) const {
        for (size_t k = 0; k < monomials.size(); ++k)
            if (monomials[k].i == i && monomials[k].j == j && !is_zero_value(coeffs[k]))
                return true;
        return false;
    }
};

struct BCOptions {
    int sample_base = 25;
    long seed = 0;
    int retries = 3;
};

namespace bc_detail {

inline std::vector<BCMonomial> monomials_up_to(int weighted_degree) {
    std::vector<BCMonomial> ms;
    for (int j = 0; 3 * j <= weighted_degree; ++j)
        for (int i = 0; 2 * i + 3 * j <= weighted_degree; ++i) ms.push_back({i, j});
    // canonical order: descending by (j, i)
    std::sort(ms.begin(), ms.end(), [](const BCMonomial& a, const BCMonomial& b) {
        if (a.j != b.j) return a.j > b.j;
        return a.i > b.i;
    });
    return ms;
}

} // namespace bc_detail

inline BCRelation bc_relation(const DiffOp<Rational>& L2, const DiffOp<Rational>& L3,
                              int weighted_degree, const BCOptions& opts = {}) {
    using K = Rational;
    if (!commutator(L2, L3).is_zero())
        throw std::invalid_argument("bc_relation: operators do not commute");
    auto ms = bc_detail::monomials_up_to(weighted_degree);
    size_t dim = ms.size();

    // operators for each monomial, built from powers of L2 and L3
    std::vector<DiffOp<K>> ops(dim);
    int smin = 0, smax = 0;
    for (size_t k = 0; k < dim; ++k) {
        ops[k] = L2.pow(static_cast<unsigned>(ms[k].i)) * L3.pow(static_cast<unsigned>(ms[k].j));
        if (!ops[k].is_zero()) {
            smin = std::min(smin, ops[k].i_min());
            smax = std::max(smax, ops[k].i_max());
        }
    }

    long base = opts.sample_base + opts.seed;
    for (int attempt = 0; attempt <= opts.retries; ++attempt, base += static_cast<long>(dim) + 7) {
        int width = smax - smin + 1;
        int nsamples = static_cast<int>(dim) + width + 2;
        // rows: (sample n, shift s); columns: monomials
        std::vector<std::vector<K>> A;
        bool pole = false;
        for (int t = 0; t < nsamples && !pole; ++t) {
            K nk(base + t);
            for (int s = smin; s <= smax; ++s) {
                std::vector<K> row(dim, K(0));
                for (size_t k = 0; k < dim; ++k) {
                    try {
                        row[k] = ops[k].coeff(s).eval(nk);
                    } catch (const std::domain_error&) {
                        pole = true;
                        break;
                    }
                }
                if (pole) break;
                A.push_back(std::move(row));
            }
        }
        if (pole) continue;

        // reduced row echelon form; free columns span the kernel
        size_t rows = A.size();
        std::vector<size_t> pivot_of_col(dim, SIZE_MAX);
        size_t rank = 0;
        for (size_t c = 0; c < dim && rank < rows; ++c) {
            size_t pr = SIZE_MAX;
            for (size_t r = rank; r < rows; ++r)
                if (!is_zero_value(A[r][c])) {
                    pr = r;
                    break;
                }
            if (pr == SIZE_MAX) continue;
            std::swap(A[pr], A[rank]);
            K inv = K(1) / A[rank][c];
            for (size_t j = c; j < dim; ++j) A[rank][j] = A[rank][j] * inv;
            for (size_t r = 0; r < rows; ++r) {
                if (r == rank || is_zero_value(A[r][c])) continue;
                K f = A[r][c];
                for (size_t j = c; j < dim; ++j) A[r][j] = A[r][j] - f * A[rank][j];
            }
            pivot_of_col[c] = rank;
            ++rank;
        }
        if (rank == dim) throw std::runtime_error("bc_relation: no relation at weighted degree " +
                                                  std::to_string(weighted_degree));

        // one kernel vector per free column; columns are already in
        // canonical order, so the first free column gives the element with
        // the lexicographically largest leading monomial.
        std::vector<std::vector<K>> kernel;
        for (size_t c = 0; c < dim; ++c) {
            if (pivot_of_col[c] != SIZE_MAX) continue;
            std::vector<K> v(dim, K(0));
            v[c] = K(1);
            for (size_t c2 = 0; c2 < dim; ++c2)
                if (pivot_of_col[c2] != SIZE_MAX) v[c2] = -A[pivot_of_col[c2]][c];
            kernel.push_back(std::move(v));
        }
        // canonical choice: kernel element whose leading (first nonzero in
        // canonical order) monomial is largest, that coefficient scaled to 1
        size_t best = 0;
        size_t best_lead = SIZE_MAX;
        for (size_t k = 0; k < kernel.size(); ++k) {
            size_t lead = 0;
            while (lead < dim && is_zero_value(kernel[k][lead])) ++lead;
            if (lead < best_lead) {
                best_lead = lead;
                best = k;
            }
        }
        std::vector<K> q = kernel[best];
        K lead_inv = K(1) / q[best_lead];
        for (auto& x : q) x = x * lead_inv;

        // exact verification by full symbolic composition
        DiffOp<K> total;
        for (size_t k = 0; k < dim; ++k)
            if (!is_zero_value(q[k])) total = total + ops[k].scaled(RatFunc<K>(q[k]));
        if (!total.is_zero()) continue; // sampling collision: resample

        BCRelation rel;
        rel.monomials = ms;
        rel.coeffs = std::move(q);
        return rel;
    }
    throw std::runtime_error("bc_relation: sampled kernel failed exact verification repeatedly");
}

} // namespace dixq
