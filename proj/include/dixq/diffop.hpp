#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "quadext.hpp"
#include "spectral.hpp"

namespace dixq {

// Finitely supported difference operator sum_i u_i(n) T^i with rational-
// function coefficients.  The zero operator has empty support.
template <class K>
class DiffOp {
public:
    using Coeff = RatFunc<K>;

    DiffOp() = default;

    static DiffOp identity() {
        DiffOp op;
        op.set(0, Coeff(K(1)));
        return op;
    }

    static DiffOp shift(int i) {
        DiffOp op;
        op.set(i, Coeff(K(1)));
        return op;
    }

    bool is_zero() const { return c_.empty(); }
    int i_min() const { return c_.empty() ? 0 : c_.begin()->first; }
    int i_max() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    Coeff coeff(int i) const {
        auto it = c_.find(i);
        return it == c_.end() ? Coeff() : it->second;
    }

    void set(int i, const Coeff& u) {
        if (u.is_zero())
            c_.erase(i);
        else
            c_[i] = u;
    }

    const std::map<int, Coeff>& coeffs() const { return c_; }

    DiffOp operator-() const {
        DiffOp r = *this;
        for (auto& [i, u] : r.c_) u = -u;
        return r;
    }

    DiffOp operator+(const DiffOp& o) const {
        DiffOp r = *this;
        for (const auto& [i, u] : o.c_) r.set(i, r.coeff(i) + u);
        return r;
    }
    DiffOp operator-(const DiffOp& o) const { return *this + (-o); }

    DiffOp scaled(const Coeff& k) const {
        DiffOp r;
        for (const auto& [i, u] : c_) r.set(i, u * k);
        return r;
    }

    // (u(n) T^i)(v(n) T^j) = u(n) v(n+i) T^(i+j)
    DiffOp operator*(const DiffOp& o) const {
        DiffOp r;
        for (const auto& [i, u] : c_)
            for (const auto& [j, v] : o.c_)
                r.set(i + j, r.coeff(i + j) + u * shift_n(v, i));
        return r;
    }

    DiffOp pow(unsigned e) const {
        DiffOp r = identity(), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            b = b * b;
            e >>= 1u;
        }
        return r;
    }

    bool operator==(const DiffOp& o) const { return c_ == o.c_; }
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

private:
    std::map<int, Coeff> c_;
};

template <class K>
DiffOp<K> compose(const DiffOp<K>& l, const DiffOp<K>& m) {
    return l * m;
}

template <class K>
DiffOp<K> commutator(const DiffOp<K>& l, const DiffOp<K>& m) {
    return l * m - m * l;
}

// (L psi)(n) = sum_i u_i(n) psi(n+i) for n in [n_out_first, n_out_first+count),
// with psi given on [n_in_first, n_in_first + values.size()).
// Embed maps a coefficient value in K into the scalar type S.
template <class K, class S, class Embed>
std::vector<S> apply_window(const DiffOp<K>& op, const std::vector<S>& values, int n_in_first,
                            int n_out_first, int count, Embed embed) {
    if (count < 0) throw std::invalid_argument("apply_window: negative count");
    std::vector<S> out;
    out.reserve(count);
    for (int n = n_out_first; n < n_out_first + count; ++n) {
        if (n + op.i_min() < n_in_first ||
            n + op.i_max() >= n_in_first + static_cast<int>(values.size()))
            throw std::domain_error("apply_window: input window too narrow at n = " +
                                    std::to_string(n));
        bool first = true;
        S sum = S();
        for (const auto& [i, u] : op.coeffs()) {
            K uv;
            try {
                uv = u.eval(K(n));
            } catch (const std::domain_error&) {
                throw std::domain_error("apply_window: coefficient pole at n = " +
                                        std::to_string(n));
            }
            S term = values[n + i - n_in_first] * embed(uv);
            sum = first ? term : sum + term;
            first = false;
        }
        out.push_back(first ? S() : sum);
    }
    return out;
}

} // namespace dixq
