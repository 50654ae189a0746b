#pragma once

#include <stdexcept>

#include "rational.hpp"

namespace dixq {

// Element a + b*s of K[s]/(s^2 - d).  Every element carries its d; mixing
// elements from different extensions is an error.
template <class K>
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(const K& a, const K& b, const K& d) : a_(a), b_(b), d_(d) {}

    static QuadExt base(const K& a, const K& d) { return QuadExt(a, K(0), d); }
    static QuadExt root(const K& d) { return QuadExt(K(0), K(1), d); }

    const K& a() const { return a_; }
    const K& b() const { return b_; }
    const K& d() const { return d_; }

    bool is_zero() const { return is_zero_value(a_) && is_zero_value(b_); }
    bool is_rational() const { return is_zero_value(b_); }

    QuadExt conj() const { return QuadExt(a_, -b_, d_); }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    QuadExt operator+(const QuadExt& o) const {
        check(o);
        return QuadExt(a_ + o.a_, b_ + o.b_, join(o));
    }
    QuadExt operator-(const QuadExt& o) const { return *this + (-o); }
    QuadExt operator*(const QuadExt& o) const {
        check(o);
        return QuadExt(a_ * o.a_ + b_ * o.b_ * join(o), a_ * o.b_ + b_ * o.a_, join(o));
    }
    QuadExt operator/(const QuadExt& o) const { return *this * o.inverse(); }

    QuadExt scaled(const K& k) const { return QuadExt(a_ * k, b_ * k, d_); }

    QuadExt inverse() const {
        K norm = a_ * a_ - b_ * b_ * d_;
        if (is_zero_value(norm))
            throw std::domain_error("quadext: non-invertible element (zero norm)");
        return QuadExt(a_ / norm, -b_ / norm, d_);
    }

    bool operator==(const QuadExt& o) const {
        if (!compatible(o)) return false;
        return a_ == o.a_ && b_ == o.b_;
    }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

private:
    K a_, b_, d_;

    bool compatible(const QuadExt& o) const {
        return d_ == o.d_ || is_rational() || o.is_rational();
    }
    void check(const QuadExt& o) const {
        if (!compatible(o)) throw std::domain_error("quadext: mixed extensions");
    }
    K join(const QuadExt& o) const { return is_rational() ? o.d_ : d_; }
};

} // namespace dixq
