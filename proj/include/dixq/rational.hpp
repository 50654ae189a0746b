#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/miller_rabin.hpp>
#include <string>

namespace dixq {

namespace bmp = boost::multiprecision;

using Integer  = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;

inline Integer numer(const Rational& q) { return Integer(numerator(q)); }
inline Integer denom(const Rational& q) { return Integer(denominator(q)); }

inline Rational rational_from_string(const std::string& s) { return Rational(s); }

inline std::string rational_str(const Rational& q) { return q.str(); }

// Zero test usable across the whole coefficient tower.
template <class K>
inline bool is_zero_value(const K& x) {
    if constexpr (requires { x.is_zero(); })
        return x.is_zero();
    else
        return x == 0;
}

template <class K>
inline bool is_one_value(const K& x) {
    if constexpr (requires { x.is_one(); })
        return x.is_one();
    else
        return x == 1;
}

} // namespace dixq
