#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diffop.hpp"
#include "parser.hpp"

namespace dixq {

// Reference operators for the a(n) = n+1, gamma(n) = n family, entered as
// parseable expressions and instantiated through the common parser.

namespace golden_detail {

template <class K>
DiffOp<K> from_table(const std::vector<std::pair<int, std::string>>& table, const K& c1,
                     const K& c2) {
    DiffOp<K> op;
    for (const auto& [i, s] : table) op.set(i, parse_ratfunc_n<K>(s, c1, c2));
    return op;
}

} // namespace golden_detail

// Symbolic-in-(c1, c2) second-order operator for a(n) = n+1, gamma(n) = n.
template <class K>
DiffOp<K> golden_L2_symbolic(const K& c1, const K& c2) {
    return golden_detail::from_table<K>(
        {
            {2, "1"},
            {1, "2*(n+2)"},
            {0, "-(n^4/2 + n^3 - (1/2)*(1-c2)*n^2 - (1/2)*(8-c1-c2)*n)"},
            {-1, "-(1/2)*(n^3+(c2-1)*n+c1-2)*(n^2+n-1)"},
            {-2, "(1/16)*(n^3+(c2-1)*n+c1-2)*(n^3-3*n^2+(2+c2)*n+c1-c2-2)*(n+1)*(n-2)"},
        },
        c1, c2);
}

// The c1 = 0, c2 = 1 display of the second-order operator, verbatim.  Its
// T^0 entry differs from the symbolic family by an additive constant, and
// its T^-2 entry lacks a factor (n^3 - 2); see golden_example_L2_corrected.
inline DiffOp<Rational> golden_example_L2_printed() {
    return golden_detail::from_table<Rational>(
        {
            {2, "1"},
            {1, "2*(n+2)"},
            {0, "-(1/2)*(n^4+2*n^3-7*n-5)"},
            {-1, "-(1/2)*(n^3-2)*(n^2+n-1)"},
            {-2, "(1/16)*(n^3-3*n^2+3*n-3)*(n+1)*(n-2)"},
        },
        Rational(0), Rational(1));
}

// Same display with the factor (n^3 - 2) restored in the T^-2 entry, which
// is the specialization of the symbolic family at c1 = 0, c2 = 1 except for
// the additive constant in T^0.
inline DiffOp<Rational> golden_example_L2_corrected() {
    DiffOp<Rational> op = golden_example_L2_printed();
    op.set(-2, parse_ratfunc_n<Rational>("(1/16)*(n^3-2)*(n^3-3*n^2+3*n-3)*(n+1)*(n-2)",
                                         Rational(0), Rational(1)));
    return op;
}

// The c1 = 0, c2 = 1 display of the third-order operator, verbatim.
inline DiffOp<Rational> golden_example_L3() {
    return golden_detail::from_table<Rational>(
        {
            {3, "1"},
            {2, "3*n+15/2"},
            {1, "-(3/4)*(n^4+4*n^3+5*n^2-8*n-14)"},
            {0, "-(3/4)*(2*n^5+7*n^4+10*n^3+n^2-12*n-5)"},
            {-1, "(3/16)*(n^8-2*n^6-12*n^5-3*n^4+10*n^3+20*n^2+6*n-12)"},
            {-2, "(3/32)*n*(2*n^2-n-5)*(n^6-3*n^5+3*n^4-5*n^3+6*n^2-6*n+6)"},
            {-3, "-(1/64)*(n-3)*(n^2-1)*(n^3-2)*(n^3-6*n^2+12*n-10)*(n^3-3*n^2+3*n-3)"},
        },
        Rational(0), Rational(1));
}

} // namespace dixq
