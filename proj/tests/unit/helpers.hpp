#pragma once

#include <cstdlib>
#include <random>
#include <stdexcept>

#include <dixq/dixq.hpp>

namespace testutil {

using namespace dixq;

inline unsigned long seed_from_env() {
    const char* s = std::getenv("DIXQ_SEED");
    return s ? std::strtoul(s, nullptr, 10) : 0ul;
}

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(unsigned long salt) : eng(seed_from_env() * 7919 + salt) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng);
    }

    Rational rational() { return Rational(integer(-9, 9)) / Rational(integer(1, 4)); }

    Rational nonzero_rational() {
        for (;;) {
            Rational q = rational();
            if (!is_zero_value(q)) return q;
        }
    }

    Poly<Rational> poly_deg_le(int d) {
        std::vector<Rational> c;
        for (int i = 0; i <= d; ++i) c.push_back(rational());
        return Poly<Rational>::from_coeffs(std::move(c));
    }

    RatFunc<Rational> ratfunc(int num_deg, int den_deg) {
        for (;;) {
            Poly<Rational> den = poly_deg_le(den_deg);
            if (den.is_zero()) continue;
            return RatFunc<Rational>(poly_deg_le(num_deg), den);
        }
    }
};

struct Draw {
    CurveParams<Rational> curve;
    ParameterSequences<Rational> params;
};

// Random degree<=2 polynomial parameters a(n), gamma(n) on a random smooth
// curve; redraws until the non-degeneracy preconditions hold.
inline Draw random_draw(Rng& rng, int max_attempts = 500) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        try {
            CurveParams<Rational> curve = make_curve(rng.rational(), rng.rational());
            Poly<Rational> g = rng.poly_deg_le(2);
            if (g.degree() < 1) continue; // constant gamma is always degenerate
            ParameterSequences<Rational> p{RatFunc<Rational>(rng.poly_deg_le(2)),
                                           RatFunc<Rational>(g)};
            detail::require_nondegenerate(p);
            cd_coeffs(p, curve); // exercises the remaining denominators
            return {curve, p};
        } catch (const std::exception&) {
            continue;
        }
    }
    throw std::runtime_error("random_draw: no admissible parameters found");
}

} // namespace testutil
