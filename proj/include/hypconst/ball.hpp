#pragma once

#include <hypconst/elementary.hpp>
#include <hypconst/interval.hpp>
#include <hypconst/rational.hpp>

#include <algorithm>
#include <stdexcept>

namespace hypconst {

/// C_p for the unit ball B^n: (p+1)/(n+1).
inline Rational ball_C(int n, int p) {
    if (n < 1) throw std::invalid_argument("ball_C: n must be >= 1");
    if (p < 1 || p > n) throw std::invalid_argument("ball_C: p out of [1, n]");
    return Rational(p + 1, n + 1);
}

/// Certified interval for the Bakker-Tsimerman lower bound (n+1)/(2*pi).
inline Interval bakker_tsimerman_alpha(int n, Precision prec) {
    if (n < 1) throw std::invalid_argument("bakker_tsimerman_alpha: n must be >= 1");
    int bits = prec.bits;
    while (true) {
        const Interval value = Rational(n + 1) / two_pi_interval(Precision(bits));
        if (value.width() <= prec.width_bound()) return value;
        if (bits >= Precision::kMaxBits)
            throw precision_exhausted("bakker_tsimerman_alpha: cannot reach requested width");
        bits = std::min(2 * bits, Precision::kMaxBits);
    }
}

/// Smallest dimension from which the ball threshold theorem applies at
/// ramification order l: max(1, ceil(2*pi/l) - 1), certified by interval
/// arithmetic (2*pi/l is irrational, so the ceiling is always certifiable).
inline long ball_min_general_type_dim(long l, Precision prec) {
    if (l < 1) throw std::invalid_argument("ball_min_general_type_dim: l must be >= 1");
    int bits = prec.bits;
    while (true) {
        const Interval q = two_pi_interval(Precision(bits)) / Rational(l);
        try {
            // ceil(x) = smallest integer strictly above x for irrational x
            const long p = smallest_integer_above(q).get_si() - 1;
            return std::max(1L, p);
        } catch (const uncertifiable&) {
            if (bits >= Precision::kMaxBits)
                throw precision_exhausted("ball_min_general_type_dim: cannot certify ceiling");
            bits = std::min(2 * bits, Precision::kMaxBits);
        }
    }
}

}  // namespace hypconst
