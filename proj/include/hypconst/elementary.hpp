#pragma once

#include <hypconst/interval.hpp>
#include <hypconst/rational.hpp>

#include <map>
#include <mutex>
#include <utility>

namespace hypconst {

namespace detail {

/// Gregory series for arctan(1/x), evaluated in fixed point at scale 2^scale.
/// Returns (s, err) with |arctan(1/x) - s/2^scale| <= err/2^scale.
inline std::pair<Integer, unsigned long> arctan_recip_scaled(unsigned long x, unsigned long scale) {
    const Integer one = pow2(scale);
    const Integer xx = Integer(x) * Integer(x);
    Integer power = x;  // x^(2k+1)
    Integer sum = 0;
    unsigned long terms = 0;
    for (unsigned long k = 0;; ++k) {
        const Integer term = one / (Integer(2 * k + 1) * power);
        if (term == 0) break;  // tail of the alternating series is below 1 ulp
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
        ++terms;
        power *= xx;
    }
    // One ulp of floor error per term, plus one ulp for the truncated tail.
    return {sum, terms + 1};
}

}  // namespace detail

/// Interval containing pi with width <= 2^(-prec.bits), via Machin's formula
/// pi = 16 arctan(1/5) - 4 arctan(1/239) with explicit term-wise error
/// accounting. Results are cached per precision.
inline Interval pi_interval(Precision prec) {
    static std::map<int, Interval> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = cache.find(prec.bits); it != cache.end()) return it->second;
    }

    const unsigned long scale = static_cast<unsigned long>(prec.bits) + 20;
    const auto [s5, e5] = detail::arctan_recip_scaled(5, scale);
    const auto [s239, e239] = detail::arctan_recip_scaled(239, scale);
    const Integer scaled = 16 * s5 - 4 * s239;
    const Integer err = Integer(16 * e5 + 4 * e239);
    const Integer denom = pow2(scale);
    Interval result{Rational(scaled - err, denom), Rational(scaled + err, denom)};
    if (result.width() > prec.width_bound())
        throw precision_exhausted("pi_interval: cannot reach requested width");

    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(prec.bits, result);
    return result;
}

/// Interval containing 2*pi with width <= 2^(-prec.bits).
inline Interval two_pi_interval(Precision prec) {
    const Interval pi = pi_interval(Precision(std::min(prec.bits + 1, Precision::kMaxBits)));
    Interval result = pi * Rational(2);
    if (result.width() > prec.width_bound())
        throw precision_exhausted("two_pi_interval: cannot reach requested width");
    return result;
}

/// Interval containing Euler's number e with width <= 2^(-prec.bits), from the
/// factorial series with tail bound sum_{k>n} 1/k! < 2/(n+1)!.
inline Interval e_interval(Precision prec) {
    const Integer threshold = pow2(static_cast<unsigned long>(prec.bits) + 1);
    unsigned long n = 1;
    Integer fact_next = 2;  // (n+1)!
    while (fact_next < threshold) {
        ++n;
        fact_next *= Integer(n + 1);
    }
    // sum_{k=0}^{n} 1/k! over the common denominator n!
    Integer num = 0;
    Integer term = factorial(n);  // n!/k!
    for (unsigned long k = 0; k <= n; ++k) {
        num += term;
        if (k < n) term /= Integer(k + 1);
    }
    const Rational partial(num, factorial(n));
    const Rational tail(Integer(2), fact_next);
    return Interval(partial, partial + tail);
}

/// Interval containing x^(1/n) with width <= 2^(-prec.bits). Exact rational
/// roots are detected and returned as point intervals; otherwise the root is
/// bracketed between consecutive dyadics via an integer n-th root.
inline Interval nth_root_interval(const Rational& x, unsigned long n, Precision prec) {
    if (n == 0) throw std::invalid_argument("nth_root_interval: n must be positive");
    if (x.sign() < 0) throw std::domain_error("nth_root_interval: negative input");
    if (x.is_zero()) return Interval(Rational(0));

    // Exact case: both numerator and denominator are perfect n-th powers.
    Integer rn, rd;
    const bool exact_num = mpz_root(rn.get_mpz_t(), x.num().get_mpz_t(), n) != 0;
    const bool exact_den = mpz_root(rd.get_mpz_t(), x.den().get_mpz_t(), n) != 0;
    if (exact_num && exact_den) return Interval(Rational(rn, rd));

    const unsigned long bits = static_cast<unsigned long>(prec.bits);
    // floor(x * 2^(n*bits)); its integer n-th root s satisfies
    // s/2^bits <= x^(1/n) <= (s+1)/2^bits.
    Integer scaled = x.num() * pow2(n * bits) / x.den();
    Integer s;
    mpz_root(s.get_mpz_t(), scaled.get_mpz_t(), n);
    const Integer denom = pow2(bits);
    return Interval(Rational(s, denom), Rational(s + 1, denom));
}

}  // namespace hypconst
