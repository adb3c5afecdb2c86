#pragma once

#include <hypconst/bernoulli.hpp>
#include <hypconst/elementary.hpp>
#include <hypconst/interval.hpp>
#include <hypconst/rational.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hypconst {

/// Weissauer's lower bound on alpha_base for the Siegel modular variety.
inline Rational weissauer_alpha_base(int g) {
    if (g < 2) throw std::invalid_argument("weissauer_alpha_base: g must be >= 2");
    return Rational(g + 1, 12);
}

/// Hulek-Tai general lower bound on alpha_base in dimension n.
inline Rational ht06_alpha_base(long n) {
    if (n < 1) throw std::invalid_argument("ht06_alpha_base: n must be >= 1");
    return Rational(Integer(1), binomial(static_cast<unsigned long>(n) + 1, 2) + 2);
}

/// Certified interval for zeta(2g) from partial sums, bracketing the tail by
/// the integral bounds (N+1)^(1-2g)/(2g-1) <= tail <= N^(1-2g)/(2g-1).
inline Interval zeta_even(int g, Precision prec) {
    if (g < 1) throw std::invalid_argument("zeta_even: g must be >= 1");
    const unsigned long e = 2 * static_cast<unsigned long>(g);
    const unsigned long scale = static_cast<unsigned long>(prec.bits) + 64;
    const Integer one = pow2(scale);
    const Rational bound = prec.width_bound();

    constexpr unsigned long kMaxTerms = 1ul << 26;
    unsigned long n = 1ul << std::min<unsigned long>(27, (static_cast<unsigned long>(prec.bits) + 1) / e + 1);
    while (true) {
        if (n > kMaxTerms) throw precision_exhausted("zeta_even: series too long for requested width");
        Integer lo_scaled = 0, hi_scaled = 0;
        for (unsigned long k = 1; k <= n; ++k) {
            Integer ke;
            mpz_ui_pow_ui(ke.get_mpz_t(), k, e);
            const Integer term = one / ke;
            lo_scaled += term;
            hi_scaled += term + 1;
        }
        Integer tail_den_lo, tail_den_hi;
        mpz_ui_pow_ui(tail_den_lo.get_mpz_t(), n + 1, e - 1);
        mpz_ui_pow_ui(tail_den_hi.get_mpz_t(), n, e - 1);
        lo_scaled += one / (Integer(e - 1) * tail_den_lo);
        hi_scaled += one / (Integer(e - 1) * tail_den_hi) + 1;

        const Integer denom = pow2(scale);
        Interval result{Rational(lo_scaled, denom), Rational(hi_scaled, denom)};
        if (result.width() <= bound) return result;
        n *= 2;
    }
}

/// Grushevsky's lower bound on alpha_eff for the Siegel modular variety,
/// evaluated as (g+1) * (g! |B_2g| / (2g)!)^(1/g). This form is equivalent to
/// the zeta expression after substituting zeta(2g) in terms of B_2g, which
/// cancels the (2 pi)^2 factor and leaves a single root of a positive
/// rational.
inline Interval grushevsky_alpha_eff(int g, Precision prec) {
    if (g < 2) throw std::invalid_argument("grushevsky_alpha_eff: g must be >= 2");
    const unsigned long ug = static_cast<unsigned long>(g);
    const Rational inner = Rational(factorial(ug)) * bernoulli(2 * ug).abs() / Rational(factorial(2 * ug));
    int extra = 1;
    while ((1L << extra) <= g + 1) ++extra;  // absorb the (g+1) scaling in the width budget
    const int bits = std::min(prec.bits + extra, Precision::kMaxBits);
    Interval root = nth_root_interval(inner, ug, Precision(bits));
    Interval result = root * Rational(g + 1);
    if (result.width() > prec.width_bound())
        throw precision_exhausted("grushevsky_alpha_eff: cannot reach requested width");
    return result;
}

/// Independent evaluation of Grushevsky's bound straight from the published
/// expression (g+1) (2 g! zeta(2g))^(1/g) / (2 pi)^2, with zeta from the
/// series. Exists as the cross-check path for grushevsky_alpha_eff.
inline Interval grushevsky_alpha_eff_series(int g, Precision prec) {
    if (g < 2) throw std::invalid_argument("grushevsky_alpha_eff_series: g must be >= 2");
    const unsigned long ug = static_cast<unsigned long>(g);
    int bits = std::min(prec.bits + 16, Precision::kMaxBits);
    while (true) {
        const Precision work(bits);
        const Interval z = zeta_even(g, work);
        const Interval inner = z * Rational(Integer(Integer(2) * factorial(ug)));
        // The root is monotone, so rooting the endpoints encloses the image.
        const Interval root = hull(nth_root_interval(inner.lo(), ug, work), nth_root_interval(inner.hi(), ug, work));
        const Interval result = root * Rational(g + 1) / two_pi_interval(work).pow(2);
        if (result.width() <= prec.width_bound()) return result;
        if (bits >= Precision::kMaxBits)
            throw precision_exhausted("grushevsky_alpha_eff_series: cannot reach requested width");
        bits = std::min(2 * bits, Precision::kMaxBits);
    }
}

enum class AlphaKind { weissauer_base, grushevsky_eff, ht06_base, bakker_tsimerman };

/// A published lower bound on alpha_eff or alpha_base, with provenance.
struct AlphaBound {
    AlphaKind kind;
    std::variant<Rational, Interval> value;
    std::string applicability;
};

/// Rotation exponents and order of a cyclic isotropy action at a boundary
/// point of a singular quotient.
struct IsotropyData {
    std::vector<long> a;  // rotation exponents, each >= 1
    long r = 1;           // order of the cyclic action

    void validate() const {
        if (r < 1) throw std::invalid_argument("IsotropyData: r must be >= 1");
        if (a.empty()) throw std::invalid_argument("IsotropyData: empty exponent list");
        for (long x : a)
            if (x < 1) throw std::invalid_argument("IsotropyData: exponents must be >= 1");
    }
};

namespace detail {
inline long sum_of_smallest(const std::vector<long>& a, size_t d) {
    std::vector<long> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    return std::accumulate(sorted.begin(), sorted.begin() + static_cast<long>(d), 0L);
}
}  // namespace detail

/// Condition (I_{x,d}): every choice of d distinct exponents sums to at least
/// r; equivalently the d smallest ones do.
inline bool check_condition_I(const IsotropyData& data, size_t d) {
    data.validate();
    if (d < 1 || d > data.a.size()) throw std::invalid_argument("check_condition_I: d out of range");
    return detail::sum_of_smallest(data.a, d) >= data.r;
}

/// Tightest beta for a single isotropy datum: max(0, 1 - s/r) with s the sum
/// of the p smallest exponents. Aggregation over boundary points is the
/// caller's job.
inline Rational beta_level(const IsotropyData& data, size_t p) {
    data.validate();
    if (p < 1 || p > data.a.size()) throw std::invalid_argument("beta_level: p out of range");
    const long s = detail::sum_of_smallest(data.a, p);
    const Rational beta = Rational(1) - Rational(s, data.r);
    return std::max(beta, Rational(0));
}

/// Coarse upper bound max(0, 1 - p/|G|) valid for any isotropy group of the
/// given order.
inline Rational beta_upper_bound(long p, long group_order) {
    if (p < 1 || group_order < 1) throw std::invalid_argument("beta_upper_bound: arguments must be >= 1");
    return std::max(Rational(1) - Rational(p, group_order), Rational(0));
}

}  // namespace hypconst
