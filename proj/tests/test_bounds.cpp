#include <hypconst/bounds.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace hypconst;

TEST_CASE("weissauer and ht06 formulas") {
    CHECK(weissauer_alpha_base(11) == Rational(1));
    CHECK(weissauer_alpha_base(2) == Rational(1, 4));
    CHECK(weissauer_alpha_base(23) == Rational(2));
    CHECK_THROWS_AS(weissauer_alpha_base(1), std::invalid_argument);

    CHECK(ht06_alpha_base(3) == Rational(1, 8));
    CHECK(ht06_alpha_base(6) == Rational(1, 23));
    CHECK(ht06_alpha_base(1) == Rational(1, 3));
}

TEST_CASE("zeta_even reference values") {
    // zeta(2)'s tail closes like 1/N^2, so keep the requested width modest.
    const Precision prec(40);
    const Interval z2 = zeta_even(1, prec);
    // pi^2/6 through the independent pi enclosure
    const Interval pi2_6 = pi_interval(prec).pow(2) / Rational(6);
    CHECK(z2.intersects(pi2_6));
    CHECK(z2.width() <= prec.width_bound());

    const Interval z4 = zeta_even(2, prec);
    CHECK(z4.intersects(pi_interval(prec).pow(4) / Rational(90)));

    for (int g = 1; g <= 12; ++g) CHECK(zeta_even(g, Precision(32)).lo() > Rational(1));
}

TEST_CASE("grushevsky bound reference values") {
    const Precision prec(64);
    // g=2: inner rational is 2! * (1/30) / 4! = 1/360, so the bound is
    // 3/sqrt(360) = 1/(2 sqrt(10)) ~ 0.158114.
    const Interval g2 = grushevsky_alpha_eff(2, prec);
    CHECK(std::abs(g2.lo().to_double() - 1.0 / (2.0 * std::sqrt(10.0))) < 1e-12);
    CHECK(g2.width() <= prec.width_bound());
    // g=3: 4 * (1/5040)^(1/3)
    const Interval g3 = grushevsky_alpha_eff(3, prec);
    CHECK(std::abs(g3.lo().to_double() - 4.0 * std::cbrt(1.0 / 5040.0)) < 1e-12);
}

TEST_CASE("grushevsky dual paths overlap") {
    const Precision prec(64);
    for (int g = 2; g <= 12; ++g) {
        const Interval a = grushevsky_alpha_eff(g, prec);
        const Interval b = grushevsky_alpha_eff_series(g, prec);
        CHECK(a.intersects(b));
    }
}

TEST_CASE("condition I examples and equivalences") {
    CHECK_FALSE(check_condition_I(IsotropyData{{1, 1, 2}, 3}, 2));
    CHECK(check_condition_I(IsotropyData{{1, 1, 2}, 3}, 3));
    CHECK(check_condition_I(IsotropyData{{2, 2}, 4}, 2));
    CHECK_THROWS_AS(check_condition_I(IsotropyData{{1, 2}, 3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(check_condition_I(IsotropyData{{1, 0}, 3}, 1), std::invalid_argument);
}

TEST_CASE("beta_level examples") {
    CHECK(beta_level(IsotropyData{{1, 1, 2}, 3}, 2) == Rational(1, 3));
    CHECK(beta_level(IsotropyData{{1, 1, 2}, 3}, 3) == Rational(0));
    IsotropyData ones{std::vector<long>(8, 1), 8};
    CHECK(beta_level(ones, 8) == Rational(0));
}

TEST_CASE("beta_upper_bound examples") {
    CHECK(beta_upper_bound(4, 6) == Rational(1, 3));
    CHECK(beta_upper_bound(7, 6) == Rational(0));
    CHECK(beta_upper_bound(1, 1) == Rational(0));
}

TEST_CASE("condition I / beta properties on random data") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> order(1, 30);
    std::uniform_int_distribution<size_t> len(1, 10);
    for (int trial = 0; trial < 500; ++trial) {
        IsotropyData data;
        data.r = order(rng);
        const size_t n = len(rng);
        std::uniform_int_distribution<long> expo(1, std::max(1L, data.r));
        for (size_t i = 0; i < n; ++i) data.a.push_back(expo(rng));

        bool seen_true = false;
        for (size_t d = 1; d <= n; ++d) {
            const bool ok = check_condition_I(data, d);
            // equivalence with beta = 0
            CHECK(ok == (beta_level(data, d) == Rational(0)));
            // monotone in d
            if (seen_true) CHECK(ok);
            seen_true = seen_true || ok;
            // remark's coarse upper bound
            CHECK(beta_level(data, d) <= beta_upper_bound(static_cast<long>(d), data.r));
        }
    }
}
