#include <hypconst/bernoulli.hpp>
#include <hypconst/elementary.hpp>
#include <hypconst/interval.hpp>
#include <hypconst/rational.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hypconst;

TEST_CASE("Rational canonical form and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(7, 3) * Rational(3, 7)) == Rational(1));
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("Rational parse round-trips") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 200; ++i) {
        const Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK_THROWS_AS(Rational::parse("not-a-number"), std::invalid_argument);
}

TEST_CASE("Rational floor, ceil, pow") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(3).floor() == 3);
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
}

TEST_CASE("Bernoulli base values") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("Bernoulli satisfies the defining recurrence") {
    // sum_{k=0}^{n} C(n+1,k) B_k = 0 for every n >= 1
    for (unsigned long n = 1; n <= 40; ++n) {
        Rational acc(0);
        for (unsigned long k = 0; k <= n; ++k) acc += Rational(binomial(n + 1, k)) * bernoulli(k);
        CHECK(acc == Rational(0));
    }
}

TEST_CASE("pi_interval encloses pi at the requested width") {
    const Interval p32 = pi_interval(Precision(32));
    CHECK(Interval(Rational(314159265, 100000000), Rational(314159266, 100000000)).contains(p32));
    CHECK(p32.width() <= Precision(32).width_bound());
    const Interval p8 = pi_interval(Precision(8));
    CHECK(Interval(Rational(31415, 10000), Rational(31416, 10000)).contains(p8));
    CHECK(p8.width() <= Rational(1, 256));
    // refinement nesting and intersection
    CHECK(p8.contains(pi_interval(Precision(64))));
    CHECK(pi_interval(Precision(16)).contains(pi_interval(Precision(64))));
    CHECK(pi_interval(Precision(128)).intersects(pi_interval(Precision(1024))));
}

TEST_CASE("e_interval encloses e at the requested width") {
    const Interval e32 = e_interval(Precision(32));
    CHECK(Interval(Rational(271828182, 100000000), Rational(271828183, 100000000)).contains(e32));
    CHECK(e32.width() <= Precision(32).width_bound());
    CHECK(e_interval(Precision(8)).contains(Rational(27183, 10000)));
    CHECK(e_interval(Precision(16)).contains(e_interval(Precision(64))));
    CHECK(e_interval(Precision(100)).intersects(e_interval(Precision(700))));
}

TEST_CASE("nth_root_interval examples") {
    const Interval r = nth_root_interval(Rational(1, 360), 2, Precision(32));
    CHECK(r.width() <= Precision(32).width_bound());
    // square of the enclosure brackets 1/360
    CHECK(r.lo().pow(2) <= Rational(1, 360));
    CHECK(Rational(1, 360) <= r.hi().pow(2));
    CHECK(Interval(Rational(527046, 10000000), Rational(527047, 10000000)).contains(r));

    CHECK(nth_root_interval(Rational(1), 5, Precision(16)).is_point());
    CHECK(nth_root_interval(Rational(1), 5, Precision(16)).lo() == Rational(1));
    CHECK(nth_root_interval(Rational(0), 3, Precision(16)).lo() == Rational(0));
    CHECK(nth_root_interval(Rational(8, 27), 3, Precision(16)).lo() == Rational(2, 3));
    CHECK_THROWS_AS(nth_root_interval(Rational(-1), 2, Precision(16)), std::domain_error);
}

TEST_CASE("nth_root_interval bracketing property") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> num(1, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    std::uniform_int_distribution<unsigned long> root(1, 7);
    for (int i = 0; i < 100; ++i) {
        const Rational x(num(rng), den(rng));
        const unsigned long n = root(rng);
        const Interval r = nth_root_interval(x, n, Precision(48));
        CHECK(r.lo().pow(n) <= x);
        CHECK(x <= r.hi().pow(n));
        // refinement never widens
        CHECK(r.contains(nth_root_interval(x, n, Precision(96))));
    }
}

TEST_CASE("smallest_integer_above") {
    CHECK(smallest_integer_above(Rational(3)) == 4);
    CHECK(smallest_integer_above(Rational(-3)) == -2);
    CHECK(smallest_integer_above(Rational(7, 2)) == 4);
    CHECK(smallest_integer_above(Interval(Rational(31, 10), Rational(32, 10))) == 4);
    CHECK_THROWS_AS(smallest_integer_above(Interval(Rational(299, 100), Rational(301, 100))), uncertifiable);
}

TEST_CASE("Interval arithmetic basics") {
    const Interval a(Rational(1), Rational(2));
    const Interval b(Rational(-1), Rational(3));
    CHECK((a + b).lo() == Rational(0));
    CHECK((a + b).hi() == Rational(5));
    CHECK((a * b).lo() == Rational(-2));
    CHECK((a * b).hi() == Rational(6));
    CHECK((Rational(1) / a).lo() == Rational(1, 2));
    CHECK_THROWS_AS(a / b, std::domain_error);
    CHECK_THROWS_AS(Interval(Rational(2), Rational(1)), std::invalid_argument);
    CHECK(a.pow(0).is_point());
    CHECK(a.pow(2).hi() == Rational(4));
}

TEST_CASE("Precision bounds enforced") {
    CHECK_THROWS_AS(Precision(4), std::invalid_argument);
    CHECK_THROWS_AS(Precision(5000), std::invalid_argument);
    CHECK(Precision(8).bits == 8);
}
