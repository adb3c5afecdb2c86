#include <hypconst/oracle.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hypconst;

TEST_CASE("ordered_simplex_qp examples") {
    CHECK(ordered_simplex_qp({1, 1}) == Rational(2));
    // Sorted-only closed form misused on (1,0,1) would give 5/4; the true
    // ordered-simplex minimum is 21/16 at m = (3/8, 3/8, 1/4).
    CHECK(ordered_simplex_qp({1, 0, 1}) == Rational(21, 16));
    for (size_t g = 1; g <= 7; ++g)
        CHECK(ordered_simplex_qp(CoefficientVector(g, 0)) == Rational(2, static_cast<long>(g)));
    CHECK_THROWS_AS(ordered_simplex_qp({}), std::invalid_argument);
    CHECK_THROWS_AS(ordered_simplex_qp({-1}), std::invalid_argument);
}

TEST_CASE("ordered_simplex_qp matches min_quadratic on sorted input") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<size_t> len(1, 7);
    std::uniform_int_distribution<long> coeff(0, 12);
    for (int trial = 0; trial < 300; ++trial) {
        CoefficientVector b(len(rng));
        for (auto& x : b) x = coeff(rng);
        std::sort(b.begin(), b.end());
        CHECK(ordered_simplex_qp(b) == min_quadratic(b).value);
    }
}

TEST_CASE("ordered_simplex_qp is monotone in b") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<size_t> len(1, 6);
    std::uniform_int_distribution<long> coeff(0, 8);
    std::uniform_int_distribution<long> bump(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        CoefficientVector b(len(rng));
        for (auto& x : b) x = coeff(rng);
        CoefficientVector b2 = b;
        for (auto& x : b2) x += bump(rng);
        CHECK(ordered_simplex_qp(b) <= ordered_simplex_qp(b2));
    }
}

TEST_CASE("brute_force_D examples") {
    CHECK(brute_force_D(3, 4) == Rational(2));
    CHECK(brute_force_D(2, 2) == Rational(2));
    CHECK(brute_force_D(5, 2) == Rational(1, 2));
    CHECK_THROWS_AS(brute_force_D(7, 2), std::invalid_argument);
}

TEST_CASE("brute_force_D equals siegel_D for small g") {
    for (int g = 2; g <= 4; ++g)
        for (int p = 1; p <= triangle_size(g); ++p) CHECK(brute_force_D(g, p) == siegel_D(g, p).D);
}

TEST_CASE("numeric_D approximates the exact constant") {
    CHECK(numeric_D(2, 2, 50) == Catch::Approx(2.0).margin(0.05));
    CHECK(numeric_D(2, 3, 50) == Catch::Approx(3.0).margin(0.05));
    CHECK(numeric_D(3, 1, 50) == Catch::Approx(2.0 / 3.0).margin(0.05));
    CHECK_THROWS_AS(numeric_D(5, 1, 50), std::invalid_argument);
    CHECK_THROWS_AS(numeric_D(3, 1, 5), std::invalid_argument);
}

TEST_CASE("numeric_D never drops below the exact minimum") {
    for (int g = 2; g <= 4; ++g) {
        for (int p = 1; p <= triangle_size(g); p += 2) {
            const double exact = siegel_D(g, p).D.to_double();
            const double approx = numeric_D(g, p, 30);
            CHECK(exact <= approx + 1e-9);
            CHECK(approx - exact <= 0.2);  // coarse grid, structural check only
        }
    }
}
