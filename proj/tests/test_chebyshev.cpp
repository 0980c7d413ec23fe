#include <doctest.h>

#include <random>

#include "qrr/chebyshev.hpp"

using namespace qrr;

TEST_CASE("third-kind Chebyshev values") {
    // V_2(x) = 4x^2 - 2x - 1
    const Rational x = make_rational(5, 3);
    CHECK(cheb_v(x, 2) == 4 * x * x - 2 * x - 1);
    CHECK(cheb_v(make_rational(-1), 2) == 5);
    CHECK(cheb_v(make_rational(7), 0) == 1);
    CHECK(cheb_v(make_rational(7), -3) == 0);
    // V_3(3/2) = F_7 = 13
    CHECK(cheb_v(make_rational(3, 2), 3) == 13);
}

TEST_CASE("v_n = V_n + V_{n-1} and the 2T_n link") {
    const Rational x = make_rational(-4, 7);
    // v_2(x) = 4x^2 - 2
    CHECK(cheb_v_plus_prev(x, 2) == 4 * x * x - 2);
    CHECK(cheb_v_plus_prev(x, 0) == 1);

    // 2 T_n(x) = V_n(x) + V_{n-1}(x) for n >= 1, at 20 random rationals
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 9);
    for (int t = 0; t < 20; ++t) {
        const Rational xv = make_rational(num(rng), den(rng));
        for (long n = 1; n <= 12; ++n)
            CHECK(cheb_v_plus_prev(xv, n) == 2 * cheb_t(xv, n));
    }
}

TEST_CASE("special-argument closed forms vs the recurrence, n <= 500") {
    const Rational tags[7] = {Rational(1),          Rational(-1),
                              Rational(0),          make_rational(1, 2),
                              make_rational(-1, 2), make_rational(3, 2),
                              make_rational(-3, 2)};
    for (const Rational& x : tags) {
        ChebyshevEvaluator ev(x);
        for (long n = 0; n <= 500; ++n) CHECK(cheb_special(x, n) == ev.v(n));
    }
    // spot values quoted in the table
    CHECK(cheb_special(make_rational(1, 2), 1) == 0);
    CHECK(cheb_special(make_rational(1, 2), 4) == 0);
    CHECK(cheb_special(make_rational(-3, 2), 2) == 11);  // L_5
    CHECK_THROWS_AS(cheb_special(make_rational(2), 1), UnsupportedArgument);
    CHECK_THROWS_AS(cheb_special(Rational(1), -1), UnsupportedArgument);
}

TEST_CASE("Fibonacci and Lucas") {
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(7) == 13);
    CHECK(lucas(0) == 2);
    CHECK(lucas(4) == 7);
    CHECK(lucas(4) == fibonacci(5) + fibonacci(3));
    CHECK_THROWS_AS(fibonacci(-1), UnsupportedArgument);
    CHECK_THROWS_AS(lucas(-2), UnsupportedArgument);

    // L_{2n} = F_{2n+1} + F_{2n-1} for n >= 1, up to index 500
    for (long n = 1; 2 * n <= 500; ++n)
        CHECK(lucas(2 * n) == fibonacci(2 * n + 1) + fibonacci(2 * n - 1));
}

TEST_CASE("memoizing evaluator matches the stateless function") {
    const Rational x = make_rational(3, 2);
    ChebyshevEvaluator ev(x);
    CHECK(ev.x() == x);
    // query out of order to exercise cache growth paths
    CHECK(ev.v(10) == cheb_v(x, 10));
    CHECK(ev.v(3) == cheb_v(x, 3));
    CHECK(ev.v(-2) == 0);
    CHECK(ev.v_plus_prev(7) == cheb_v_plus_prev(x, 7));
}
