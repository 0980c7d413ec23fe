#include <doctest.h>

#include <random>

#include "qrr/series.hpp"

using namespace qrr;

namespace {

FormalSeries from_ints(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return FormalSeries(std::move(v));
}

std::mt19937 rng(20240817);

Rational random_rational() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    return make_rational(num(rng), den(rng));
}

FormalSeries random_series(int order, bool unit = false) {
    FormalSeries s(order);
    for (int e = 0; e <= order; ++e) s.add_term(random_rational(), e);
    if (unit && s[0] == 0) s.add_term(1, 0);
    return s;
}

}  // namespace

TEST_CASE("construction and basic accessors") {
    FormalSeries z(5);
    CHECK(z.order() == 5);
    CHECK(z.is_zero());

    FormalSeries one = FormalSeries::one(3);
    CHECK(one[0] == 1);
    CHECK(one[3] == 0);
    CHECK_FALSE(one.is_zero());

    FormalSeries m = FormalSeries::monomial(make_rational(3, 2), 2, 4);
    CHECK(m[2] == make_rational(3, 2));
    CHECK_FALSE(m.integer_coefficients());
    // an exponent above the order truncates silently
    FormalSeries far = FormalSeries::monomial(1, 10, 4);
    CHECK(far.is_zero());
    CHECK_THROWS_AS(FormalSeries::monomial(1, -1, 4), NegativeExponentTerm);
}

TEST_CASE("addition and negation examples") {
    FormalSeries a = from_ints({1, 1});   // 1 + q
    FormalSeries b = from_ints({1, -1});  // 1 - q
    FormalSeries s = a + b;
    CHECK(s[0] == 2);
    CHECK(s[1] == 0);

    FormalSeries z(1);
    CHECK(equal_to_order(a + z, a, 1));
    CHECK((a + (-a)).is_zero());
}

TEST_CASE("product of binomials (1-q)(1-q^2)(1-q^3)") {
    FormalSeries p = FormalSeries::one(6);
    p.times_binomial(-1, 1);
    p.times_binomial(-1, 2);
    p.times_binomial(-1, 3);
    const FormalSeries want = from_ints({1, -1, -1, 0, 1, 1, -1});
    CHECK(equal_to_order(p, want, 6));

    // same thing through the generic multiply
    FormalSeries g = from_ints({1, -1, 0, 0, 0, 0, 0}) *
                     from_ints({1, 0, -1, 0, 0, 0, 0}) *
                     from_ints({1, 0, 0, -1, 0, 0, 0});
    CHECK(equal_to_order(g, want, 6));
}

TEST_CASE("multiplicative identity and (1+q)(1-q)") {
    FormalSeries a = random_series(16);
    CHECK(equal_to_order(a * FormalSeries::one(16), a, 16));
    FormalSeries p = from_ints({1, 1}) * from_ints({1, -1});
    CHECK(p[0] == 1);
    CHECK(p[1] == 0);
}

TEST_CASE("min-order propagation") {
    FormalSeries a(10), b(4);
    CHECK((a + b).order() == 4);
    CHECK((a * b).order() == 4);
    CHECK((a - b).order() == 4);
}

TEST_CASE("inversion") {
    // 1/(1-q) = geometric series
    FormalSeries g = series_invert(from_ints({1, -1, 0, 0, 0, 0}));
    for (int e = 0; e <= 5; ++e) CHECK(g[e] == 1);

    // a * invert(a) = 1 for random unit series
    for (int t = 0; t < 20; ++t) {
        FormalSeries a = random_series(24, /*unit=*/true);
        CHECK(equal_to_order(a * series_invert(a), FormalSeries::one(24), 24));
    }

    CHECK_THROWS_AS(series_invert(from_ints({0, 1})), NonUnitSeries);
}

TEST_CASE("substitute_power") {
    FormalSeries a = from_ints({1, 1, 0, 0, 0});  // 1 + q
    FormalSeries a2 = substitute_power(a, 2);
    CHECK(a2[0] == 1);
    CHECK(a2[1] == 0);
    CHECK(a2[2] == 1);

    CHECK(equal_to_order(substitute_power(a, 1), a, 4));

    // composition law on random data
    for (int t = 0; t < 10; ++t) {
        FormalSeries a3 = random_series(36);
        CHECK(equal_to_order(substitute_power(substitute_power(a3, 2), 3),
                             substitute_power(a3, 6), 36));
    }
}

TEST_CASE("substitute_negate") {
    FormalSeries a = from_ints({1, 1, 1});
    FormalSeries n = substitute_negate(a);
    CHECK(n[0] == 1);
    CHECK(n[1] == -1);
    CHECK(n[2] == 1);
    // involution
    for (int t = 0; t < 10; ++t) {
        FormalSeries b = random_series(20);
        CHECK(equal_to_order(substitute_negate(substitute_negate(b)), b, 20));
    }
}

TEST_CASE("first_mismatch and equal_to_order") {
    FormalSeries a = from_ints({1, 2, 3});
    FormalSeries b = from_ints({1, 5, 3});
    auto m = first_mismatch(a, b, 2);
    REQUIRE(m.has_value());
    CHECK(m->exponent == 1);
    CHECK(m->lhs == 2);
    CHECK(m->rhs == 5);
    CHECK(equal_to_order(a, b, 0));
    CHECK_FALSE(equal_to_order(a, b, 1));
    CHECK_THROWS_AS((void)first_mismatch(a, b, 3), OrderTooLarge);
}

TEST_CASE("in-place helpers match generic multiply") {
    for (int t = 0; t < 10; ++t) {
        FormalSeries a = random_series(20);
        FormalSeries b = a;
        b.times_binomial(make_rational(2, 3), 3);
        FormalSeries factor(20);
        factor.add_term(1, 0);
        factor.add_term(make_rational(2, 3), 3);
        CHECK(equal_to_order(b, a * factor, 20));

        FormalSeries c = a;
        c.times_geometric(make_rational(-1, 2), 2);
        // times_geometric(c, e) multiplies by 1/(1 - c q^e)
        FormalSeries inv_factor(20);
        inv_factor.add_term(1, 0);
        inv_factor.add_term(make_rational(1, 2), 2);
        CHECK(equal_to_order(c, a * series_invert(inv_factor), 20));

        FormalSeries d = a;
        d.times_monomial(make_rational(5, 7), 4);
        CHECK(equal_to_order(d, a * FormalSeries::monomial(make_rational(5, 7), 4, 20), 20));
    }
}

TEST_CASE("commutative ring laws on random series (order 64, 100 cases)") {
    const int N = 64;
    for (int t = 0; t < 100; ++t) {
        FormalSeries a = random_series(N), b = random_series(N), c = random_series(N);
        CHECK(equal_to_order(a + b, b + a, N));
        CHECK(equal_to_order((a + b) + c, a + (b + c), N));
        CHECK(equal_to_order(a * b, b * a, N));
        CHECK(equal_to_order((a * b) * c, a * (b * c), N));
        CHECK(equal_to_order(a * (b + c), a * b + a * c, N));
        CHECK(equal_to_order(a + FormalSeries(N), a, N));
        CHECK(equal_to_order(a * FormalSeries::one(N), a, N));
        CHECK((a - a).is_zero());
    }
}
