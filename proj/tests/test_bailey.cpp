#include <doctest.h>

#include "qrr/bailey.hpp"
#include "qrr/corpus.hpp"

using namespace qrr;

namespace {
const Rational kSpecialX[7] = {Rational(0),          make_rational(1, 2),
                               make_rational(-1, 2), Rational(1),
                               Rational(-1),         make_rational(3, 2),
                               make_rational(-3, 2)};
}

TEST_CASE("key pair generators") {
    const int N = 30;
    // alpha_0 = beta_0 = 1 for every x
    for (const Rational& x : kSpecialX) {
        const BaileyPair p = key_pair(x);
        CHECK(equal_to_order(p.alpha(0, N), FormalSeries::one(N), N));
        CHECK(equal_to_order(p.beta(0, N), FormalSeries::one(N), N));
    }
    // alpha_1 at x = 1/2 is q^1 (since V_1 + V_0 = 2x = 1)
    const BaileyPair p = key_pair(make_rational(1, 2));
    CHECK(equal_to_order(p.alpha(1, N), FormalSeries::monomial(1, 1, N), N));
    // beta_1 at x = 0 is (1 + q^2)/(q^2;q^2)_2
    const BaileyPair p0 = key_pair(Rational(0));
    FormalSeries want = FormalSeries::one(N);
    want.add_term(1, 2);
    want = want * series_invert(pochhammer_finite(SignedMonomial(1, 2), 2, 2, N));
    CHECK(equal_to_order(p0.beta(1, N), want, N));
}

TEST_CASE("Andrews pair generators") {
    const int N = 30;
    const BaileyPair p = andrews_pair(make_rational(1, 2));
    // beta_0 = 1/(q;q)_1, alpha_0 = 1/(1-q): both the geometric series
    FormalSeries geo = series_invert(pochhammer_finite(SignedMonomial(1, 1), 1, 1, N));
    CHECK(equal_to_order(p.beta(0, N), geo, N));
    CHECK(equal_to_order(p.alpha(0, N), geo, N));
}

TEST_CASE("defining relation holds for both pairs (n <= 10, order 80)") {
    for (const Rational& x : kSpecialX) {
        CHECK(check_bailey_pair(key_pair(x), 10, 80).passed);
        CHECK(check_bailey_pair(andrews_pair(x), 10, 80).passed);
    }
}

TEST_CASE("mutated beta is caught at the mutated index") {
    BaileyPair p = key_pair(make_rational(1, 2));
    auto good = p.beta;
    p.beta = [good](long n, int order) {
        FormalSeries b = good(n, order);
        if (n == 1) b.add_term(1, 3);  // corrupt beta_1 only
        return b;
    };
    const CheckReport rep = check_bailey_pair(p, 5, 60);
    CHECK_FALSE(rep.passed);
    CHECK(rep.failed_index == 1);
    REQUIRE(rep.mismatch.has_value());
    CHECK(rep.mismatch->exponent == 3);
}

TEST_CASE("weak forms reproduce the direct single-sum builders") {
    const int N = 60;
    for (const Rational& x : {make_rational(1, 2), Rational(-1), make_rational(3, 2)}) {
        const BaileyPair p = key_pair(x);
        auto [l1, r1] = apply_weak_form(WeakForm::WF1, p, N);
        CHECK(l1.coeffs() == corpus::maini_lhs(x, N).coeffs());
        CHECK(r1.coeffs() == corpus::maini_rhs(x, N).coeffs());
        auto [l2, r2] = apply_weak_form(WeakForm::WF2, p, N);
        CHECK(l2.coeffs() == corpus::rr2_lhs(x, N).coeffs());
        CHECK(r2.coeffs() == corpus::rr2_rhs(x, N).coeffs());
        auto [l3, r3] = apply_weak_form(WeakForm::WF3, p, N);
        CHECK(l3.coeffs() == corpus::rr3_lhs(x, N).coeffs());
        CHECK(r3.coeffs() == corpus::rr3_rhs(x, N).coeffs());
        auto [l4, r4] = apply_weak_form(WeakForm::WF4, p, N);
        CHECK(l4.coeffs() == corpus::thmd_lhs(x, N).coeffs());
        CHECK(r4.coeffs() == corpus::thmd_rhs(x, N).coeffs());
        // each weak form is itself an identity at this order
        for (auto* pr : {&l1, &l2, &l3, &l4}) (void)pr;
        CHECK(equal_to_order(l1, r1, N));
        CHECK(equal_to_order(l2, r2, N));
        CHECK(equal_to_order(l3, r3, N));
        CHECK(equal_to_order(l4, r4, N));
    }
}

TEST_CASE("WF4 low-order coefficients at x = 1") {
    auto [lhs, rhs] = apply_weak_form(WeakForm::WF4, key_pair(Rational(1)), 20);
    const long want[6] = {1, 0, 2, 4, 4, 4};
    for (int e = 0; e < 6; ++e) CHECK(lhs[e] == want[e]);
    CHECK(equal_to_order(lhs, rhs, 20));
}

TEST_CASE("weak forms reject pairs with a != 1") {
    const BaileyPair p = andrews_pair(Rational(0));
    CHECK_THROWS_AS(apply_weak_form(WeakForm::WF1, p, 20), UnsupportedAParameter);
    CHECK_THROWS_AS(apply_multisum(p, 2, 20), UnsupportedAParameter);
}

TEST_CASE("multisum at k = 1 reduces to WF1 bit-for-bit") {
    for (const Rational& x : {Rational(0), make_rational(1, 2), make_rational(-3, 2)}) {
        const BaileyPair p = key_pair(x);
        auto [ml, mr] = apply_multisum(p, 1, 60);
        auto [wl, wr] = apply_weak_form(WeakForm::WF1, p, 60);
        CHECK(ml.coeffs() == wl.coeffs());
        CHECK(mr.coeffs() == wr.coeffs());
    }
}

TEST_CASE("multisum identity holds at k = 2, 3") {
    for (long k = 2; k <= 3; ++k) {
        auto [lhs, rhs] = apply_multisum(key_pair(make_rational(1, 2)), k, 60);
        CHECK(equal_to_order(lhs, rhs, 60));
    }
}

TEST_CASE("finite polynomial identities at small n") {
    for (long n = 0; n <= 6; ++n) {
        CHECK(finite_identity_check(FiniteIdentity::thm3_1, n, 80).passed);
        CHECK(finite_identity_check(FiniteIdentity::andrews1_2, n, 80).passed);
    }
}

TEST_CASE("sample_points are distinct and start at 0") {
    const auto pts = sample_points(9);
    REQUIRE(pts.size() == 9);
    CHECK(pts[0] == 0);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) CHECK(pts[i] != pts[j]);
}
