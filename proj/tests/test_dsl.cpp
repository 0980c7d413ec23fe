#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "qrr/corpus.hpp"
#include "qrr/dsl.hpp"

using namespace qrr;

namespace {

std::string read_corpus_file() {
    std::ifstream f(QRR_CORPUS_FILE);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("expression parsing and printing round-trips") {
    const char* exprs[] = {
        "poch(-q, q, inf)",
        "sum(n, 0..auto, q^(n^2)/poch(q, q, n))",
        "1 - q^2 + 3/4 q^5",
        "-x^2 + 2 x q^(n (n+1)/2)",
        "prod(i, 1..n, 1 + 2 x q^(2 i - 1) + q^(4 i - 2))",
        "qbinom(2 n + 1, n - j, 1) chebv(x, j)",
        "appell(2, 1, 2) + appell_alt(2, 1, 2)",
    };
    for (const char* s : exprs) {
        const auto ast = dsl::parse(s);
        const std::string printed = dsl::print(ast);
        // printing is stable: parse(print(e)) prints identically
        CHECK(dsl::print(dsl::parse(printed)) == printed);
    }
}

TEST_CASE("precedence and associativity") {
    // power binds tighter than unary minus, which binds tighter than product
    CHECK(equal_to_order(dsl::eval(dsl::parse("-2^2 + 4"), 4), FormalSeries(4), 4));
    // juxtaposition is multiplication
    FormalSeries two_q = dsl::eval(dsl::parse("2 q"), 4);
    CHECK(two_q[1] == 2);
    // right-associative power via an exponent expression
    FormalSeries q8 = dsl::eval(dsl::parse("q^(2^3)"), 10);
    CHECK(q8[8] == 1);
}

TEST_CASE("evaluation of builtins") {
    const int N = 20;
    CHECK(equal_to_order(dsl::eval(dsl::parse("poch(q, q, inf)"), N),
                         pochhammer_infinite(SignedMonomial(1, 1), 1, N), N));
    CHECK(equal_to_order(dsl::eval(dsl::parse("poch(-q, q^2, 3)"), N),
                         pochhammer_finite(SignedMonomial(-1, 1), 2, 3, N), N));
    CHECK(equal_to_order(dsl::eval(dsl::parse("qbinom(4, 2, 1)"), N),
                         qbinomial(4, 2, 1, N), N));
    CHECK(equal_to_order(dsl::eval(dsl::parse("1/poch(q, q, inf)"), N),
                         series_invert(pochhammer_infinite(SignedMonomial(1, 1), 1, N)), N));

    // chebv at a supplied x is a scalar: V_3(3/2) = 13
    FormalSeries v = dsl::eval(dsl::parse("chebv(x, 3)"), 4, make_rational(3, 2));
    CHECK(v[0] == 13);
    CHECK(v[1] == 0);
    CHECK(dsl::eval(dsl::parse("fib(7)"), 2)[0] == 13);
    CHECK(dsl::eval(dsl::parse("luc(4)"), 2)[0] == 7);
    CHECK(dsl::eval(dsl::parse("floor(7/2)"), 2)[0] == 3);
    CHECK(dsl::eval(dsl::parse("isqrt(10)"), 2)[0] == 3);
    CHECK(dsl::eval(dsl::parse("cyc3(3)"), 2)[0] == 1);
    CHECK(dsl::eval(dsl::parse("cyc3(4)"), 2)[0] == make_rational(-1, 2));

    CHECK(equal_to_order(dsl::eval(dsl::parse("substq(1 - q, 3)"), N),
                         pochhammer_finite(SignedMonomial(1, 3), 1, 1, N), N));
    FormalSeries neg = dsl::eval(dsl::parse("negq(1 + q + q^2)"), N);
    CHECK(neg[1] == -1);
    CHECK(neg[2] == 1);
}

TEST_CASE("sum and prod with explicit and automatic bounds") {
    const int N = 30;
    // finite sum of monomials
    FormalSeries s = dsl::eval(dsl::parse("sum(n, 0..3, q^n)"), N);
    for (int e = 0; e <= 3; ++e) CHECK(s[e] == 1);
    CHECK(s[4] == 0);

    // automatic upper bound driven by the quadratic q-power
    CHECK(equal_to_order(
        dsl::eval(dsl::parse("sum(n, 0..auto, q^(n^2)/poch(q, q, n))"), N),
        [&] {
            FormalSeries acc(N);
            for (long n = 0; n * n <= N; ++n) {
                FormalSeries t =
                    series_invert(pochhammer_finite(SignedMonomial(1, 1), 1, n, N));
                t.times_monomial(1, n * n);
                acc += t;
            }
            return acc;
        }(),
        N));

    // bilateral theta sum with order-dependent explicit bounds
    FormalSeries theta = dsl::eval(dsl::parse("sum(j, -order..order, q^(2 j^2 + j))"), N);
    CHECK(equal_to_order(theta, qbinom_limit_sides(N).first, N));

    // 'auto' requires a quadratic q-power in the loop variable
    CHECK_THROWS_AS(dsl::eval(dsl::parse("sum(n, 0..auto, q^n)"), N), SyntaxError);
    CHECK_THROWS_AS(dsl::eval(dsl::parse("prod(n, 0..auto, 1 + q^(n^2))"), N), SyntaxError);
    // shadowing a loop variable is rejected
    CHECK_THROWS_AS(dsl::eval(dsl::parse("sum(n, 0..2, sum(n, 0..2, q^n))"), N), SyntaxError);

    FormalSeries p = dsl::eval(dsl::parse("prod(i, 1..4, 1 - q^i)"), N);
    CHECK(equal_to_order(p, pochhammer_finite(SignedMonomial(1, 1), 1, 4, N), N));
}

TEST_CASE("evaluation errors") {
    CHECK_THROWS_AS(dsl::eval(dsl::parse("x + q"), 10), MissingX);
    CHECK_THROWS_AS(dsl::eval(dsl::parse("1/(q - q)"), 10), NonUnitSeries);
    CHECK_THROWS_AS(dsl::eval(dsl::parse("1/q"), 10), NegativeExponentTerm);
}

TEST_CASE("malformed input reports located syntax errors") {
    // truncated call: error at end of input
    try {
        dsl::parse("poch(q, q,");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 1);
        CHECK(e.column >= 10);
    }
    // stray operator on the second line
    try {
        dsl::parse("1 +\n* 2");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 1);
    }
    // unknown character
    CHECK_THROWS_AS(dsl::parse("1 + $"), SyntaxError);
    // unbalanced parentheses
    CHECK_THROWS_AS(dsl::parse("(1 + q"), SyntaxError);
    // empty input
    CHECK_THROWS_AS(dsl::parse(""), SyntaxError);
}

TEST_CASE("corpus file loads, round-trips, and matches the native registry") {
    const auto stanzas = dsl::parse_corpus(read_corpus_file());
    CHECK(stanzas.size() == 75);

    std::set<std::string> seen;
    for (const auto& st : stanzas) {
        CAPTURE(st.id);
        CHECK(seen.insert(st.id).second);  // unique ids
        const IdentityRecord& rec = find_identity(st.id);
        CHECK(st.xparam == rec.x_parametric);
        CHECK_FALSE(st.anchor.empty());

        // print stability of every stored expression
        for (const auto& e : {st.lhs, st.rhs}) {
            const std::string printed = dsl::print(e);
            CHECK(dsl::print(dsl::parse(printed)) == printed);
        }
        if (st.degree_bound) {
            const std::string printed = dsl::print(st.degree_bound);
            CHECK(dsl::print(dsl::parse(printed)) == printed);
        }

        // DSL evaluation agrees with the native builder at a modest order
        const int N = 40;
        if (st.xparam) {
            for (const Rational& x : {make_rational(1, 2), make_rational(-3, 2)}) {
                CHECK(equal_to_order(dsl::eval(st.lhs, N, x), rec.lhs_x(x, N), N));
                CHECK(equal_to_order(dsl::eval(st.rhs, N, x), rec.rhs_x(x, N), N));
            }
        } else {
            CHECK(equal_to_order(dsl::eval(st.lhs, N), rec.lhs(N), N));
            CHECK(equal_to_order(dsl::eval(st.rhs, N), rec.rhs(N), N));
        }
    }
}

TEST_CASE("corpus block syntax errors are located") {
    CHECK_THROWS_AS(dsl::parse_corpus("identity foo {"), SyntaxError);
    CHECK_THROWS_AS(dsl::parse_corpus("identity foo { lhs { 1 } }"), SyntaxError);
    try {
        dsl::parse_corpus("identity foo {\n  anchor \"a\"\n  lhs { 1 + }\n  rhs { 1 }\n}\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 3);  // error located inside the lhs block
    }
}
