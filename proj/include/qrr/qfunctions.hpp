#pragma once

#include <cstdlib>
#include <map>
#include <vector>

#include "qrr/series.hpp"

namespace qrr {

// c * q^e with e >= 0; the argument form for Pochhammer / theta parameters.
struct SignedMonomial {
    Rational coeff;
    long exponent = 0;

    SignedMonomial(Rational c, long e) : coeff(std::move(c)), exponent(e) {
        if (e < 0) throw NegativeExponentTerm(e);
    }
};

// (a; q^b)_n = prod_{j=0}^{n-1} (1 - a q^{b j}), truncated to `order`.
// n = 0 gives the empty product 1.
inline FormalSeries pochhammer_finite(const SignedMonomial& a, long base_power, long n,
                                      int order) {
    if (n < 0) throw NegativeLength(n);
    FormalSeries r = FormalSeries::one(order);
    for (long j = 0; j < n; ++j) {
        const long e = a.exponent + base_power * j;
        if (e == 0) {
            r *= (1 - a.coeff);
        } else if (e <= order) {
            r.times_binomial(-a.coeff, e);
        }
        // factors of degree > order cannot affect coefficients <= order when
        // the leading term is 1; they are skipped, not an approximation
    }
    return r;
}

// (a; q^b)_infty truncated to `order`. Only factors with q-degree <= order
// contribute. The degenerate (1;q)_infty is the zero series.
inline FormalSeries pochhammer_infinite(const SignedMonomial& a, long base_power, int order) {
    if (a.exponent == 0 && a.coeff == 1) return FormalSeries(order);  // (1;q)_inf = 0
    if (a.exponent == 0)
        throw UnsupportedArgument("infinite Pochhammer with constant parameter a != 1 diverges");
    FormalSeries r = FormalSeries::one(order);
    for (long e = a.exponent; e <= order; e += base_power) r.times_binomial(-a.coeff, e);
    return r;
}

// (a1, a2, ..., am; q^b)_n — the compact multi-parameter notation.
inline FormalSeries pochhammer_finite_multi(const std::vector<SignedMonomial>& as,
                                            long base_power, long n, int order) {
    FormalSeries r = FormalSeries::one(order);
    for (const auto& a : as) r = r * pochhammer_finite(a, base_power, n, order);
    return r;
}

inline FormalSeries pochhammer_infinite_multi(const std::vector<SignedMonomial>& as,
                                              long base_power, int order) {
    FormalSeries r = FormalSeries::one(order);
    for (const auto& a : as) r = r * pochhammer_infinite(a, base_power, order);
    return r;
}

// Gaussian binomial [n choose k] in base q^b, as an exact polynomial held at
// `order`. Zero when k < 0 or k > n. Pascal-type recurrence
//   [m k] = [m-1 k-1] + q^k [m-1 k]
// in base q, then q -> q^b; coefficients are non-negative, so truncation of
// intermediate rows is sound.
inline FormalSeries qbinomial(long n, long k, long base_power, int order) {
    if (k < 0 || k > n) return FormalSeries(order);
    // work in base q at a reduced order, then substitute
    const int inner = order / static_cast<int>(base_power);
    std::vector<FormalSeries> row;  // row m of the triangle, entries 0..m
    row.push_back(FormalSeries::one(inner));
    for (long m = 1; m <= n; ++m) {
        std::vector<FormalSeries> next;
        next.reserve(static_cast<size_t>(m) + 1);
        for (long kk = 0; kk <= m; ++kk) {
            FormalSeries e(inner);
            if (kk - 1 >= 0 && kk - 1 <= m - 1) e += row[static_cast<size_t>(kk - 1)];
            if (kk <= m - 1) {
                FormalSeries t = row[static_cast<size_t>(kk)];
                t.times_monomial(1, kk);
                e += t;
            }
            next.push_back(std::move(e));
        }
        row = std::move(next);
    }
    FormalSeries base_q = row[static_cast<size_t>(k)];
    FormalSeries out(order);
    for (int e = 0; e <= inner; ++e) out.add_term(base_q[e], static_cast<long>(e) * base_power);
    return out;
}

// Sum side of the triple product: sum_{n in Z} (-1)^n q^{b n(n-1)/2} z^n.
// Negative-n terms carry z^n with n < 0; they are tracked with signed
// exponents and must either cancel or land at non-negative total degree.
inline FormalSeries jacobi_triple_sum(const SignedMonomial& z, long base_power, int order) {
    if (z.coeff == 0) throw UnsupportedArgument("triple product parameter z must be nonzero");
    // Term n has exponent e(n) = b*n(n-1)/2 + z.exponent*n and coefficient
    // (-1)^n z.coeff^n. e(n) is a positive-leading quadratic, so
    // {n : e(n) <= order} is a finite interval; enumerate a superset of it.
    std::map<long, Rational> acc;
    auto pow_coeff = [&](long n) {
        Rational c(1);
        for (long i = 0; i < std::labs(n); ++i) c *= z.coeff;
        if (n < 0) c = 1 / c;
        if (n % 2 != 0) c = -c;
        return c;
    };
    const long bound = 2 * (order + base_power + z.exponent) + 4;
    for (long n = -bound; n <= bound; ++n) {
        const long e = base_power * n * (n - 1) / 2 + z.exponent * n;
        if (e <= order) acc[e] += pow_coeff(n);
    }
    FormalSeries out(order);
    for (const auto& [e, c] : acc) {
        if (c == 0) continue;
        if (e < 0) throw NegativeExponentTerm(e);
        out.add_term(c, e);
    }
    return out;
}

// Product side: (q^b; q^b)_inf (z; q^b)_inf (q^b/z; q^b)_inf.
// Requires 1 <= z.exponent <= base_power so that q^b/z is a monomial with
// non-negative exponent.
inline FormalSeries jacobi_triple_product(const SignedMonomial& z, long base_power, int order) {
    if (z.exponent < 1 || z.exponent > base_power)
        throw MonomialOutOfRange("triple product requires 1 <= exponent of z <= base power");
    FormalSeries r = pochhammer_infinite(SignedMonomial(1, base_power), base_power, order);
    r = r * pochhammer_infinite(z, base_power, order);
    r = r * pochhammer_infinite(SignedMonomial(1 / z.coeff, base_power - z.exponent),
                                base_power, order);
    return r;
}

// Partition numbers p(0..order) by coin-change dynamic programming —
// an oracle independent of series inversion.
inline FormalSeries partition_oracle(int order) {
    std::vector<Rational> p(static_cast<size_t>(order) + 1, Rational(0));
    p[0] = 1;
    for (int part = 1; part <= order; ++part)
        for (int s = part; s <= order; ++s)
            p[static_cast<size_t>(s)] += p[static_cast<size_t>(s - part)];
    return FormalSeries(std::move(p));
}

}  // namespace qrr
