#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qrr/chebyshev.hpp"
#include "qrr/qfunctions.hpp"
#include "qrr/series.hpp"

namespace qrr {

// A Bailey pair relative to (a, q^b): sequences alpha_n, beta_n with
//   beta_n = sum_{j=0}^n alpha_j / ((Q;Q)_{n-j} (aQ;Q)_{n+j}),   Q = q^b.
// Generators are pure functions of (n, order); pairs are immutable.
struct BaileyPair {
    std::function<FormalSeries(long, int)> alpha;
    std::function<FormalSeries(long, int)> beta;
    SignedMonomial a_param;
    long base_power;
};

struct CheckReport {
    bool passed = true;
    long failed_index = -1;          // n (or sample index) where the first failure occurred
    std::optional<Mismatch> mismatch;
};

// prod_{j=1}^{n} (1 + 2x q^{b(2j-1)/2 ...}) is pair-specific; the two concrete
// trinomial products used by the corpus:
//   base q^2: (1 + 2x q^{2j-1} + q^{4j-2})        (key pair)
//   base q  : (1 + 2x q^{j}    + q^{2j})          (Andrews' pair)
inline FormalSeries trinomial_product(const Rational& x, long n, long stride, int order) {
    FormalSeries r = FormalSeries::one(order);
    for (long j = 1; j <= n; ++j) {
        const long lin = (stride == 2) ? (2 * j - 1) : j;
        FormalSeries f = FormalSeries::one(order);
        if (lin <= order) f.add_term(2 * x, lin);
        if (2 * lin <= order) f.add_term(1, 2 * lin);
        r = r * f;
    }
    return r;
}

// Key pair, relative to a = 1 and base q^2:
//   alpha_n = q^{n^2} (V_n(x) + V_{n-1}(x))
//   beta_n  = prod_{j=1}^n (1 + 2x q^{2j-1} + q^{4j-2}) / (q^2;q^2)_{2n}
inline BaileyPair key_pair(const Rational& x, int /*order hint, unused*/ = 0) {
    auto alpha = [x](long n, int order) {
        return FormalSeries::monomial(cheb_v_plus_prev(x, n), n * n, order);
    };
    auto beta = [x](long n, int order) {
        FormalSeries num = trinomial_product(x, n, 2, order);
        FormalSeries den = pochhammer_finite(SignedMonomial(1, 2), 2, 2 * n, order);
        return num * series_invert(den);
    };
    return BaileyPair{alpha, beta, SignedMonomial(1, 0), 2};
}

// Andrews' pair, relative to a = q and base q:
//   alpha_n = q^{n(n+1)/2} V_n(x) / (1-q)
//   beta_n  = prod_{j=1}^n (1 + 2x q^j + q^{2j}) / (q;q)_{2n+1}
inline BaileyPair andrews_pair(const Rational& x, int /*order hint*/ = 0) {
    auto alpha = [x](long n, int order) {
        FormalSeries s = FormalSeries::monomial(cheb_v(x, n), n * (n + 1) / 2, order);
        s.times_geometric(1, 1);  // 1/(1-q)
        return s;
    };
    auto beta = [x](long n, int order) {
        FormalSeries num = trinomial_product(x, n, 1, order);
        FormalSeries den = pochhammer_finite(SignedMonomial(1, 1), 1, 2 * n + 1, order);
        return num * series_invert(den);
    };
    return BaileyPair{alpha, beta, SignedMonomial(1, 1), 1};
}

// Checks the defining relation for n = 0..n_max at the given order.
// The inverse denominator product is updated in place when stepping j -> j+1:
//   D(j+1) = D(j) * (1 - q^{b(n-j)}) / (1 - a q^{b(n+j+1)}).
inline CheckReport check_bailey_pair(const BaileyPair& p, long n_max, int order) {
    const long b = p.base_power;
    for (long n = 0; n <= n_max; ++n) {
        // D(0) = 1 / ((Q;Q)_n (aQ;Q)_n)
        FormalSeries den = pochhammer_finite(SignedMonomial(1, b), b, n, order);
        den = den * pochhammer_finite(
                        SignedMonomial(p.a_param.coeff, p.a_param.exponent + b), b, n, order);
        FormalSeries d = series_invert(den);
        FormalSeries sum(order);
        for (long j = 0; j <= n; ++j) {
            if (j > 0) {
                const long gone = b * (n - j + 1);
                if (gone <= order) d.times_binomial(-1, gone);
                const long added = p.a_param.exponent + b * (n + j);
                if (added <= order) d.times_geometric(p.a_param.coeff, added);
            }
            sum += p.alpha(j, order) * d;
        }
        if (auto m = first_mismatch(p.beta(n, order), sum, order))
            return CheckReport{false, n, m};
    }
    return CheckReport{};
}

enum class WeakForm { WF1, WF2, WF3, WF4 };

namespace detail {
// q -> q^2 on a pair's generators (used when WF2 receives a base-q pair).
inline BaileyPair rebase_squared(const BaileyPair& p) {
    auto alpha = [g = p.alpha](long n, int order) { return substitute_power(g(n, order), 2); };
    auto beta = [g = p.beta](long n, int order) { return substitute_power(g(n, order), 2); };
    return BaileyPair{alpha, beta, p.a_param, 2 * p.base_power};
}
}  // namespace detail

// The four weak forms, all stated for pairs relative to a = 1. With Q = q^b:
//   WF1: sum Q^{n^2} beta_n                    = 1/(Q;Q)_inf  sum Q^{n^2} alpha_n
//   WF2: sum q^{n^2} (-q;q^2)_n beta_n         = (-q;q^2)_inf/(q^2;q^2)_inf sum q^{n^2} alpha_n
//        (stated with base q^2 on the right; a base-q pair is first rebased q -> q^2)
//   WF3: 2 sum (-1)^n (Q;Q^2)_n beta_n         = (Q;Q^2)_inf/(Q^2;Q^2)_inf sum (-1)^n alpha_n
//   WF4: sum Q^{n(n+1)/2} (-1;Q)_n beta_n      = (-Q;Q)_inf/(Q;Q)_inf
//                                                sum Q^{n(n+1)/2} (-1;Q)_n/(-Q;Q)_n alpha_n
// Sums terminate when the weight's minimal q-degree exceeds the order; the
// alternating WF3 sum instead stops at an odd index past order/2 so that the
// dropped tail consists of complete cancelling pairs above the truncation.
inline std::pair<FormalSeries, FormalSeries> apply_weak_form(WeakForm wf, const BaileyPair& p0,
                                                             int order) {
    if (!(p0.a_param.coeff == 1 && p0.a_param.exponent == 0)) throw UnsupportedAParameter();
    const BaileyPair pr = (wf == WeakForm::WF2 && p0.base_power == 1)
                              ? detail::rebase_squared(p0)
                              : p0;
    const long b = pr.base_power;
    FormalSeries lhs(order), rhs(order);

    switch (wf) {
        case WeakForm::WF1: {
            for (long n = 0; b * n * n <= order; ++n) {
                FormalSeries bt = pr.beta(n, order);
                bt.times_monomial(1, b * n * n);
                lhs += bt;
                FormalSeries at = pr.alpha(n, order);
                at.times_monomial(1, b * n * n);
                rhs += at;
            }
            rhs = rhs * series_invert(pochhammer_infinite(SignedMonomial(1, b), b, order));
            break;
        }
        case WeakForm::WF2: {
            // here b = 2 by construction; weights use q and base q^2 literally
            for (long n = 0; n * n <= order; ++n) {
                FormalSeries w = pochhammer_finite(SignedMonomial(-1, 1), 2, n, order);
                w.times_monomial(1, n * n);
                lhs += w * pr.beta(n, order);
                FormalSeries at = pr.alpha(n, order);
                at.times_monomial(1, n * n);
                rhs += at;
            }
            FormalSeries pre = pochhammer_infinite(SignedMonomial(-1, 1), 2, order) *
                               series_invert(pochhammer_infinite(SignedMonomial(1, 2), 2, order));
            rhs = pre * rhs;
            break;
        }
        case WeakForm::WF3: {
            const long n_stop = 2 * (order / 2) + 1;
            for (long n = 0; n <= n_stop; ++n) {
                FormalSeries w = pochhammer_finite(SignedMonomial(1, b), 2 * b, n, order);
                FormalSeries t = w * pr.beta(n, order);
                if (n % 2 != 0) t = -t;
                lhs += t;
                FormalSeries at = pr.alpha(n, order);
                if (n % 2 != 0) at = -at;
                rhs += at;
            }
            lhs *= Rational(2);
            // The termwise limit a_inf = (Q;Q^2)_inf beta_inf: the customary
            // "2 sum" is the Abel value 2 sum (-1)^n (a_n - a_inf) + a_inf, and
            // the doubled paired sum above equals the first part. At n_stop
            // every later factor of both the weight and beta acts above the
            // truncation order, so the n_stop term value stands in for a_inf.
            lhs += pochhammer_finite(SignedMonomial(1, b), 2 * b, n_stop, order) *
                   pr.beta(n_stop, order);
            FormalSeries pre =
                pochhammer_infinite(SignedMonomial(1, b), 2 * b, order) *
                series_invert(pochhammer_infinite(SignedMonomial(1, 2 * b), 2 * b, order));
            rhs = pre * rhs;
            break;
        }
        case WeakForm::WF4: {
            for (long n = 0; b * n * (n + 1) / 2 <= order; ++n) {
                FormalSeries w = pochhammer_finite(SignedMonomial(-1, 0), b, n, order);
                w.times_monomial(1, b * n * (n + 1) / 2);
                lhs += w * pr.beta(n, order);
                FormalSeries aw = w * series_invert(
                                          pochhammer_finite(SignedMonomial(-1, b), b, n, order));
                rhs += aw * pr.alpha(n, order);
            }
            FormalSeries pre = pochhammer_infinite(SignedMonomial(-1, b), b, order) *
                               series_invert(pochhammer_infinite(SignedMonomial(1, b), b, order));
            rhs = pre * rhs;
            break;
        }
    }
    return {lhs, rhs};
}

// The iterated (multisum) form for a pair relative to (1, q^b):
//   sum over n_k >= ... >= n_1 >= 0 of
//     Q^{n_1^2 + ... + n_k^2} beta_{n_1} / ((Q;Q)_{n_2-n_1} ... (Q;Q)_{n_k-n_{k-1}})
//   = 1/(Q;Q)_inf sum_n Q^{k n^2} alpha_n,   Q = q^b.
// k = 1 reduces to WF1.
inline std::pair<FormalSeries, FormalSeries> apply_multisum(const BaileyPair& p, long k,
                                                            int order) {
    if (!(p.a_param.coeff == 1 && p.a_param.exponent == 0)) throw UnsupportedAParameter();
    const long b = p.base_power;
    FormalSeries lhs(order);
    // enumerate n_1 <= n_2 <= ... <= n_k; `tail` carries the accumulated factor
    std::function<void(long, long, long, const FormalSeries&)> go =
        [&](long i, long prev, long exp, const FormalSeries& tail) {
            if (i > k) {
                lhs += tail;
                return;
            }
            for (long ni = prev; exp + b * ni * ni <= order; ++ni) {
                FormalSeries t = tail;
                t.times_monomial(1, b * ni * ni);
                if (i == 1)
                    t = t * p.beta(ni, order);
                else
                    t = t * series_invert(
                                pochhammer_finite(SignedMonomial(1, b), b, ni - prev, order));
                go(i + 1, ni, exp + b * ni * ni, t);
            }
        };
    go(1, 0, 0, FormalSeries::one(order));

    FormalSeries rhs(order);
    for (long n = 0; b * k * n * n <= order; ++n) {
        FormalSeries at = p.alpha(n, order);
        at.times_monomial(1, b * k * n * n);
        rhs += at;
    }
    rhs = rhs * series_invert(pochhammer_infinite(SignedMonomial(1, b), b, order));
    return {lhs, rhs};
}

enum class FiniteIdentity { thm3_1, andrews1_2 };

inline std::vector<Rational> sample_points(size_t count) {
    std::vector<Rational> pts;
    pts.push_back(Rational(0));
    for (long k = 1; pts.size() < count; ++k) {
        pts.push_back(make_rational(k, 2));
        if (pts.size() < count) pts.push_back(make_rational(-k, 2));
    }
    pts.resize(count);
    return pts;
}

// Polynomial-in-x identities checked by exact evaluation at degree-bound + 1
// distinct rational points — a proof, not a spot check, since both sides are
// polynomials in x of degree <= n:
//   thm3_1:      prod_{j=1}^n (1+2xq^{2j-1}+q^{4j-2})
//                  = sum_{j=0}^n (V_j + V_{j-1})(x) q^{j^2} [2n choose n-j]_{q^2}
//   andrews1_2:  prod_{j=1}^n (1+2xq^j+q^{2j})
//                  = sum_{j=0}^n V_j(x) q^{j(j+1)/2} [2n+1 choose n-j]_q
inline CheckReport finite_identity_check(FiniteIdentity which, long n, int order) {
    const auto pts = sample_points(static_cast<size_t>(n) + 2);
    // x-independent q-binomial columns, computed once
    std::vector<FormalSeries> cols;
    for (long j = 0; j <= n; ++j) {
        if (which == FiniteIdentity::thm3_1) {
            FormalSeries c = qbinomial(2 * n, n - j, 2, order);
            c.times_monomial(1, j * j);
            cols.push_back(std::move(c));
        } else {
            FormalSeries c = qbinomial(2 * n + 1, n - j, 1, order);
            c.times_monomial(1, j * (j + 1) / 2);
            cols.push_back(std::move(c));
        }
    }
    for (size_t s = 0; s < pts.size(); ++s) {
        const Rational& x = pts[s];
        FormalSeries lhs =
            trinomial_product(x, n, which == FiniteIdentity::thm3_1 ? 2 : 1, order);
        FormalSeries rhs(order);
        for (long j = 0; j <= n; ++j) {
            const Rational w = (which == FiniteIdentity::thm3_1) ? cheb_v_plus_prev(x, j)
                                                                 : cheb_v(x, j);
            rhs += w * cols[static_cast<size_t>(j)];
        }
        if (auto m = first_mismatch(lhs, rhs, order))
            return CheckReport{false, static_cast<long>(s), m};
    }
    return CheckReport{};
}

}  // namespace qrr
