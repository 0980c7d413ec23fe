#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qrr/bailey.hpp"
#include "qrr/chebyshev.hpp"
#include "qrr/qfunctions.hpp"
#include "qrr/report.hpp"
#include "qrr/series.hpp"
#include "qrr/special_series.hpp"

namespace qrr {

// One verified identity. Non-parametric records use lhs/rhs; x-parametric
// records use lhs_x/rhs_x and are proven by sampling x at degree_bound+1
// distinct rationals (exact arithmetic makes this a proof of the polynomial
// identity in x). `custom` overrides both for checks that are not plain
// series comparisons.
struct IdentityRecord {
    std::string id;
    std::string anchor;
    int default_order = 150;
    bool x_parametric = false;
    std::function<FormalSeries(int)> lhs, rhs;
    std::function<FormalSeries(const Rational&, int)> lhs_x, rhs_x;
    std::function<long(int)> degree_bound;  // x-degree bound as a function of order
    std::function<VerificationReport(int)> custom;
    bool assert_integral = false;  // both sides must have integer coefficients
};

namespace corpus {

inline long isqrt_floor(long v) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// ---------- shared builders ----------

inline FormalSeries PI(long c, long e, long b, int order) {
    return pochhammer_infinite(SignedMonomial(c, e), b, order);
}
inline FormalSeries PF(long c, long e, long b, long n, int order) {
    return pochhammer_finite(SignedMonomial(c, e), b, n, order);
}

// sum q^{2n^2} prod_{j=1}^n (1+2xq^{2j-1}+q^{4j-2}) / (q^2;q^2)_{2n}
inline FormalSeries maini_lhs(const Rational& x, int order) {
    FormalSeries s(order);
    for (long n = 0; 2 * n * n <= order; ++n) {
        FormalSeries t = trinomial_product(x, n, 2, order) *
                         series_invert(PF(1, 2, 2, 2 * n, order));
        t.times_monomial(1, 2 * n * n);
        s += t;
    }
    return s;
}

// 1/(q^2;q^2)_inf sum (V_n + V_{n-1})(x) q^{3n^2}
inline FormalSeries maini_rhs(const Rational& x, int order) {
    FormalSeries s(order);
    for (long n = 0; 3 * n * n <= order; ++n) s.add_term(cheb_v_plus_prev(x, n), 3 * n * n);
    return s * series_invert(PI(1, 2, 2, order));
}

// sum q^{n^2+n} prod_{j=1}^n (1+2xq^j+q^{2j}) / (q;q)_{2n+1}
inline FormalSeries andv_lhs(const Rational& x, int order) {
    FormalSeries s(order);
    for (long n = 0; n * n + n <= order; ++n) {
        FormalSeries t = trinomial_product(x, n, 1, order) *
                         series_invert(PF(1, 1, 1, 2 * n + 1, order));
        t.times_monomial(1, n * n + n);
        s += t;
    }
    return s;
}

// 1/(q;q)_inf sum V_n(x) q^{3n(n+1)/2}
inline FormalSeries andv_rhs(const Rational& x, int order) {
    FormalSeries s(order);
    for (long n = 0; 3 * n * (n + 1) / 2 <= order; ++n)
        s.add_term(cheb_v(x, n), 3 * n * (n + 1) / 2);
    return s * series_invert(PI(1, 1, 1, order));
}

// sum q^{n^2} (-q;q^2)_n prod(1+2xq^{2j-1}+q^{4j-2}) / (q^2;q^2)_{2n}
inline FormalSeries rr2_lhs(const Rational& x, int order) {
    FormalSeries s(order);
    for (long n = 0; n * n <= order; ++n) {
        FormalSeries t = PF(-1, 1, 2, n, order) * trinomial_product(x, n, 2, order) *
                         series_invert(PF(1, 2, 2, 2 * n, order));
        t.times_monomial(1, n * n);
        s += t;
    }
    return s;
}

// (-q;q^2)_inf/(q^2;q^2)_inf sum (V_n+V_{n-1})(x) q^{2n^2}
inline FormalSeries rr2_rhs(const Rational& x, int order) {
    FormalSeries s(order);
    for (long n = 0; 2 * n * n <= order; ++n) s.add_term(cheb_v_plus_prev(x, n), 2 * n * n);
    return PI(-1, 1, 2, order) * series_invert(PI(1, 2, 2, order)) * s;
}

// 2 sum (-1)^n prod(1+2xq^{2j-1}+q^{4j-2}) / (q^4;q^4)_n.
// The terms a_n do not vanish termwise (constant coefficient +-1); the
// "2 sum" is the Abel value 2 sum (-1)^n (a_n - a_inf) + a_inf. The
// alternating sum runs to an odd stop index (complete cancelling pairs,
// dropped tail entirely above the truncation order), is doubled, and the
// final term value -- which equals a_inf up to the order -- is added once.
inline FormalSeries rr3_lhs(const Rational& x, int order) {
    FormalSeries s(order);
    FormalSeries t = FormalSeries::one(order);
    const long n_stop = 2 * (static_cast<long>(order) / 2) + 1;
    for (long n = 0;; ++n) {
        if (n % 2 == 0)
            s += t;
        else
            s -= t;
        if (n == n_stop) break;
        FormalSeries f = FormalSeries::one(order);
        if (2 * n + 1 <= order) f.add_term(2 * x, 2 * n + 1);
        if (4 * n + 2 <= order) f.add_term(1, 4 * n + 2);
        t = f * t;
        t.times_geometric(1, 4 * (n + 1));
    }
    s *= Rational(2);
    s += t;  // + a_inf
    return s;
}

// (q^2;q^4)_inf/(q^4;q^4)_inf sum (-1)^n (V_n+V_{n-1})(x) q^{n^2}
inline FormalSeries rr3_rhs(const Rational& x, int order) {
    FormalSeries s(order);
    for (long n = 0; n * n <= order; ++n) {
        Rational w = cheb_v_plus_prev(x, n);
        s.add_term((n % 2 == 0) ? w : -w, n * n);
    }
    return PI(1, 2, 4, order) * series_invert(PI(1, 4, 4, order)) * s;
}

// sum q^{n^2+n} (-1;q^2)_n prod(1+2xq^{2j-1}+q^{4j-2}) / (q^2;q^2)_{2n}
inline FormalSeries thmd_lhs(const Rational& x, int order) {
    FormalSeries s(order);
    for (long n = 0; n * n + n <= order; ++n) {
        FormalSeries t = PF(-1, 0, 2, n, order) * trinomial_product(x, n, 2, order) *
                         series_invert(PF(1, 2, 2, 2 * n, order));
        t.times_monomial(1, n * n + n);
        s += t;
    }
    return s;
}

// (-q^2;q^2)_inf/(q^2;q^2)_inf sum (V_n+V_{n-1})(x) q^{2n^2+n} (-1;q^2)_n/(-q^2;q^2)_n
inline FormalSeries thmd_rhs(const Rational& x, int order) {
    FormalSeries s(order);
    for (long n = 0; 2 * n * n + n <= order; ++n) {
        FormalSeries t = PF(-1, 0, 2, n, order) * series_invert(PF(-1, 2, 2, n, order));
        t.times_monomial(1, 2 * n * n + n);
        s += cheb_v_plus_prev(x, n) * t;
    }
    return PI(-1, 2, 2, order) * series_invert(PI(1, 2, 2, order)) * s;
}

// Nested multisum over n_k >= ... >= n_1 >= 0 with weight q^{b(n_1^2+...+n_k^2)};
// `num` supplies the n_1-dependent factor, inner links carry 1/(q^b;q^b)_{n_{i+1}-n_i}.
inline FormalSeries multisum_lhs(long k, long b,
                                 const std::function<FormalSeries(long, int)>& num, int order) {
    FormalSeries s(order);
    std::function<void(long, long, long, const FormalSeries&)> go =
        [&](long i, long prev, long exp, const FormalSeries& tail) {
            if (i > k) {
                s += tail;
                return;
            }
            for (long ni = prev; exp + b * ni * ni <= order; ++ni) {
                FormalSeries t = tail;
                t.times_monomial(1, b * ni * ni);
                if (i == 1)
                    t = t * num(ni, order);
                else
                    t = t * series_invert(PF(1, b, b, ni - prev, order));
                go(i + 1, ni, exp + b * ni * ni, t);
            }
        };
    go(1, 0, 0, FormalSeries::one(order));
    return s;
}

inline FormalSeries multisum_rhs_cheb(long k, const Rational& x, int order) {
    FormalSeries s(order);
    for (long n = 0; (2 * k + 1) * n * n <= order; ++n)
        s.add_term(cheb_v_plus_prev(x, n), (2 * k + 1) * n * n);
    return s * series_invert(PI(1, 2, 2, order));
}

// ---------- Hecke-type right-hand sides (x-parametric ones) ----------

// 1/(q^2;q^2)_inf sum_n (-1)^n sum_{j=0}^{floor(n/2)} (V_j+V_{j-1})(x) q^{n^2+n-j^2}
inline FormalSeries hecke1_rhs(const Rational& x, int order) {
    HeckeSpec spec;
    spec.j_range = [](long n) { return std::pair<long, long>{0, n / 2}; };
    spec.terms = [x](long n, long j) {
        Rational w = cheb_v_plus_prev(x, j);
        if (n % 2 != 0) w = -w;
        return std::vector<std::pair<long, Rational>>{{n * n + n - j * j, w}};
    };
    spec.min_exponent = [](long n) { return n * n + n - (n / 2) * (n / 2); };
    return hecke_eval(spec, order) * series_invert(PI(1, 2, 2, order));
}

// sum_{n>=1} q^{2n^2-2n} prod(1+2xq^{2j-1}+q^{4j-2}) / (q^2;q^2)_{2n-1}
// (the n = 0 summand carries 1/(q^2;q^2)_{-1} and is zero by convention)
inline FormalSeries hecke2_lhs(const Rational& x, int order) {
    FormalSeries s(order);
    for (long n = 0; 2 * n * n - 2 * n <= order; ++n) {
        FormalSeries t = trinomial_product(x, n, 2, order) *
                         inverse_pochhammer_or_zero(SignedMonomial(1, 2), 2, 2 * n - 1, order);
        t.times_monomial(1, 2 * n * n - 2 * n);
        s += t;
    }
    return s;
}

// 1/(q^2;q^2)_inf sum_n sum_{j=0}^{n} (V_j+V_{j-1})(x)
//                      (q^{4n^2-2n-j^2} - q^{4n^2+10n+6-j^2})
inline FormalSeries hecke2_rhs(const Rational& x, int order) {
    HeckeSpec spec;
    spec.j_range = [](long n) { return std::pair<long, long>{0, n}; };
    spec.terms = [x](long n, long j) {
        const Rational w = cheb_v_plus_prev(x, j);
        const long e = 4 * n * n - 2 * n - j * j;
        return std::vector<std::pair<long, Rational>>{{e, w}, {e + 12 * n + 6, -w}};
    };
    spec.min_exponent = [](long n) { return 3 * n * n - 2 * n; };
    return hecke_eval(spec, order) * series_invert(PI(1, 2, 2, order));
}

// ---------- registry ----------

inline std::vector<IdentityRecord> build_registry() {
    std::vector<IdentityRecord> R;
    auto sqrt_bound = [](int order) { return isqrt_floor(order); };

    // -- headline single-sum identities --
    {
        IdentityRecord r;
        r.id = "dyson-1.1";
        r.anchor = "Dyson's favorite identity: sum q^{n(n+1)} prod(1+q^j+q^{2j}) / (q;q)_{2n+1}"
                   " = (q^9;q^9)_inf/(q;q)_inf";
        r.default_order = 200;
        r.assert_integral = true;
        r.lhs = [](int o) { return andv_lhs(make_rational(1, 2), o); };
        r.rhs = [](int o) { return PI(1, 9, 9, o) * series_invert(PI(1, 1, 1, o)); };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "andrews-1.4";
        r.anchor = "Chebyshev generalization of Dyson's favorite identity (third-kind weights)";
        r.x_parametric = true;
        r.degree_bound = [](int order) {
            return (isqrt_floor(8L * order + 1) - 1) / 2;  // x^d first appears at q^{d(d+1)/2}
        };
        r.lhs_x = andv_lhs;
        r.rhs_x = andv_rhs;
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "thm-1.1";
        r.anchor = "sum q^{2n^2} prod(1+2xq^{2j-1}+q^{4j-2})/(q^2;q^2)_{2n}"
                   " = 1/(q^2;q^2)_inf sum (V_n+V_{n-1})(x) q^{3n^2}";
        r.x_parametric = true;
        r.degree_bound = sqrt_bound;
        r.lhs_x = maini_lhs;
        r.rhs_x = maini_rhs;
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "entry-5.3.4";
        r.anchor = "Entry 5.3.4 of Ramanujan's lost notebook";
        r.default_order = 200;
        r.assert_integral = true;
        r.lhs = [](int o) { return maini_lhs(make_rational(1, 2), o); };
        r.rhs = [](int o) {
            return PI(1, 1, 6, o) * PI(1, 5, 6, o) * PI(1, 6, 6, o) * PI(1, 9, 18, o) *
                   series_invert(PI(1, 1, 1, o));
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "entry-5.3.3";
        r.anchor = "Entry 5.3.3 of Ramanujan's lost notebook (x = -1 specialization)";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; 2 * n * n <= o; ++n) {
                FormalSeries t = PF(1, 1, 2, n, o) * PF(1, 1, 2, n, o) *
                                 series_invert(PF(1, 2, 2, 2 * n, o));
                t.times_monomial(1, 2 * n * n);
                s += t;
            }
            return s;
        };
        r.rhs = [](int o) {
            return PI(1, 3, 3, o) * PI(1, 3, 6, o) * series_invert(PI(1, 2, 2, o));
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "entry-5.3.2";
        r.anchor = "Entry 5.3.2 of Ramanujan's lost notebook (x = 0 specialization)";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; n * n <= o; ++n) {
                FormalSeries t = PF(-1, 1, 2, n, o) * series_invert(PF(1, 1, 1, 2 * n, o));
                t.times_monomial(1, n * n);
                s += t;
            }
            return s;
        };
        r.rhs = [](int o) {
            return PI(1, 6, 12, o) * PI(1, 6, 6, o) * series_invert(PI(1, 1, 1, o));
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "fib-4.4a";
        r.anchor = "x = 3/2 specialization with Fibonacci weights F_{2n+1}+F_{2n-1}";
        r.assert_integral = true;
        r.lhs = [](int o) { return maini_lhs(make_rational(3, 2), o); };
        r.rhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; 3 * n * n <= o; ++n) {
                Rational w = (n == 0) ? Rational(1)
                                      : Rational(Integer(fibonacci(2 * n + 1) + fibonacci(2 * n - 1)));
                s.add_term(w, 3 * n * n);
            }
            return s * series_invert(PI(1, 2, 2, o));
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "fib-4.4b";
        r.anchor = "x = -3/2 specialization with Lucas weights (-1)^n L_{2n}";
        r.assert_integral = true;
        r.lhs = [](int o) { return maini_lhs(make_rational(-3, 2), o); };
        r.rhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; 3 * n * n <= o; ++n) {
                Rational w = (n == 0) ? Rational(1) : Rational(Integer(lucas(2 * n)));
                if (n % 2 != 0) w = -w;
                s.add_term(w, 3 * n * n);
            }
            return s * series_invert(PI(1, 2, 2, o));
        };
        R.push_back(r);
    }

    // -- multisum generalization and its four specializations --
    auto key_num = [](const Rational& x) {
        return std::function<FormalSeries(long, int)>([x](long n1, int o) {
            return trinomial_product(x, n1, 2, o) * series_invert(PF(1, 2, 2, 2 * n1, o));
        });
    };
    for (long k = 1; k <= 3; ++k) {
        IdentityRecord r;
        r.id = "multisum-4.5-k" + std::to_string(k);
        r.anchor = "iterated Bailey chain: nested sum over n_k >= ... >= n_1 >= 0, level k = " +
                   std::to_string(k);
        r.default_order = 100;
        r.x_parametric = true;
        r.degree_bound = sqrt_bound;
        r.lhs_x = [k, key_num](const Rational& x, int o) {
            return multisum_lhs(k, 2, key_num(x), o);
        };
        r.rhs_x = [k](const Rational& x, int o) { return multisum_rhs_cheb(k, x, o); };
        R.push_back(r);
    }
    for (long k = 1; k <= 3; ++k) {
        {
            IdentityRecord r;
            r.id = "cor-4.6a-k" + std::to_string(k);
            r.anchor = "multisum specialization x = 1 (numerator (q;q^2)_{n_1}^2), k = " +
                       std::to_string(k);
            r.default_order = 100;
            r.assert_integral = true;
            r.lhs = [k](int o) {
                return multisum_lhs(k, 2,
                                    [](long n1, int oo) {
                                        return PF(1, 1, 2, n1, oo) * PF(1, 1, 2, n1, oo) *
                                               series_invert(PF(1, 2, 2, 2 * n1, oo));
                                    },
                                    o);
            };
            r.rhs = [k](int o) {
                const long m = 2 * k + 1;
                return PI(1, m, 2 * m, o) * PI(1, m, 2 * m, o) * PI(1, 2 * m, 2 * m, o) *
                       series_invert(PI(1, 2, 2, o));
            };
            R.push_back(r);
        }
        {
            IdentityRecord r;
            r.id = "cor-4.6b-k" + std::to_string(k);
            r.anchor = "multisum specialization x = 1/2 (numerator (q^3;q^6)_{n_1}/(q;q^2)_{n_1}), "
                       "k = " + std::to_string(k);
            r.default_order = 100;
            r.lhs = [k](int o) {
                return multisum_lhs(k, 2,
                                    [](long n1, int oo) {
                                        return PF(1, 3, 6, n1, oo) *
                                               series_invert(PF(1, 2, 2, 2 * n1, oo) *
                                                             PF(1, 1, 2, n1, oo));
                                    },
                                    o);
            };
            r.rhs = [k](int o) {
                const long m = 2 * k + 1;
                return PI(1, 2 * m, 2 * m, o) * PI(1, 3 * m, 6 * m, o) *
                       series_invert(PI(1, 2, 2, o) * PI(1, m, 2 * m, o));
            };
            R.push_back(r);
        }
        {
            IdentityRecord r;
            r.id = "cor-4.6c-k" + std::to_string(k);
            r.anchor = "multisum specialization x = 0 after q^2 -> q (numerator (-q;q^2)_{n_1}), "
                       "k = " + std::to_string(k);
            r.default_order = 100;
            r.assert_integral = true;
            r.lhs = [k](int o) {
                return multisum_lhs(k, 1,
                                    [](long n1, int oo) {
                                        return PF(-1, 1, 2, n1, oo) *
                                               series_invert(PF(1, 1, 1, 2 * n1, oo));
                                    },
                                    o);
            };
            r.rhs = [k](int o) {
                const long m = 4 * k + 2;
                return PI(1, m, 2 * m, o) * PI(1, m, 2 * m, o) * PI(1, 2 * m, 2 * m, o) *
                       series_invert(PI(1, 1, 1, o));
            };
            R.push_back(r);
        }
        {
            IdentityRecord r;
            r.id = "cor-4.6d-k" + std::to_string(k);
            r.anchor = "multisum specialization x = 3/2 (Fibonacci weights), k = " +
                       std::to_string(k);
            r.default_order = 100;
            r.assert_integral = true;
            r.lhs = [k, key_num](int o) {
                return multisum_lhs(k, 2, key_num(make_rational(3, 2)), o);
            };
            r.rhs = [k](int o) { return multisum_rhs_cheb(k, make_rational(3, 2), o); };
            R.push_back(r);
        }
    }

    // -- second family: weight q^{n^2} (-q;q^2)_n --
    {
        IdentityRecord r;
        r.id = "thm-5.1";
        r.anchor = "sum q^{n^2} (-q;q^2)_n prod(1+2xq^{2j-1}+q^{4j-2})/(q^2;q^2)_{2n}"
                   " = (-q;q^2)_inf/(q^2;q^2)_inf sum (V_n+V_{n-1})(x) q^{2n^2}";
        r.x_parametric = true;
        r.degree_bound = sqrt_bound;
        r.lhs_x = rr2_lhs;
        r.rhs_x = rr2_rhs;
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-5.2a";
        r.anchor = "x = -1: sum q^{n^2}(q;q^2)_n/(q^4;q^4)_n = (q^2;q^4)_inf^2/(q;q^2)_inf";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; n * n <= o; ++n) {
                FormalSeries t = PF(1, 1, 2, n, o) * series_invert(PF(1, 4, 4, n, o));
                t.times_monomial(1, n * n);
                s += t;
            }
            return s;
        };
        r.rhs = [](int o) {
            return PI(1, 2, 4, o) * PI(1, 2, 4, o) * series_invert(PI(1, 1, 2, o));
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-5.2b";
        r.anchor = "x = -1/2: sum q^{n^2}(-q^3;q^6)_n/(q^2;q^2)_{2n}"
                   " = (-q;q)_inf(-q^6;q^12)_inf/(-q^2;q^4)_inf";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; n * n <= o; ++n) {
                FormalSeries t = PF(-1, 3, 6, n, o) * series_invert(PF(1, 2, 2, 2 * n, o));
                t.times_monomial(1, n * n);
                s += t;
            }
            return s;
        };
        r.rhs = [](int o) {
            return PI(-1, 1, 1, o) * PI(-1, 6, 12, o) * series_invert(PI(-1, 2, 4, o));
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-5.2c";
        r.anchor = "x = 0: sum q^{n^2}(-q^2;q^4)_n/((q;q^2)_n(q^4;q^4)_n)"
                   " = (-q;q^2)_inf(q^8;q^8)_inf(q^8;q^16)_inf/(q^2;q^2)_inf";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; n * n <= o; ++n) {
                FormalSeries t = PF(-1, 2, 4, n, o) *
                                 series_invert(PF(1, 1, 2, n, o) * PF(1, 4, 4, n, o));
                t.times_monomial(1, n * n);
                s += t;
            }
            return s;
        };
        r.rhs = [](int o) {
            return PI(-1, 1, 2, o) * PI(1, 8, 8, o) * PI(1, 8, 16, o) *
                   series_invert(PI(1, 2, 2, o));
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-5.2d";
        r.anchor = "x = 1/2: sum q^{n^2}(-q;q^2)_n(q^3;q^6)_n/((q^2;q^2)_{2n}(q;q^2)_n)"
                   " = (q^4;q^4)_inf(q^6;q^12)_inf/(q;q)_inf";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; n * n <= o; ++n) {
                FormalSeries t = PF(-1, 1, 2, n, o) * PF(1, 3, 6, n, o) *
                                 series_invert(PF(1, 2, 2, 2 * n, o) * PF(1, 1, 2, n, o));
                t.times_monomial(1, n * n);
                s += t;
            }
            return s;
        };
        r.rhs = [](int o) {
            return PI(1, 4, 4, o) * PI(1, 6, 12, o) * series_invert(PI(1, 1, 1, o));
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-5.2e";
        r.anchor = "x = 1: sum q^{n^2}(-q;q^2)_n^3/(q^2;q^2)_{2n} = (-q^2;q^4)_inf^2/(q;q^2)_inf";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; n * n <= o; ++n) {
                FormalSeries p = PF(-1, 1, 2, n, o);
                FormalSeries t = p * p * p * series_invert(PF(1, 2, 2, 2 * n, o));
                t.times_monomial(1, n * n);
                s += t;
            }
            return s;
        };
        r.rhs = [](int o) {
            return PI(-1, 2, 4, o) * PI(-1, 2, 4, o) * series_invert(PI(1, 1, 2, o));
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-5.2f";
        r.anchor = "x = 3/2 with Fibonacci weights on the theta side";
        r.assert_integral = true;
        r.lhs = [](int o) { return rr2_lhs(make_rational(3, 2), o); };
        r.rhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; 2 * n * n <= o; ++n) {
                Rational w = (n == 0) ? Rational(1)
                                      : Rational(Integer(fibonacci(2 * n + 1) + fibonacci(2 * n - 1)));
                s.add_term(w, 2 * n * n);
            }
            return PI(-1, 1, 2, o) * series_invert(PI(1, 2, 2, o)) * s;
        };
        R.push_back(r);
    }

    // -- third family: alternating sums --
    {
        IdentityRecord r;
        r.id = "thm-5.3";
        r.anchor = "2 sum (-1)^n prod(1+2xq^{2j-1}+q^{4j-2})/(q^4;q^4)_n"
                   " = (q^2;q^4)_inf/(q^4;q^4)_inf sum (-1)^n (V_n+V_{n-1})(x) q^{n^2}";
        r.x_parametric = true;
        r.degree_bound = sqrt_bound;
        r.lhs_x = rr3_lhs;
        r.rhs_x = rr3_rhs;
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-5.4a";
        r.anchor = "x = 0: 2 sum (-1)^n (-q;q^2)_n/(q^2;q^2)_n = (q,q^2,q^3;q^4)_inf";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            FormalSeries t = FormalSeries::one(o);
            const long n_stop = 2 * (static_cast<long>(o) / 2) + 1;
            for (long n = 0;; ++n) {
                if (n % 2 == 0)
                    s += t;
                else
                    s -= t;
                if (n == n_stop) break;
                if (2 * n + 1 <= o) t.times_binomial(1, 2 * n + 1);
                t.times_geometric(1, 2 * (n + 1));
            }
            s *= Rational(2);
            s += t;  // + a_inf
            return s;
        };
        r.rhs = [](int o) { return PI(1, 1, 4, o) * PI(1, 2, 4, o) * PI(1, 3, 4, o); };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-5.4b";
        r.anchor = "x = -1/2: 2 sum (-1)^n (-q^3;q^6)_n/((q^4;q^4)_n(-q;q^2)_n)"
                   " = (q^2;q^4)_inf^2(q^3;q^6)_inf/(q;q^2)_inf (a missing member of "
                   "Slater's list)";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            FormalSeries t = FormalSeries::one(o);
            const long n_stop = 2 * (static_cast<long>(o) / 2) + 1;
            for (long n = 0;; ++n) {
                if (n % 2 == 0)
                    s += t;
                else
                    s -= t;
                if (n == n_stop) break;
                if (6 * n + 3 <= o) t.times_binomial(1, 6 * n + 3);
                t.times_geometric(1, 4 * (n + 1));
                t.times_geometric(-1, 2 * n + 1);  // 1/(1+q^{2n+1})
            }
            s *= Rational(2);
            s += t;  // + a_inf
            return s;
        };
        r.rhs = [](int o) {
            return PI(1, 2, 4, o) * PI(1, 2, 4, o) * PI(1, 3, 6, o) *
                   series_invert(PI(1, 1, 2, o));
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-5.4c";
        r.anchor = "x = 1: 2 sum (-1)^n (-q;q^2)_n^2/(q^4;q^4)_n = (q,q^2,q^3;q^4)_inf^2";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            FormalSeries t = FormalSeries::one(o);
            const long n_stop = 2 * (static_cast<long>(o) / 2) + 1;
            for (long n = 0;; ++n) {
                if (n % 2 == 0)
                    s += t;
                else
                    s -= t;
                if (n == n_stop) break;
                if (2 * n + 1 <= o) {
                    t.times_binomial(1, 2 * n + 1);
                    t.times_binomial(1, 2 * n + 1);
                }
                t.times_geometric(1, 4 * (n + 1));
            }
            s *= Rational(2);
            s += t;  // + a_inf
            return s;
        };
        r.rhs = [](int o) {
            FormalSeries p = PI(1, 1, 4, o) * PI(1, 2, 4, o) * PI(1, 3, 4, o);
            return p * p;
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-5.4d";
        r.anchor = "x = 3/2 with Fibonacci weights on the alternating theta side";
        r.assert_integral = true;
        r.lhs = [](int o) { return rr3_lhs(make_rational(3, 2), o); };
        r.rhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; n * n <= o; ++n) {
                Rational w = (n == 0) ? Rational(1)
                                      : Rational(Integer(fibonacci(2 * n + 1) + fibonacci(2 * n - 1)));
                s.add_term((n % 2 == 0) ? w : -w, n * n);
            }
            return PI(1, 2, 4, o) * series_invert(PI(1, 4, 4, o)) * s;
        };
        R.push_back(r);
    }

    // -- Appell-Lerch family --
    {
        IdentityRecord r;
        r.id = "thm-6.1";
        r.anchor = "sum q^{n^2+n}(-1;q^2)_n prod(1+2xq^{2j-1}+q^{4j-2})/(q^2;q^2)_{2n}"
                   " = (-q^2;q^2)_inf/(q^2;q^2)_inf sum (V_n+V_{n-1})(x) q^{2n^2+n}"
                   " (-1;q^2)_n/(-q^2;q^2)_n";
        r.x_parametric = true;
        r.degree_bound = sqrt_bound;
        r.lhs_x = thmd_lhs;
        r.rhs_x = thmd_rhs;
        R.push_back(r);
    }
    auto al_prefactor = [](int o) {
        return Rational(2) * (PI(-1, 2, 2, o) * series_invert(PI(1, 2, 2, o)));
    };
    {
        IdentityRecord r;
        r.id = "cor-6.2";
        r.anchor = "x = 1: Appell-Lerch evaluation 2(-q^2;q^2)_inf/(q^2;q^2)_inf"
                   " sum_Z q^{2n^2+n}/(1+q^{2n})";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; n * n + n <= o; ++n) {
                FormalSeries p = PF(-1, 0, 2, n, o) * PF(-1, 1, 2, n, o) * PF(-1, 1, 2, n, o);
                FormalSeries t = p * series_invert(PF(1, 2, 2, 2 * n, o));
                t.times_monomial(1, n * n + n);
                s += t;
            }
            return s;
        };
        r.rhs = [al_prefactor](int o) {
            return al_prefactor(o) * appell_lerch_eval(AppellLerchSpec{2, 1, 2}, o);
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-6.3";
        r.anchor = "x = 1/2: cube-root-of-unity weighted Appell-Lerch sum, regrouped by"
                   " residue class mod 3";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; n * n + n <= o; ++n) {
                FormalSeries t = PF(-1, 0, 2, n, o) * PF(-1, 3, 6, n, o) *
                                 series_invert(PF(1, 2, 2, 2 * n, o) * PF(-1, 1, 2, n, o));
                t.times_monomial(1, n * n + n);
                s += t;
            }
            return s;
        };
        r.rhs = [al_prefactor](int o) {
            const AppellLerchSpec spec{2, 1, 2};
            FormalSeries s0 = appell_lerch_eval(spec, o, 3, 0);
            FormalSeries s1 = appell_lerch_eval(spec, o, 3, 1);
            FormalSeries s2 = appell_lerch_eval(spec, o, 3, 2);
            return al_prefactor(o) * cyclotomic_regroup(s0, s1, s2);
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-6.4";
        r.anchor = "base-q case: 2(-q;q)_inf/(q;q)_inf sum_Z (-1)^n q^{4n^2+n}/(1+q^{2n})";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; (n * n + n) / 2 <= o; ++n) {
                FormalSeries t = PF(-1, 0, 1, n, o) * PF(-1, 1, 2, n, o) *
                                 series_invert(PF(1, 1, 1, 2 * n, o));
                t.times_monomial(1, (n * n + n) / 2);
                s += t;
            }
            return s;
        };
        r.rhs = [](int o) {
            return Rational(2) * (PI(-1, 1, 1, o) * series_invert(PI(1, 1, 1, o))) *
                   appell_lerch_eval(AppellLerchSpec{4, 1, 2, true}, o);
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-6.5";
        r.anchor = "x = 3/2: one-sided Appell-Lerch sum with weights F_{2n+1}+F_{2n-1}";
        r.assert_integral = true;
        r.lhs = [](int o) { return thmd_lhs(make_rational(3, 2), o); };
        r.rhs = [al_prefactor](int o) {
            auto w = [](long n) { return cheb_v_plus_prev(make_rational(3, 2), n); };
            return al_prefactor(o) * appell_lerch_one_sided(AppellLerchSpec{2, 1, 2}, w, o);
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "mock-mu2";
        r.anchor = "second-order mock theta function mu: q-hypergeometric form vs"
                   " Appell-Lerch form";
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; n * n <= o; ++n) {
                FormalSeries d = PF(-1, 2, 2, n, o);
                FormalSeries t = PF(1, 1, 2, n, o) * series_invert(d * d);
                t.times_monomial(1, n * n);
                if (n % 2 == 0)
                    s += t;
                else
                    s -= t;
            }
            return s;
        };
        r.rhs = [](int o) {
            return Rational(2) * (PI(1, 1, 2, o) * series_invert(PI(1, 2, 2, o))) *
                   appell_lerch_eval(AppellLerchSpec{2, 1, 2}, o);
        };
        R.push_back(r);
    }

    // -- Heine-derived transformation grid --
    for (long a = 0; a <= 4; ++a) {
        for (long b = 0; b <= 4; ++b) {
            IdentityRecord r;
            r.id = "heine-a" + std::to_string(a) + "-b" + std::to_string(b);
            r.anchor = "Heine transform instance: sum q^{n^2+" + std::to_string(a) +
                       "n}/((q;q)_n (q;q)_{n+" + std::to_string(b) + "})";
            r.lhs = [a, b](int o) { return heine_transform_sides(a, b, o).first; };
            r.rhs = [a, b](int o) { return heine_transform_sides(a, b, o).second; };
            R.push_back(r);
        }
    }

    // -- generalized Hecke-type double sums --
    {
        IdentityRecord r;
        r.id = "thm-7.1";
        r.anchor = "sum q^{2n^2+2n} prod(1+2xq^{2j-1}+q^{4j-2})/(q^2;q^2)_{2n} ="
                   " 1/(q^2;q^2)_inf sum (-1)^n q^{n^2+n} sum_{j<=n/2} (V_j+V_{j-1})(x) q^{-j^2}";
        r.x_parametric = true;
        r.degree_bound = sqrt_bound;
        r.lhs_x = [](const Rational& x, int o) {
            FormalSeries s(o);
            for (long n = 0; 2 * n * n + 2 * n <= o; ++n) {
                FormalSeries t = trinomial_product(x, n, 2, o) *
                                 series_invert(PF(1, 2, 2, 2 * n, o));
                t.times_monomial(1, 2 * n * n + 2 * n);
                s += t;
            }
            return s;
        };
        r.rhs_x = hecke1_rhs;
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-7.2";
        r.anchor = "x = -1: inner sum over |j| <= floor(n/2) with sign (-1)^{n+j}";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; 2 * n * n + 2 * n <= o; ++n) {
                FormalSeries t = PF(1, 1, 2, n, o) * PF(1, 1, 2, n, o) *
                                 series_invert(PF(1, 2, 2, 2 * n, o));
                t.times_monomial(1, 2 * n * n + 2 * n);
                s += t;
            }
            return s;
        };
        r.rhs = [](int o) {
            HeckeSpec spec;
            spec.j_range = [](long n) { return std::pair<long, long>{-(n / 2), n / 2}; };
            spec.terms = [](long n, long j) {
                Rational c = ((n + j) % 2 == 0) ? 1 : -1;
                return std::vector<std::pair<long, Rational>>{{n * n + n - j * j, c}};
            };
            spec.min_exponent = [](long n) { return n * n + n - (n / 2) * (n / 2); };
            return hecke_eval(spec, o) * series_invert(PI(1, 2, 2, o));
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-7.3";
        r.anchor = "x = 0 after q^2 -> q: inner sum over |j| <= floor(n/4), exponent"
                   " n(n+1)/2 - 2j^2";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; n * n + n <= o; ++n) {
                FormalSeries t = PF(-1, 1, 2, n, o) * series_invert(PF(1, 1, 1, 2 * n, o));
                t.times_monomial(1, n * n + n);
                s += t;
            }
            return s;
        };
        r.rhs = [](int o) {
            HeckeSpec spec;
            spec.j_range = [](long n) { return std::pair<long, long>{-(n / 4), n / 4}; };
            spec.terms = [](long n, long j) {
                Rational c = ((n + j) % 2 == 0) ? 1 : -1;
                return std::vector<std::pair<long, Rational>>{
                    {n * (n + 1) / 2 - 2 * j * j, c}};
            };
            spec.min_exponent = [](long n) {
                return n * (n + 1) / 2 - 2 * (n / 4) * (n / 4);
            };
            return hecke_eval(spec, o) * series_invert(PI(1, 1, 1, o));
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-7.4";
        r.anchor = "x = -1/2: cube-root-of-unity weights e^{2 pi i j/3} q^{-j^2}, regrouped"
                   " by residue class of j mod 3";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 0; 2 * n * n + 2 * n <= o; ++n) {
                FormalSeries t = PF(-1, 3, 6, n, o) *
                                 series_invert(PF(1, 2, 2, 2 * n, o) * PF(-1, 1, 2, n, o));
                t.times_monomial(1, 2 * n * n + 2 * n);
                s += t;
            }
            return s;
        };
        r.rhs = [](int o) {
            auto make = [](long residue) {
                HeckeSpec spec;
                spec.j_range = [](long n) { return std::pair<long, long>{-(n / 2), n / 2}; };
                spec.terms = [residue](long n, long j) {
                    std::vector<std::pair<long, Rational>> ts;
                    if (((j % 3) + 3) % 3 == residue)
                        ts.push_back({n * n + n - j * j,
                                      (n % 2 == 0) ? Rational(1) : Rational(-1)});
                    return ts;
                };
                spec.min_exponent = [](long n) { return n * n + n - (n / 2) * (n / 2); };
                return spec;
            };
            FormalSeries s0 = hecke_eval(make(0), o);
            FormalSeries s1 = hecke_eval(make(1), o);
            FormalSeries s2 = hecke_eval(make(2), o);
            return cyclotomic_regroup(s0, s1, s2) * series_invert(PI(1, 2, 2, o));
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "thm-7.5";
        r.anchor = "sum_{n>=1} q^{2n^2-2n} prod(1+2xq^{2j-1}+q^{4j-2})/(q^2;q^2)_{2n-1}"
                   " (n = 0 summand is zero by convention) = Hecke double sum with factor"
                   " (1 - q^{12n+6})";
        r.x_parametric = true;
        r.degree_bound = sqrt_bound;
        r.lhs_x = hecke2_lhs;
        r.rhs_x = hecke2_rhs;
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-7.6a";
        r.anchor = "x = -1: inner sum over |j| <= n with sign (-1)^j";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 1; 2 * n * n - 2 * n <= o; ++n) {
                FormalSeries t = PF(1, 1, 2, n, o) * PF(1, 1, 2, n, o) *
                                 series_invert(PF(1, 2, 2, 2 * n - 1, o));
                t.times_monomial(1, 2 * n * n - 2 * n);
                s += t;
            }
            return s;
        };
        r.rhs = [](int o) {
            HeckeSpec spec;
            spec.j_range = [](long n) { return std::pair<long, long>{-n, n}; };
            spec.terms = [](long n, long j) {
                const Rational c = (j % 2 == 0) ? 1 : -1;
                const long e = 4 * n * n - 2 * n - j * j;
                return std::vector<std::pair<long, Rational>>{{e, c}, {e + 12 * n + 6, -c}};
            };
            spec.min_exponent = [](long n) { return 3 * n * n - 2 * n; };
            return hecke_eval(spec, o) * series_invert(PI(1, 2, 2, o));
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-7.6b";
        r.anchor = "x = 0 after q^2 -> q: sum_{n>=1} q^{n^2-n}(-q;q^2)_n/(q;q)_{2n-1} against"
                   " a weight-(1 - q^{6n+3}) Hecke double sum";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 1; n * n - n <= o; ++n) {
                FormalSeries t = PF(-1, 1, 2, n, o) * series_invert(PF(1, 1, 1, 2 * n - 1, o));
                t.times_monomial(1, n * n - n);
                s += t;
            }
            return s;
        };
        r.rhs = [](int o) {
            HeckeSpec spec;
            spec.j_range = [](long n) { return std::pair<long, long>{-(n / 2), n / 2}; };
            spec.terms = [](long n, long j) {
                const Rational c = (j % 2 == 0) ? 1 : -1;
                const long e = 2 * n * n - n - 2 * j * j;
                return std::vector<std::pair<long, Rational>>{{e, c}, {e + 6 * n + 3, -c}};
            };
            spec.min_exponent = [](long n) {
                return 2 * n * n - n - 2 * (n / 2) * (n / 2);
            };
            return hecke_eval(spec, o) * series_invert(PI(1, 1, 1, o));
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "cor-7.6c";
        r.anchor = "x = -1/2: cube-root-of-unity weights over |j| <= n, regrouped mod 3";
        r.assert_integral = true;
        r.lhs = [](int o) {
            FormalSeries s(o);
            for (long n = 1; 2 * n * n - 2 * n <= o; ++n) {
                FormalSeries t = PF(-1, 3, 6, n, o) *
                                 series_invert(PF(1, 2, 2, 2 * n - 1, o) * PF(-1, 1, 2, n, o));
                t.times_monomial(1, 2 * n * n - 2 * n);
                s += t;
            }
            return s;
        };
        r.rhs = [](int o) {
            auto make = [](long residue) {
                HeckeSpec spec;
                spec.j_range = [](long n) { return std::pair<long, long>{-n, n}; };
                spec.terms = [residue](long n, long j) {
                    std::vector<std::pair<long, Rational>> ts;
                    if (((j % 3) + 3) % 3 == residue) {
                        const long e = 4 * n * n - 2 * n - j * j;
                        ts.push_back({e, Rational(1)});
                        ts.push_back({e + 12 * n + 6, Rational(-1)});
                    }
                    return ts;
                };
                spec.min_exponent = [](long n) { return 3 * n * n - 2 * n; };
                return spec;
            };
            FormalSeries s0 = hecke_eval(make(0), o);
            FormalSeries s1 = hecke_eval(make(1), o);
            FormalSeries s2 = hecke_eval(make(2), o);
            return cyclotomic_regroup(s0, s1, s2) * series_invert(PI(1, 2, 2, o));
        };
        R.push_back(r);
    }

    // -- exact q-binomial identity and its limit --
    {
        IdentityRecord r;
        r.id = "qbi-8.1";
        r.anchor = "sum_{j=-n-1}^{n} q^{2j^2+j}[2n+1, n-j]_{q^2}^2 = (1+q^{2n+1})[4n+1, 2n]_q,"
                   " exact polynomial check";
        r.custom = [](int order) {
            VerificationReport rep;
            rep.id = "qbi-8.1";
            rep.order = order;
            // largest n whose right side has degree within the order (min n = 0),
            // capped at 30
            long n_max = 0;
            while (n_max < 30 && 2 * (n_max + 1) * (2 * (n_max + 1) + 1) + 2 * (n_max + 1) + 1 <=
                                     order)
                ++n_max;
            for (long n = 0; n <= n_max; ++n) {
                const auto pr = qbinom_identity_check(n);
                if (!pr.passed) {
                    rep.status = "fail";
                    rep.mismatch = Mismatch{static_cast<int>(pr.failed_exponent), 0, 0};
                    return rep;
                }
            }
            rep.status = "pass";
            return rep;
        };
        R.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "jtp-limit-8";
        r.anchor = "limit of the q-binomial identity: sum_Z q^{2j^2+j} = (-q,-q^3,q^4;q^4)_inf";
        r.default_order = 100;
        r.assert_integral = true;
        r.lhs = [](int o) { return qbinom_limit_sides(o).first; };
        r.rhs = [](int o) { return qbinom_limit_sides(o).second; };
        R.push_back(r);
    }

    return R;
}

}  // namespace corpus

inline const std::vector<IdentityRecord>& registry() {
    static const std::vector<IdentityRecord> R = corpus::build_registry();
    return R;
}

inline const IdentityRecord& find_identity(const std::string& id) {
    for (const auto& r : registry())
        if (r.id == id) return r;
    throw UnknownIdentity(id);
}

// Runs one identity at the given order. For x-parametric records, a supplied
// x checks that single specialization; otherwise the record is proven by
// sampling degree_bound(order) + 1 distinct rational x values.
inline VerificationReport verify(const std::string& id, int order,
                                 std::optional<Rational> x = std::nullopt) {
    const IdentityRecord& rec = find_identity(id);
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = id;
    rep.order = order;
    auto finish = [&](VerificationReport r) {
        r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
        return r;
    };
    try {
        if (rec.custom) return finish(rec.custom(order));
        auto check_pair = [&](const FormalSeries& l, const FormalSeries& rr) {
            if (auto m = first_mismatch(l, rr, order)) {
                rep.status = "fail";
                rep.mismatch = m;
                return false;
            }
            if (rec.assert_integral && !(l.integer_coefficients() && rr.integer_coefficients()))
                throw Error("integrality assertion failed for " + id);
            return true;
        };
        if (rec.x_parametric) {
            std::vector<Rational> xs;
            if (x)
                xs.push_back(*x);
            else
                xs = sample_points(static_cast<size_t>(rec.degree_bound(order)) + 1);
            for (const auto& xv : xs)
                if (!check_pair(rec.lhs_x(xv, order), rec.rhs_x(xv, order))) return finish(rep);
        } else {
            if (x) throw UnsupportedArgument(id + " is not x-parametric");
            if (!check_pair(rec.lhs(order), rec.rhs(order))) return finish(rep);
        }
        rep.status = "pass";
    } catch (const UnknownIdentity&) {
        throw;
    } catch (const std::exception& e) {
        rep.status = "error";
        rep.error_message = e.what();
    }
    return finish(rep);
}

}  // namespace qrr
