#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qrr/laurent.hpp"
#include "qrr/qfunctions.hpp"
#include "qrr/series.hpp"

namespace qrr {

// Bilateral Appell-Lerch sum
//   sum_{n in Z} s(n) q^{A n^2 + B n} / (1 + q^{D n}),
// with s(n) = (-1)^n when `alternating` is set and 1 otherwise. The corpus
// only uses the a = -1 family, whose denominators 1 + q^{Dn} never vanish;
// the n = 0 term is s(0)/2. Negative indices are rewritten as
//   term(-m) = s(-m) q^{A m^2 - B m + D m} / (1 + q^{D m}),
// multiplying numerator and denominator by q^{D m}, so every materialized
// exponent is non-negative and no Laurent series is needed.
struct AppellLerchSpec {
    long quad;   // A
    long lin;    // B
    long denom;  // D
    bool alternating = false;
};

namespace detail {
// c * q^e / (1 + q^{d}) accumulated into `out`.
inline void add_over_denominator(FormalSeries& out, const Rational& c, long e, long d,
                                 int order) {
    if (e > order) return;
    FormalSeries t = FormalSeries::monomial(c, e, order);
    if (d == 0) {
        if (c != 0) throw SingularTerm(0);
        return;
    }
    if (d <= order) t.times_geometric(-1, d);  // 1/(1+q^d)
    out += t;
}
}  // namespace detail

// Evaluates the bilateral sum, optionally restricted to indices
// n = class_r (mod class_mod) when class_mod > 0.
inline FormalSeries appell_lerch_eval(const AppellLerchSpec& s, int order, long class_mod = 0,
                                      long class_r = 0) {
    if (s.quad <= 0) throw UnsupportedArgument("Appell-Lerch quadratic coefficient must be > 0");
    auto in_class = [&](long n) {
        return class_mod == 0 || ((n % class_mod) + class_mod) % class_mod == class_r;
    };
    auto sign = [&](long n) { return (s.alternating && (n % 2 != 0)) ? Rational(-1) : Rational(1); };
    FormalSeries out(order);
    if (in_class(0)) out.add_term(sign(0) / 2, 0);
    for (long m = 1;; ++m) {
        const long e_pos = s.quad * m * m + s.lin * m;
        const long e_neg = s.quad * m * m - s.lin * m + s.denom * m;
        if (e_pos > order && e_neg > order) break;
        if (in_class(m)) detail::add_over_denominator(out, sign(m), e_pos, s.denom * m, order);
        if (in_class(-m)) detail::add_over_denominator(out, sign(-m), e_neg, s.denom * m, order);
    }
    return out;
}

// One-sided variant sum_{n >= 0} w(n) q^{A n^2 + B n} / (1 + q^{D n}) with a
// per-term rational weight (used for the Fibonacci-weighted corollary).
inline FormalSeries appell_lerch_one_sided(const AppellLerchSpec& s,
                                           const std::function<Rational(long)>& weight,
                                           int order) {
    FormalSeries out(order);
    out.add_term(weight(0) / 2, 0);
    for (long n = 1; s.quad * n * n + s.lin * n <= order; ++n)
        detail::add_over_denominator(out, weight(n), s.quad * n * n + s.lin * n, s.denom * n,
                                     order);
    return out;
}

// Real value of sum e^{2 pi i n / 3} f(n) regrouped by residue class mod 3:
// S0 - (S1 + S2)/2, valid only when S1 = S2 (the imaginary part cancels).
inline FormalSeries cyclotomic_regroup(const FormalSeries& s0, const FormalSeries& s1,
                                       const FormalSeries& s2) {
    const int n = std::min(s1.order(), s2.order());
    if (first_mismatch(s1.truncated(n), s2.truncated(n), n)) throw NonRealSum();
    return s0 - make_rational(1, 2) * (s1 + s2);
}

// Generalized Hecke-type double sum: for each outer n >= 0, the inner index j
// runs over an inclusive range and each (n, j) contributes a list of
// (exponent, coefficient) terms whose total exponents must be >= 0.
// Enumeration stops once min_exponent(n) > order and n > lead_in (the first
// few fronts need not be monotone in n).
struct HeckeSpec {
    std::function<std::pair<long, long>(long)> j_range;
    std::function<std::vector<std::pair<long, Rational>>(long, long)> terms;
    std::function<long(long)> min_exponent;
    long lead_in = 8;
};

inline FormalSeries hecke_eval(const HeckeSpec& spec, int order) {
    FormalSeries out(order);
    for (long n = 0; spec.min_exponent(n) <= order || n <= spec.lead_in; ++n) {
        const auto [jlo, jhi] = spec.j_range(n);
        for (long j = jlo; j <= jhi; ++j) {
            for (const auto& [e, c] : spec.terms(n, j)) {
                if (e < 0) throw NegativeExponentTerm(e);
                out.add_term(c, e);
            }
        }
    }
    return out;
}

// 1/(a; q^b)_n, with the convention that a reciprocal of a negative-length
// symbol is 0 (used where a summand carries 1/(q^2;q^2)_{2n-1} at n = 0).
inline FormalSeries inverse_pochhammer_or_zero(const SignedMonomial& a, long base_power, long n,
                                               int order) {
    if (n < 0) return FormalSeries(order);
    return series_invert(pochhammer_finite(a, base_power, n, order));
}

// Both sides of the Heine-derived transformation
//   sum_{n>=0} q^{n^2 + alpha n} / ((q;q)_n (q;q)_{n+beta})
//     = 1/(q;q)_inf sum_{n>=0} (-1)^n q^{beta n + n(n+1)/2} (q^{alpha-beta};q)_n / (q;q)_n.
// When alpha < beta the factor (q^{alpha-beta};q)_n has negative exponents;
// it vanishes for n > beta - alpha, and every total exponent after the
// q^{beta n + n(n+1)/2} shift is non-negative, so the sum re-materializes as
// an ordinary series (computed through the internal Laurent carrier).
inline std::pair<FormalSeries, FormalSeries> heine_transform_sides(long alpha, long beta,
                                                                  int order) {
    if (alpha < 0 || beta < 0)
        throw UnsupportedArgument("heine transform requires alpha, beta >= 0");
    FormalSeries lhs(order);
    for (long n = 0; n * n + alpha * n <= order; ++n) {
        FormalSeries t =
            series_invert(pochhammer_finite(SignedMonomial(1, 1), 1, n, order) *
                          pochhammer_finite(SignedMonomial(1, 1), 1, n + beta, order));
        t.times_monomial(1, n * n + alpha * n);
        lhs += t;
    }

    detail::Laurent rhs_sum;
    for (long n = 0;; ++n) {
        const long base_e = beta * n + n * (n + 1) / 2;
        if (alpha >= beta) {
            if (base_e > order) break;
        } else if (n > beta - alpha) {
            break;
        }
        // (q^{alpha-beta}; q)_n as a Laurent polynomial
        detail::Laurent poch = detail::Laurent::from_rational(1);
        for (long j = 0; j < n; ++j) {
            const long e = alpha - beta + j;
            detail::Laurent f = detail::Laurent::from_rational(1) -
                                detail::Laurent::monomial(1, e);
            poch = poch * f;
        }
        detail::Laurent t = poch * detail::Laurent::monomial((n % 2 == 0) ? 1 : -1, base_e);
        t = t * detail::Laurent::from_series(
                    series_invert(pochhammer_finite(SignedMonomial(1, 1), 1, n, order)));
        rhs_sum = rhs_sum + t;
    }
    FormalSeries rhs = rhs_sum.to_series(order) *
                       series_invert(pochhammer_infinite(SignedMonomial(1, 1), 1, order));
    return {lhs, rhs};
}

// ---- exact q-binomial identity (polynomial, no truncation) ----

namespace detail {
using IntPoly = std::vector<Integer>;  // coefficient of q^e at index e

inline void ipoly_add(IntPoly& a, const IntPoly& b, long shift = 0) {
    if (b.empty()) return;
    if (a.size() < b.size() + static_cast<size_t>(shift))
        a.resize(b.size() + static_cast<size_t>(shift));
    for (size_t i = 0; i < b.size(); ++i) a[i + static_cast<size_t>(shift)] += b[i];
}

inline IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Full Pascal row m of Gaussian binomials in base q: entries [m choose k],
// k = 0..m, via [m k] = [m-1 k-1] + q^k [m-1 k].
inline std::vector<IntPoly> qbinom_row(long m) {
    std::vector<IntPoly> row{IntPoly{Integer(1)}};
    for (long i = 1; i <= m; ++i) {
        std::vector<IntPoly> next(static_cast<size_t>(i) + 1);
        for (long k = 0; k <= i; ++k) {
            IntPoly e;
            if (k >= 1) ipoly_add(e, row[static_cast<size_t>(k - 1)]);
            if (k <= i - 1) ipoly_add(e, row[static_cast<size_t>(k)], k);
            next[static_cast<size_t>(k)] = std::move(e);
        }
        row = std::move(next);
    }
    return row;
}

inline IntPoly ipoly_stretch(const IntPoly& a, long k) {
    if (a.empty()) return {};
    IntPoly r((a.size() - 1) * static_cast<size_t>(k) + 1);
    for (size_t i = 0; i < a.size(); ++i) r[i * static_cast<size_t>(k)] = a[i];
    return r;
}
}  // namespace detail

struct PolyCheckReport {
    bool passed = true;
    long failed_exponent = -1;
};

// Exact check of
//   sum_{j=-n-1}^{n} q^{2j^2+j} [2n+1 choose n-j]^2_{q^2}
//     = (1 + q^{2n+1}) [4n+1 choose 2n]_q
// as integer polynomials. The symmetry [2n+1 choose n-j] = [2n+1 choose n+j+1]
// pairs j with -j-1, so squares are computed once per j >= 0 and added at the
// two offsets 2j^2+j and 2j^2+3j+1.
inline PolyCheckReport qbinom_identity_check(long n) {
    using namespace detail;
    const auto row_small = qbinom_row(2 * n + 1);
    IntPoly lhs;
    for (long j = 0; j <= n; ++j) {
        IntPoly b = ipoly_stretch(row_small[static_cast<size_t>(n - j)], 2);
        IntPoly sq = ipoly_mul(b, b);
        ipoly_add(lhs, sq, 2 * j * j + j);          // index j
        ipoly_add(lhs, sq, 2 * j * j + 3 * j + 1);  // index -j-1
    }
    const auto row_big = qbinom_row(4 * n + 1);
    IntPoly rhs;
    ipoly_add(rhs, row_big[static_cast<size_t>(2 * n)]);
    ipoly_add(rhs, row_big[static_cast<size_t>(2 * n)], 2 * n + 1);
    const size_t top = std::max(lhs.size(), rhs.size());
    lhs.resize(top);
    rhs.resize(top);
    for (size_t e = 0; e < top; ++e)
        if (lhs[e] != rhs[e]) return PolyCheckReport{false, static_cast<long>(e)};
    return PolyCheckReport{};
}

// The n -> infinity limit of the identity above, at truncation order:
// theta sum sum_{j in Z} q^{2j^2+j} against the product (-q,-q^3,q^4;q^4)_inf.
inline std::pair<FormalSeries, FormalSeries> qbinom_limit_sides(int order) {
    FormalSeries lhs(order);
    for (long j = -(order + 2); j <= order + 2; ++j) {
        const long e = 2 * j * j + j;
        if (e <= order) lhs.add_term(1, e);
    }
    FormalSeries rhs = pochhammer_infinite(SignedMonomial(-1, 1), 4, order) *
                       pochhammer_infinite(SignedMonomial(-1, 3), 4, order) *
                       pochhammer_infinite(SignedMonomial(1, 4), 4, order);
    return {lhs, rhs};
}

}  // namespace qrr
