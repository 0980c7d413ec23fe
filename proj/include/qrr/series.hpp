#pragma once

#include <gmpxx.h>

#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrr/errors.hpp"

namespace qrr {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rational_str(const Rational& r) { return r.get_str(); }

// Truncated formal power series in q with exact rational coefficients.
// coeffs()[e] is the coefficient of q^e, for 0 <= e <= order. Binary
// operations propagate the minimum of the two orders; coefficients are
// never fabricated past what both operands can vouch for.
class FormalSeries {
public:
    explicit FormalSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) {
        assert(order >= 0);
    }

    explicit FormalSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        assert(!coeffs_.empty());
    }

    static FormalSeries constant(const Rational& c, int order) {
        FormalSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    static FormalSeries one(int order) { return constant(1, order); }

    // c * q^exponent. An exponent above the order simply truncates to zero.
    static FormalSeries monomial(const Rational& c, long exponent, int order) {
        if (exponent < 0) throw NegativeExponentTerm(exponent);
        FormalSeries s(order);
        if (exponent <= order) s.coeffs_[static_cast<size_t>(exponent)] = c;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& operator[](int e) const {
        assert(e >= 0 && e <= order());
        return coeffs_[static_cast<size_t>(e)];
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool integer_coefficients() const {
        for (const auto& c : coeffs_)
            if (c.get_den() != 1) return false;
        return true;
    }

    // A copy truncated (or the same series) at the given order; never extends.
    FormalSeries truncated(int order) const {
        assert(order >= 0 && order <= this->order());
        std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + order + 1);
        return FormalSeries(std::move(c));
    }

    FormalSeries& operator+=(const FormalSeries& rhs);
    FormalSeries& operator-=(const FormalSeries& rhs);
    FormalSeries& operator*=(const Rational& c);

    friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
    friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
    friend FormalSeries operator*(FormalSeries a, const Rational& c) { return a *= c; }
    friend FormalSeries operator*(const Rational& c, FormalSeries a) { return a *= c; }

    friend FormalSeries operator-(FormalSeries a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);

    // In-place multiply by (1 + c*q^e), e >= 1. O(order).
    FormalSeries& times_binomial(const Rational& c, long e);
    // In-place multiply by 1/(1 - c*q^e), e >= 1. O(order).
    FormalSeries& times_geometric(const Rational& c, long e);
    // In-place multiply by c*q^e (shift), e >= 0.
    FormalSeries& times_monomial(const Rational& c, long e);

    // Add c*q^e in place; silently drops exponents above the order.
    void add_term(const Rational& c, long e) {
        if (e < 0) throw NegativeExponentTerm(e);
        if (e <= order()) coeffs_[static_cast<size_t>(e)] += c;
    }

private:
    std::vector<Rational> coeffs_;
};

inline FormalSeries& FormalSeries::operator+=(const FormalSeries& rhs) {
    if (rhs.order() < order()) coeffs_.resize(static_cast<size_t>(rhs.order()) + 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

inline FormalSeries& FormalSeries::operator-=(const FormalSeries& rhs) {
    if (rhs.order() < order()) coeffs_.resize(static_cast<size_t>(rhs.order()) + 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

inline FormalSeries& FormalSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

inline FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    const int n = std::min(a.order(), b.order());
    FormalSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j + i <= n; ++j) {
            if (b[j] != 0) r.coeffs_[static_cast<size_t>(i + j)] += a[i] * b[j];
        }
    }
    return r;
}

inline FormalSeries& FormalSeries::times_binomial(const Rational& c, long e) {
    assert(e >= 1);
    for (long i = order(); i >= e; --i)
        coeffs_[static_cast<size_t>(i)] += c * coeffs_[static_cast<size_t>(i - e)];
    return *this;
}

inline FormalSeries& FormalSeries::times_geometric(const Rational& c, long e) {
    assert(e >= 1);
    for (long i = e; i <= order(); ++i)
        coeffs_[static_cast<size_t>(i)] += c * coeffs_[static_cast<size_t>(i - e)];
    return *this;
}

inline FormalSeries& FormalSeries::times_monomial(const Rational& c, long e) {
    if (e < 0) throw NegativeExponentTerm(e);
    for (long i = order(); i >= 0; --i) {
        Rational v = (i >= e) ? Rational(c * coeffs_[static_cast<size_t>(i - e)]) : Rational(0);
        coeffs_[static_cast<size_t>(i)] = v;
    }
    return *this;
}

inline FormalSeries series_add(const FormalSeries& a, const FormalSeries& b) { return a + b; }
inline FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b) { return a * b; }

inline FormalSeries series_invert(const FormalSeries& a) {
    if (a[0] == 0) throw NonUnitSeries();
    const int n = a.order();
    FormalSeries r(n);
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    c[0] = 1 / Rational(a[0]);
    for (int i = 1; i <= n; ++i) {
        Rational s(0);
        for (int k = 1; k <= i; ++k)
            if (a[k] != 0) s += a[k] * c[static_cast<size_t>(i - k)];
        c[static_cast<size_t>(i)] = -s / a[0];
    }
    return FormalSeries(std::move(c));
}

// a(q^k) truncated at a.order; source coefficients beyond order/k are dropped.
inline FormalSeries substitute_power(const FormalSeries& a, long k) {
    assert(k >= 1);
    FormalSeries r(a.order());
    for (long e = 0; e * k <= a.order(); ++e) r.add_term(a[static_cast<int>(e)], e * k);
    return r;
}

// a(-q): negate coefficients at odd exponents.
inline FormalSeries substitute_negate(const FormalSeries& a) {
    std::vector<Rational> c = a.coeffs();
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return FormalSeries(std::move(c));
}

struct Mismatch {
    int exponent;
    Rational lhs, rhs;
};

// First exponent in 0..n where the coefficients differ, if any.
inline std::optional<Mismatch> first_mismatch(const FormalSeries& a, const FormalSeries& b, int n) {
    if (n > a.order()) throw OrderTooLarge(n, a.order());
    if (n > b.order()) throw OrderTooLarge(n, b.order());
    for (int e = 0; e <= n; ++e)
        if (a[e] != b[e]) return Mismatch{e, a[e], b[e]};
    return std::nullopt;
}

inline bool equal_to_order(const FormalSeries& a, const FormalSeries& b, int n) {
    return !first_mismatch(a, b, n).has_value();
}

}  // namespace qrr
