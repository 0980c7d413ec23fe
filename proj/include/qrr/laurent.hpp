#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "qrr/series.hpp"

namespace qrr::detail {

// Internal carrier for term algebra with transiently negative q-exponents
// (q^{-j^2} style factors before recombination). Never part of the public
// surface: a Laurent value must be converted back to a FormalSeries, which
// asserts that no negative exponent survived.
//
// `valid` is the largest exponent whose coefficient is trustworthy. Exact
// polynomials carry valid = kExact; truncated data (inverses, infinite
// products) carries the evaluation order. Multiplication propagates
// validity so that truncation never silently corrupts low-order terms
// after a downward shift.
class Laurent {
public:
    static constexpr long kExact = std::numeric_limits<long>::max() / 4;

    Laurent() : off_(0), valid_(kExact) {}  // zero

    Laurent(long off, std::vector<Rational> coeffs, long valid)
        : off_(off), c_(std::move(coeffs)), valid_(valid) {
        normalize();
    }

    static Laurent from_rational(const Rational& r) {
        if (r == 0) return Laurent();
        return Laurent(0, {r}, kExact);
    }

    static Laurent monomial(const Rational& coeff, long exponent) {
        if (coeff == 0) return Laurent();
        return Laurent(exponent, {coeff}, kExact);
    }

    static Laurent from_series(const FormalSeries& s) {
        return Laurent(0, s.coeffs(), s.order());
    }

    bool is_zero() const { return c_.empty(); }
    long min_exponent() const { return off_; }  // meaningful only if !is_zero()
    long max_exponent() const { return off_ + static_cast<long>(c_.size()) - 1; }
    long valid_order() const { return valid_; }

    Rational coeff(long e) const {
        if (is_zero() || e < off_ || e > max_exponent()) return Rational(0);
        return c_[static_cast<size_t>(e - off_)];
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        if (a.is_zero()) return b.clamped(std::min(a.valid_, b.valid_));
        if (b.is_zero()) return a.clamped(std::min(a.valid_, b.valid_));
        const long off = std::min(a.off_, b.off_);
        const long top = std::max(a.max_exponent(), b.max_exponent());
        std::vector<Rational> c(static_cast<size_t>(top - off) + 1);
        for (long e = off; e <= top; ++e)
            c[static_cast<size_t>(e - off)] = a.coeff(e) + b.coeff(e);
        return Laurent(off, std::move(c), std::min(a.valid_, b.valid_));
    }

    friend Laurent operator-(Laurent a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-Laurent(b)); }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero())
            return Laurent().clamped(std::min(a.valid_, b.valid_));
        long valid = std::min(sat_add(a.valid_, b.off_), sat_add(b.valid_, a.off_));
        const long off = a.off_ + b.off_;
        const long top = std::min(a.max_exponent() + b.max_exponent(), valid);
        if (top < off) return Laurent().clamped(valid);
        std::vector<Rational> c(static_cast<size_t>(top - off) + 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            const long ea = a.off_ + static_cast<long>(i);
            for (size_t j = 0; j < b.c_.size(); ++j) {
                const long e = ea + b.off_ + static_cast<long>(j);
                if (e > top) break;
                if (b.c_[j] != 0) c[static_cast<size_t>(e - off)] += a.c_[i] * b.c_[j];
            }
        }
        return Laurent(off, std::move(c), valid);
    }

    Laurent scaled(const Rational& r) const {
        if (r == 0) return Laurent().clamped(valid_);
        Laurent out = *this;
        for (auto& x : out.c_) x *= r;
        return out;
    }

    // Inverse, truncated so that exponents up to `order` are valid.
    // Factors out q^{min_exponent}; the remaining unit series is inverted.
    Laurent inverted(long order) const {
        if (is_zero()) throw NonUnitSeries();
        // an exact monomial inverts exactly; a truncated one loses 2*off of
        // validity (unknown tail terms enter the inverse at exponent
        // >= valid+1-2*off)
        if (c_.size() == 1)
            return Laurent(-off_, {1 / c_[0]},
                           valid_ >= kExact ? kExact : valid_ - 2 * off_);
        const long m = off_;
        // Unit part u with u[0] != 0. An exact polynomial is known to every
        // degree (coefficients past its size are exactly zero); truncated data
        // is known to valid_ - m. Inverse exponent e corresponds to unit-series
        // degree e + m, so compute to degree order + |m|.
        const long known = (valid_ >= kExact) ? kExact : valid_ - m;
        const long deg = std::min(known, order + std::abs(m));
        if (c_[0] == 0) throw NonUnitSeries();
        std::vector<Rational> inv(static_cast<size_t>(std::max(0L, deg)) + 1);
        inv[0] = 1 / c_[0];
        for (long i = 1; i <= deg; ++i) {
            Rational s(0);
            for (long k = 1; k <= i && k < static_cast<long>(c_.size()); ++k)
                if (c_[static_cast<size_t>(k)] != 0)
                    s += c_[static_cast<size_t>(k)] * inv[static_cast<size_t>(i - k)];
            inv[static_cast<size_t>(i)] = -s / c_[0];
        }
        return Laurent(-m, std::move(inv), deg - m);
    }

    // Lowers the validity bound (and drops coefficients above it). Used by
    // the DSL evaluator to keep intermediate polynomials from growing far
    // past the truncation order once no further downshift can occur.
    Laurent with_valid(long v) const { return clamped(std::min(valid_, v)); }

    // Integer power; negative exponents go through inverted().
    Laurent powed(long k, long order) const {
        if (k < 0) return inverted(order).powed(-k, order);
        Laurent r = from_rational(1);
        r.valid_ = kExact;
        Laurent base = *this;
        for (long i = 0; i < k; ++i) r = r * base;
        return r;
    }

    // Back to the public series type; throws if a negative exponent survives
    // or the value is not accurate far enough.
    FormalSeries to_series(int order) const {
        if (!is_zero() && off_ < 0) throw NegativeExponentTerm(off_);
        if (valid_ < order)
            throw Error("internal: Laurent value valid only to order " +
                        std::to_string(valid_) + ", need " + std::to_string(order));
        FormalSeries s(order);
        for (long e = std::max(0L, off_); e <= std::min<long>(order, max_exponent()); ++e)
            s.add_term(coeff(e), e);
        return s;
    }

private:
    long off_;
    std::vector<Rational> c_;
    long valid_;

    Laurent clamped(long valid) const {
        Laurent out = *this;
        out.valid_ = valid;
        out.normalize();
        return out;
    }

    static long sat_add(long a, long b) {
        if (a >= kExact && b >= 0) return kExact;
        if (a >= kExact) return std::max(a + b, kExact / 2);
        return a + b;
    }

    void normalize() {
        // trim leading/trailing zero coefficients and anything past `valid`
        size_t lo = 0;
        while (lo < c_.size() && c_[lo] == 0) ++lo;
        if (lo == c_.size()) {
            c_.clear();
            off_ = 0;
            return;
        }
        size_t hi = c_.size();
        while (hi > lo && c_[hi - 1] == 0) --hi;
        const long top = off_ + static_cast<long>(hi) - 1;
        if (top > valid_) hi -= static_cast<size_t>(top - valid_);
        if (hi <= lo) {
            c_.clear();
            off_ = 0;
            return;
        }
        if (lo > 0 || hi < c_.size()) {
            std::vector<Rational> t(c_.begin() + static_cast<long>(lo),
                                    c_.begin() + static_cast<long>(hi));
            c_ = std::move(t);
            off_ += static_cast<long>(lo);
        }
    }
};

}  // namespace qrr::detail
