#pragma once

#include <unordered_map>
#include <vector>

#include "qrr/series.hpp"

namespace qrr {

// Chebyshev polynomials of the third kind at an exact rational argument:
//   V_0 = 1,  V_1 = 2x - 1,  V_n = 2x V_{n-1} - V_{n-2},  V_n = 0 for n < 0.
inline Rational cheb_v(const Rational& x, long n) {
    if (n < 0) return Rational(0);
    Rational prev(1);
    Rational cur = 2 * x - 1;
    if (n == 0) return prev;
    for (long i = 1; i < n; ++i) {
        Rational next = 2 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// v_n(x) = V_n(x) + V_{n-1}(x); equals 2 T_n(x) for n >= 1, and 1 at n = 0.
inline Rational cheb_v_plus_prev(const Rational& x, long n) {
    return cheb_v(x, n) + cheb_v(x, n - 1);
}

// First kind, for property tests: T_0 = 1, T_1 = x, T_n = 2x T_{n-1} - T_{n-2}.
inline Rational cheb_t(const Rational& x, long n) {
    if (n < 0) n = -n;
    Rational prev(1);
    Rational cur = x;
    if (n == 0) return prev;
    for (long i = 1; i < n; ++i) {
        Rational next = 2 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

inline Integer fibonacci(long n) {
    if (n < 0) throw UnsupportedArgument("fibonacci index must be non-negative");
    Integer a(0), b(1);
    for (long i = 0; i < n; ++i) {
        Integer t = a + b;
        a = b;
        b = t;
    }
    return a;
}

inline Integer lucas(long n) {
    if (n < 0) throw UnsupportedArgument("lucas index must be non-negative");
    Integer a(2), b(1);
    for (long i = 0; i < n; ++i) {
        Integer t = a + b;
        a = b;
        b = t;
    }
    return a;
}

// Closed-form V_n(x) for the seven tabulated arguments, by residue-class
// lookup (and Fibonacci/Lucas at x = ±3/2):
//   V_n(1) = 1                     V_n(-1) = (-1)^n (2n+1)
//   V_n(0) = 1,-1,-1,1 cyc. 4      V_n(1/2): period 6 -> 1,0,-1,-1,0,1
//   V_n(-1/2): period 3 -> 1,-2,1  V_n(3/2) = F_{2n+1}   V_n(-3/2) = (-1)^n L_{2n+1}
inline Rational cheb_special(const Rational& x_tag, long n) {
    if (n < 0) throw UnsupportedArgument("cheb_special requires n >= 0");
    if (x_tag == 1) return Rational(1);
    if (x_tag == -1) {
        Rational v(2 * n + 1);
        return (n % 2 == 0) ? v : -v;
    }
    if (x_tag == 0) {
        static const int tab[4] = {1, -1, -1, 1};
        return Rational(tab[n % 4]);
    }
    if (x_tag == make_rational(1, 2)) {
        static const int tab[6] = {1, 0, -1, -1, 0, 1};
        return Rational(tab[n % 6]);
    }
    if (x_tag == make_rational(-1, 2)) {
        static const int tab[3] = {1, -2, 1};
        return Rational(tab[n % 3]);
    }
    if (x_tag == make_rational(3, 2)) return Rational(fibonacci(2 * n + 1));
    if (x_tag == make_rational(-3, 2)) {
        Rational v(lucas(2 * n + 1));
        return (n % 2 == 0) ? v : -v;
    }
    throw UnsupportedArgument("cheb_special: x must be one of -1, -1/2, 0, 1/2, 1, 3/2, -3/2");
}

// Memoizing wrapper for inner loops that hit V_0..V_max repeatedly.
// Not thread-safe; use one evaluator per thread (cheb_v itself is stateless).
class ChebyshevEvaluator {
public:
    explicit ChebyshevEvaluator(Rational x) : x_(std::move(x)) { cache_.push_back(Rational(1)); }

    const Rational& x() const { return x_; }

    Rational v(long n) {
        if (n < 0) return Rational(0);
        while (static_cast<long>(cache_.size()) <= n) {
            const size_t m = cache_.size();
            if (m == 1)
                cache_.push_back(2 * x_ - 1);
            else
                cache_.push_back(2 * x_ * cache_[m - 1] - cache_[m - 2]);
        }
        return cache_[static_cast<size_t>(n)];
    }

    Rational v_plus_prev(long n) { return v(n) + v(n - 1); }

private:
    Rational x_;
    std::vector<Rational> cache_;
};

}  // namespace qrr
