#pragma once

/*
 * Exact arithmetic for Sturmian slopes.
 *
 * Quad holds (a + b*sqrt(d))/c with integer components; comparisons and
 * floors are decided by sign analysis over 128-bit products, never floating
 * point. Rat is a small exact rational used for convergent intervals.
 */

#include <cmath>
#include <numeric>

#include "wbound/base.hpp"

namespace wbound {

using i128 = __int128;

inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline i128 isqrt128(i128 x) {
    if (x < 0) throw error("isqrt of negative");
    if (x == 0) return 0;
    i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

/// sign(a + b*sqrt(d)) for squarefree d > 1 (so b != 0 gives an irrational).
inline int sign_a_plus_b_sqrt(i64 a, i64 b, i64 d) {
    if (b == 0) return a > 0 ? 1 : (a < 0 ? -1 : 0);
    if (a == 0) return b > 0 ? 1 : -1;
    if (a > 0 && b > 0) return 1;
    if (a < 0 && b < 0) return -1;
    i128 aa = static_cast<i128>(a) * a;
    i128 bbd = static_cast<i128>(b) * b * d;
    if (aa == bbd) throw error("quadratic: d must be squarefree and > 1");
    // the term with the larger square dominates
    return aa > bbd ? (a > 0 ? 1 : -1) : (b > 0 ? 1 : -1);
}

struct Quad {
    i64 a = 0, b = 0, c = 1;  // (a + b sqrt(d)) / c, c > 0
    i64 d = 2;

    Quad() = default;
    Quad(i64 a_, i64 b_, i64 c_, i64 d_) : a(a_), b(b_), c(c_), d(d_) {
        require(c != 0, "quadratic: zero denominator");
        require(d > 1, "quadratic: need d > 1");
        if (c < 0) { a = -a; b = -b; c = -c; }
        normalize();
    }
    static Quad integer(i64 n, i64 d_) { return Quad(n, 0, 1, d_); }

    void normalize() {
        i64 g = std::gcd(std::gcd(std::abs(a), std::abs(b)), c);
        if (g > 1) { a /= g; b /= g; c /= g; }
    }

    Quad operator+(const Quad& o) const {
        check_same_root(o);
        return Quad(a * o.c + o.a * c, b * o.c + o.b * c, c * o.c, d);
    }
    Quad operator-(const Quad& o) const {
        check_same_root(o);
        return Quad(a * o.c - o.a * c, b * o.c - o.b * c, c * o.c, d);
    }
    Quad operator*(i64 n) const { return Quad(a * n, b * n, c, d); }
    Quad operator-() const { return Quad(-a, -b, c, d); }

    Quad operator*(const Quad& o) const {
        check_same_root(o);
        return Quad(a * o.a + b * o.b * d, a * o.b + b * o.a, c * o.c, d);
    }
    Quad reciprocal() const {
        // c / (a + b sqrt(d)) = c (a - b sqrt(d)) / (a^2 - b^2 d)
        i128 den = static_cast<i128>(a) * a - static_cast<i128>(b) * b * d;
        require(den != 0, "quadratic: reciprocal of zero");
        i64 den64 = static_cast<i64>(den);
        require(static_cast<i128>(den64) == den, "quadratic: overflow in reciprocal");
        return Quad(a * c, -b * c, den64, d);  // constructor fixes a negative denominator
    }

    int sign() const { return sign_a_plus_b_sqrt(a, b, d); }
    int compare(const Quad& o) const { return (*this - o).sign(); }
    bool operator<(const Quad& o) const { return compare(o) < 0; }
    bool operator==(const Quad& o) const { return compare(o) == 0; }

    i64 floor() const {
        if (b == 0) return floor_div(a, c);
        i128 s = isqrt128(static_cast<i128>(b) * b * d);
        i64 lo;  // a + b sqrt(d) lies strictly in (lo, lo + 1)
        if (b > 0) lo = a + static_cast<i64>(s);
        else lo = a - static_cast<i64>(s) - 1;
        return floor_div(lo, c);
    }
    Quad frac() const { return *this - Quad::integer(floor(), d); }

private:
    void check_same_root(const Quad& o) const {
        require(d == o.d, "quadratic: mixed roots");
    }
};

// ---------------------------------------------------------------------------

struct Rat {
    i64 num = 0, den = 1;

    Rat() = default;
    Rat(i64 n, i64 d) : num(n), den(d) {
        require(d != 0, "rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i64 g = std::gcd(std::abs(num), den);
        if (g > 1) { num /= g; den /= g; }
    }
    static Rat integer(i64 n) { return Rat(n, 1); }

    int compare(const Rat& o) const {
        i128 l = static_cast<i128>(num) * o.den;
        i128 r = static_cast<i128>(o.num) * den;
        return l < r ? -1 : (l > r ? 1 : 0);
    }
    bool operator<(const Rat& o) const { return compare(o) < 0; }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }

    Rat operator*(i64 k) const { return Rat(num * k, den); }
    Rat operator-(const Rat& o) const {
        return Rat(num * o.den - o.num * den, den * o.den);
    }
    i64 floor() const { return floor_div(num, den); }
};

}  // namespace wbound
