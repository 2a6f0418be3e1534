#pragma once

// Small exact rationals on __int128 and 2x2 rational matrices; used for the
// Bruhat factorization check and representative-change bookkeeping.

#include <stdexcept>
#include <string>

#include "cuspcoeff/arith.hpp"

namespace cuspcoeff {

inline i128 gcd_i128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Rat {
    i128 num = 0;
    i128 den = 1;

    Rat() = default;
    Rat(i128 n) : num(n), den(1) {}
    Rat(i128 n, i128 d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) {
            den = -den;
            num = -num;
        }
        i128 g = gcd_i128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    Rat operator+(const Rat& o) const {
        return Rat(num * o.den + o.num * den, den * o.den);
    }
    Rat operator-(const Rat& o) const {
        return Rat(num * o.den - o.num * den, den * o.den);
    }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
    Rat operator/(const Rat& o) const { return Rat(num * o.den, den * o.num); }
    bool operator==(const Rat& o) const {
        return num == o.num && den == o.den;
    }
    bool is_integer() const { return den == 1; }
    double to_double() const { return (double)num / (double)den; }
    std::string str() const {
        auto s128 = [](i128 v) {
            if (v == 0) return std::string("0");
            bool neg = v < 0;
            if (neg) v = -v;
            std::string s;
            while (v) {
                s += char('0' + (int)(v % 10));
                v /= 10;
            }
            if (neg) s += '-';
            return std::string(s.rbegin(), s.rend());
        };
        return den == 1 ? s128(num) : s128(num) + "/" + s128(den);
    }
};

struct RatMat2 {
    Rat a, b, c, d;  // [[a, b], [c, d]]

    RatMat2 operator*(const RatMat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                c * o.b + d * o.d};
    }
    bool operator==(const RatMat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

}  // namespace cuspcoeff
