#pragma once

// Z[omega], omega = e(1/3): exact carrier for newform coefficients. Rational
// integer coefficient sets use b = 0; the level-9 forms live in Z[zeta_6] =
// Z[omega]. 128-bit coordinates cover tau(n) up to n = 10^4.

#include <optional>
#include <string>

#include "cuspcoeff/arith.hpp"

namespace cuspcoeff {

struct EisensteinInt {
    i128 a = 0, b = 0;  // a + b*omega, omega^2 = -1 - omega

    EisensteinInt() = default;
    EisensteinInt(i128 a_, i128 b_ = 0) : a(a_), b(b_) {}

    static EisensteinInt zeta6_power(int k);  // (1 + omega)^k, k mod 6

    EisensteinInt operator+(const EisensteinInt& o) const {
        return {a + o.a, b + o.b};
    }
    EisensteinInt operator-(const EisensteinInt& o) const {
        return {a - o.a, b - o.b};
    }
    EisensteinInt operator-() const { return {-a, -b}; }
    EisensteinInt operator*(const EisensteinInt& o) const {
        // (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2, w^2 = -1 - w
        return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
    }
    bool operator==(const EisensteinInt& o) const {
        return a == o.a && b == o.b;
    }
    bool is_zero() const { return a == 0 && b == 0; }

    EisensteinInt conj() const { return {a - b, -b}; }
    i128 norm() const { return a * a - a * b + b * b; }

    // Exact quotient in Z[omega] when divisible.
    std::optional<EisensteinInt> divide_exact(const EisensteinInt& d) const;

    cplx value() const {
        return cplx((double)a - 0.5 * (double)b,
                    0.8660254037844386467637231707529362 * (double)b);
    }
    std::string str() const;
};

std::string i128_str(i128 v);
i128 i128_parse(const std::string& s);

}  // namespace cuspcoeff
