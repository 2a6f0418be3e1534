#include "doctest.h"

#include "cuspcoeff/arith.hpp"

using namespace cuspcoeff;

TEST_CASE("factor: small table") {
    CHECK(factor(1).factors.empty());
    auto f12 = factor(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == std::pair<i64, int>{2, 2});
    CHECK(f12.factors[1] == std::pair<i64, int>{3, 1});
}

TEST_CASE("factor: 2^40 + 1 recomposes and has prime factors") {
    i64 n = (1LL << 40) + 1;
    auto f = factor(n);
    i64 prod = 1;
    for (auto [p, e] : f.factors) {
        CHECK(is_prime((u64)p));
        for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
    // 2^40 + 1 = 257 * 4278255361; both prime.
    CHECK(f.factors.size() == 2);
}

TEST_CASE("factor: recompose for all n <= 10^4") {
    for (i64 n = 1; n <= 10000; ++n) {
        auto f = factor(n);
        i64 prod = 1;
        i64 last = 1;
        for (auto [p, e] : f.factors) {
            CHECK(p > last);
            last = p;
            CHECK(e >= 1);
            for (int i = 0; i < e; ++i) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("vp") {
    CHECK(vp(12, 2) == 2);
    CHECK(vp(12, 5) == 0);
    // oracle: repeated division
    i64 n = -96, p = 2, e = 0, m = 96;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    CHECK(vp(n, 2) == e);
    CHECK(vp(-96, 2) == 5);
    CHECK_THROWS_AS(vp(0, 2), std::domain_error);
}

TEST_CASE("coprime_part") {
    auto s = coprime_part(45, 12);
    CHECK(s.n0 == 5);
    CHECK(s.n1 == 9);
    s = coprime_part(7, 12);
    CHECK(s.n0 == 7);
    CHECK(s.n1 == 1);
    s = coprime_part(12, 12);
    CHECK(s.n0 == 1);
    CHECK(s.n1 == 12);
    for (i64 n = 1; n <= 500; ++n) {
        auto t = coprime_part(n, 60);
        CHECK(t.n0 * t.n1 == n);
        CHECK(gcd_i64(t.n0, 60) == 1);
        // n1 | 60^inf
        i64 m = t.n1;
        for (i64 p : {2, 3, 5})
            while (m % p == 0) m /= p;
        CHECK(m == 1);
    }
}

TEST_CASE("egcd and modular inverse") {
    for (i64 a = -30; a <= 30; ++a) {
        for (i64 b = -30; b <= 30; ++b) {
            auto e = egcd(a, b);
            CHECK(e.g == gcd_i64(a, b));
            CHECK(a * e.x + b * e.y == e.g);
        }
    }
    CHECK(mod_inverse(3, 11) == 4);
    CHECK_THROWS_AS(mod_inverse(4, 12), std::domain_error);
}

TEST_CASE("crt") {
    auto [x, l] = crt(2, 3, 3, 5);
    CHECK(l == 15);
    CHECK(x % 3 == 2);
    CHECK(x % 5 == 3);
    auto [y, l2] = crt(1, 4, 3, 6);
    CHECK(l2 == 12);
    CHECK(y % 4 == 1);
    CHECK(y % 6 == 3);
    CHECK_THROWS_AS(crt(1, 4, 2, 6), std::domain_error);
}

TEST_CASE("RootOfUnity arithmetic is exact") {
    RootOfUnity a(1, 3), b(1, 4);
    auto c = a * b;  // e(7/12)
    CHECK(c.num() == 7);
    CHECK(c.den() == 12);
    CHECK((c * c.inverse()).is_one());
    CHECK(a.pow(3).is_one());
    CHECK(RootOfUnity(5, 10) == RootOfUnity(1, 2));
    CHECK(RootOfUnity(-1, 4) == RootOfUnity(3, 4));
    // complex values agree with exp(2 pi i x)
    auto z = RootOfUnity(2, 7).value();
    CHECK(std::abs(z - std::polar(1.0, 2 * M_PI * 2.0 / 7.0)) < 1e-15);
}

TEST_CASE("divisors and phi") {
    CHECK(divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(12) == 4);
}
