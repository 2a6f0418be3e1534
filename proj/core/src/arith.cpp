#include "cuspcoeff/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cuspcoeff {

i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

i64 lcm_i64(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_i64(a, b) * b;
}

i64 lcm3_i64(i64 a, i64 b, i64 c) { return lcm_i64(a, lcm_i64(b, c)); }

Egcd egcd(i64 a, i64 b) {
    i64 old_r = a, r = b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

i64 mod_norm(i64 a, i64 m) {
    if (m <= 0) throw std::domain_error("mod_norm: modulus must be positive");
    a %= m;
    return a < 0 ? a + m : a;
}

i64 mod_mul(i64 a, i64 b, i64 m) {
    return (i64)((i128)mod_norm(a, m) * mod_norm(b, m) % m);
}

i64 mod_pow(i64 a, i64 e, i64 m) {
    if (e < 0) return mod_pow(mod_inverse(a, m), -e, m);
    i64 r = mod_norm(1, m), base = mod_norm(a, m);
    while (e > 0) {
        if (e & 1) r = mod_mul(r, base, m);
        base = mod_mul(base, base, m);
        e >>= 1;
    }
    return r;
}

i64 mod_inverse(i64 a, i64 m) {
    Egcd e = egcd(mod_norm(a, m), m);
    if (e.g != 1)
        throw std::domain_error("mod_inverse: " + std::to_string(a) +
                                " not invertible mod " + std::to_string(m));
    return mod_norm(e.x, m);
}

std::pair<i64, i64> crt(i64 r1, i64 m1, i64 r2, i64 m2) {
    i64 g = gcd_i64(m1, m2);
    if (mod_norm(r1 - r2, g) != 0)
        throw std::domain_error("crt: incompatible congruences");
    i64 l = lcm_i64(m1, m2);
    // x = r1 + m1 * t with m1 * t = r2 - r1 (mod m2)
    i64 m1g = m1 / g, m2g = m2 / g;
    i64 t = mod_mul((r2 - r1) / g, mod_inverse(m1g, m2g), m2g);
    i64 x = mod_norm(r1 + (i64)((i128)m1 * t % l), l);
    return {x, l};
}

namespace {

u64 mul_mod_u64(u64 a, u64 b, u64 m) {
    return (u64)((unsigned __int128)a * b % m);
}

u64 pow_mod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod_u64(r, a, m);
        a = mul_mod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_brent(u64 n) {
    // Brent's cycle variant; n must be odd composite, not a prime power issue
    // here since we retry with shifted polynomials until a factor splits.
    if (n % 2 == 0) return 2;
    u64 c = 1;
    while (true) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int lam = 1;
        auto f = [&](u64 v) { return (mul_mod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; ++i) y = f(y);
            int k = 0;
            while (k < lam && d == 1) {
                u64 ys = y;
                int lim = std::min(128, lam - k);
                for (int i = 0; i < lim; ++i) {
                    y = f(y);
                    u64 diff = x > y ? x - y : y - x;
                    q = mul_mod_u64(q, diff == 0 ? 1 : diff, n);
                }
                d = std::gcd(q, n);
                if (d == n) {
                    // backtrack one step at a time
                    d = 1;
                    do {
                        ys = f(ys);
                        u64 diff = x > ys ? x - ys : ys - x;
                        d = std::gcd(diff == 0 ? n : diff, n);
                    } while (d == 1);
                    break;
                }
                k += lim;
            }
            lam *= 2;
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_rec(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

int Factored::exponent_of(i64 p) const {
    for (const auto& [q, e] : factors)
        if (q == p) return e;
    return 0;
}

std::string Factored::str() const {
    if (factors.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " * ";
        s += std::to_string(factors[i].first);
        if (factors[i].second > 1)
            s += "^" + std::to_string(factors[i].second);
    }
    return s;
}

Factored factor(i64 n) {
    if (n < 1) throw std::domain_error("factor: input must be >= 1");
    Factored out;
    out.value = n;
    u64 m = (u64)n;
    std::vector<u64> primes;
    for (u64 p = 2; p * p <= m && p < 20000; ++p) {
        while (m % p == 0) {
            primes.push_back(p);
            m /= p;
        }
    }
    factor_rec(m, primes);
    std::sort(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size();) {
        size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.factors.emplace_back((i64)primes[i], (int)(j - i));
        i = j;
    }
    return out;
}

int vp(i64 n, i64 p) {
    if (n == 0) throw std::domain_error("vp: zero input rejected");
    if (p < 2) throw std::domain_error("vp: p must be a prime >= 2");
    if (n < 0) n = -n;
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

CoprimeSplit coprime_part(i64 n, i64 N) {
    if (n < 1) throw std::domain_error("coprime_part: n must be >= 1");
    i64 n0 = n, n1 = 1;
    for (i64 g = gcd_i64(n0, N); g > 1; g = gcd_i64(n0, N)) {
        n0 /= g;
        n1 *= g;
    }
    return {n0, n1};
}

i64 p_part(i64 n, i64 p) { return checked_pow(p, vp(n, p)); }

i64 euler_phi(i64 n) {
    Factored f = factor(n);
    i64 r = 1;
    for (auto [p, e] : f.factors) r *= checked_pow(p, e - 1) * (p - 1);
    return r;
}

std::vector<i64> divisors(i64 n) {
    Factored f = factor(n);
    std::vector<i64> ds = {1};
    for (auto [p, e] : f.factors) {
        size_t sz = ds.size();
        i64 pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

i64 checked_pow(i64 base, int exp) {
    if (exp < 0) throw std::domain_error("checked_pow: negative exponent");
    i128 r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > (i128)INT64_MAX || r < -(i128)INT64_MAX)
            throw std::overflow_error("checked_pow: overflow");
    }
    return (i64)r;
}

RootOfUnity::RootOfUnity(i64 num, i64 den) {
    if (den == 0) throw std::domain_error("RootOfUnity: zero denominator");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    num = mod_norm(num, den);
    i64 g = gcd_i64(num, den);
    if (num == 0) {
        num_ = 0;
        den_ = 1;
    } else {
        num_ = num / g;
        den_ = den / g;
    }
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    i64 d = lcm_i64(den_, o.den_);
    i64 n = (i64)(((i128)num_ * (d / den_) + (i128)o.num_ * (d / o.den_)) %
                  (i128)d);
    return RootOfUnity(n, d);
}

RootOfUnity RootOfUnity::inverse() const { return RootOfUnity(-num_, den_); }

RootOfUnity RootOfUnity::pow(i64 e) const {
    i64 em = mod_norm((i64)(((i128)e % den_ + den_) % den_), den_);
    return RootOfUnity((i64)((i128)num_ * em % den_), den_);
}

cplx RootOfUnity::value() const {
    double t = 2.0 * M_PI * (double)num_ / (double)den_;
    return {std::cos(t), std::sin(t)};
}

std::string RootOfUnity::str() const {
    if (is_one()) return "1";
    if (2 * num_ == den_) return "-1";
    return "e(" + std::to_string(num_) + "/" + std::to_string(den_) + ")";
}

}  // namespace cuspcoeff
