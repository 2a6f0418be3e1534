#pragma once

// Exact integer arithmetic: gcd/egcd, modular inverses, CRT, deterministic
// primality, factorization (trial division + Brent-Pollard rho), p-adic
// valuations, and exact roots of unity stored as reduced fractions of a turn.
//
// Everything here is 64-bit; levels and moduli in this library are desk-scale
// (N up to a few thousand, factorization inputs up to 2^63).

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cuspcoeff {

using i64 = long long;
using u64 = unsigned long long;
using i128 = __int128;
using cplx = std::complex<double>;

i64 gcd_i64(i64 a, i64 b);
i64 lcm_i64(i64 a, i64 b);
i64 lcm3_i64(i64 a, i64 b, i64 c);

// Extended gcd: returns g = gcd(a,b) and (x,y) with a*x + b*y = g.
struct Egcd {
    i64 g, x, y;
};
Egcd egcd(i64 a, i64 b);

// Representative of a mod m in [0, m).
i64 mod_norm(i64 a, i64 m);
i64 mod_mul(i64 a, i64 b, i64 m);
i64 mod_pow(i64 a, i64 e, i64 m);
// Inverse of a modulo m; throws std::domain_error if gcd(a,m) != 1.
i64 mod_inverse(i64 a, i64 m);

// Solve x = r1 (mod m1), x = r2 (mod m2). Returns (x, lcm(m1,m2)) with
// 0 <= x < lcm; throws std::domain_error if the congruences conflict.
std::pair<i64, i64> crt(i64 r1, i64 m1, i64 r2, i64 m2);

bool is_prime(u64 n);

struct Factored {
    i64 value = 1;
    std::vector<std::pair<i64, int>> factors;  // (p, e), primes increasing

    int exponent_of(i64 p) const;
    std::string str() const;
};

// Canonical factorization of n >= 1 (n <= 2^63 - 1).
Factored factor(i64 n);

// Largest e with p^e | n; n must be nonzero.
int vp(i64 n, i64 p);

// Split n >= 1 against N: n = n0 * n1 with gcd(n0, N) = 1 and n1 | N^inf.
struct CoprimeSplit {
    i64 n0, n1;
};
CoprimeSplit coprime_part(i64 n, i64 N);

// (n, p^inf): the p-power part of n.
i64 p_part(i64 n, i64 p);

i64 euler_phi(i64 n);
std::vector<i64> divisors(i64 n);

i64 checked_pow(i64 base, int exp);

// An exact root of unity e(num/den) = exp(2*pi*i*num/den), stored reduced
// with 0 <= num < den. Carrier for character values and p-adic additive
// character phases, so products of phases never round.
class RootOfUnity {
  public:
    RootOfUnity() : num_(0), den_(1) {}
    // Value e(num/den); den != 0.
    RootOfUnity(i64 num, i64 den);

    static RootOfUnity one() { return RootOfUnity(); }
    static RootOfUnity minus_one() { return RootOfUnity(1, 2); }

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_one() const { return num_ == 0; }
    bool is_real() const { return num_ == 0 || 2 * num_ == den_; }

    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity inverse() const;
    RootOfUnity conj() const { return inverse(); }
    RootOfUnity pow(i64 e) const;

    bool operator==(const RootOfUnity& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    cplx value() const;
    // Order in the group of roots of unity.
    i64 order() const { return den_; }
    std::string str() const;

  private:
    i64 num_, den_;
};

}  // namespace cuspcoeff
