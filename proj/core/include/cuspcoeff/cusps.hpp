#pragma once

// Cusps of Gamma_0(N): enumeration by classes [q:d], widths and extended
// widths, scaling matrices, standard-form reduction and equivalence testing.

#include <map>
#include <string>
#include <vector>

#include "cuspcoeff/arith.hpp"
#include "cuspcoeff/rational.hpp"

namespace cuspcoeff {

struct Mat2 {
    i64 a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]

    i64 det() const { return a * d - b * c; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                c * o.b + d * o.d};
    }
    Mat2 inverse_unimodular() const;  // requires det = 1
    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    std::string str() const;
};

// A cusp of Gamma_0(N) in standard form: denominator q | N and class
// d in (Z/(q, N/q))^x, with canonical representative fraction a/q where
// (a, N) = 1 and a*d = 1 mod (q, N/q). The infinity cusp is the unique
// class of denominator N and is printed "oo".
struct Cusp {
    i64 level = 1;
    i64 q = 1;
    i64 d_class = 1;
    i64 a = 1;  // representative numerator; the fraction is a/q

    static Cusp infinity(i64 level);
    bool is_infinity() const { return q == level; }
    std::string str() const;
    bool operator==(const Cusp& o) const {
        return level == o.level && q == o.q && d_class == o.d_class;
    }
    bool operator<(const Cusp& o) const {
        return q != o.q ? q < o.q : d_class < o.d_class;
    }
};

// sigma with sigma * cusp = infinity; sigma_inv = (a b; q d) in SL2(Z) has
// the cusp fraction in its first column. For the infinity cusp both are the
// identity. The completion is pinned by d = a^{-1} mod (level * q), which
// fixes the phase conventions of the coefficient formulas downstream.
struct ScalingMatrix {
    Mat2 sigma;
    Mat2 sigma_inv;
};

struct WidthData {
    i64 width = 1;
    i64 extended_width = 1;
    // p -> d_{pi_p}(q_p) = max(2 q_p, M_p + q_p, N_p) over p | N.
    std::vector<std::pair<i64, int>> d_pi;

    int d_pi_of(i64 p) const;
};

std::vector<Cusp> enumerate_cusps(i64 level);

// N / (q^2, N); q must divide N.
i64 width(i64 level, i64 q);

// Extended width [Mq, q^2, N] / q^2 for a nebentypus conductor M | N,
// cross-checked against the product form prod p^{d_pi_p(q_p)} / q^2.
WidthData extended_width(i64 level, i64 conductor, i64 q);

ScalingMatrix scaling_matrix(const Cusp& cusp);

// Scaling matrix for an arbitrary fraction a/q (gcd(a,q)=1, q>=1) without
// standard-form reduction; first column (a, q), completion d = a^{-1}
// mod (level * q).
ScalingMatrix scaling_matrix_for_fraction(i64 a, i64 q, i64 level);

// Standard form of the cusp a/q (gcd(a,q) = 1; q = 0 denotes infinity).
Cusp reduce_to_standard_form(i64 a, i64 q, i64 level);

// True iff some gamma in Gamma_0(N) maps a1/q1 to a2/q2 (q = 0 is infinity).
bool cusps_equivalent(i64 a1, i64 q1, i64 a2, i64 q2, i64 level);

// Bruhat factorization sigma = z(q) n(-d/q) a(1/q^2) w n(-a/q) as exact
// rationals; throws for the infinity cusp (no Bruhat cell).
struct BruhatFactors {
    Rat z_scalar;       // q
    Rat n_left;         // -d/q
    Rat a_diag;         // 1/q^2
    Rat n_right;        // -a/q
    RatMat2 recomposed; // product of the five factors, equals sigma
};
BruhatFactors bruhat_decompose(const ScalingMatrix& sm);

}  // namespace cuspcoeff
