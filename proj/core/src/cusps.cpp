#include "cuspcoeff/cusps.hpp"

#include <algorithm>

namespace cuspcoeff {

Mat2 Mat2::inverse_unimodular() const {
    if (det() != 1) throw std::domain_error("Mat2: determinant must be 1");
    return {d, -b, -c, a};
}

std::string Mat2::str() const {
    return "[" + std::to_string(a) + " " + std::to_string(b) + "; " +
           std::to_string(c) + " " + std::to_string(d) + "]";
}

Cusp Cusp::infinity(i64 level) { return Cusp{level, level, 1, 1}; }

std::string Cusp::str() const {
    if (is_infinity()) return "oo";
    return std::to_string(a) + "/" + std::to_string(q);
}

int WidthData::d_pi_of(i64 p) const {
    for (auto& [pp, e] : d_pi)
        if (pp == p) return e;
    return 0;
}

namespace {

// Canonical numerator: smallest a >= 1 with (a, N) = 1 and
// a * d_class = 1 (mod (q, N/q)).
i64 canonical_numerator(i64 level, i64 q, i64 d_class) {
    i64 gg = gcd_i64(q, level / q);
    i64 target = (gg == 1) ? 0 : mod_inverse(d_class, gg);
    for (i64 a = 1;; ++a) {
        if (gcd_i64(a, level) != 1) continue;
        if (gg == 1 || mod_norm(a, gg) == target) return a;
    }
}

// Lift an inverse of x (coprime to m) to a unit mod level; m | level.
i64 unit_lift_inverse(i64 x, i64 m, i64 level) {
    if (m == 1) return 1;
    i64 u0 = mod_inverse(x, m);
    for (i64 u = u0;; u += m) {
        i64 un = mod_norm(u, level) == 0 ? level : mod_norm(u, level);
        if (gcd_i64(un, level) == 1) return un;
        if (u > level + m) throw std::logic_error("unit lift failed");
    }
}

}  // namespace

std::vector<Cusp> enumerate_cusps(i64 level) {
    if (level < 1) throw std::domain_error("enumerate_cusps: level >= 1");
    std::vector<Cusp> out;
    for (i64 q : divisors(level)) {
        i64 gg = gcd_i64(q, level / q);
        for (i64 d = 1; d <= gg; ++d) {
            if (gcd_i64(d, gg) != 1) continue;
            Cusp c;
            c.level = level;
            c.q = q;
            c.d_class = (gg == 1) ? 1 : d;
            c.a = canonical_numerator(level, q, c.d_class);
            out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 width(i64 level, i64 q) {
    if (q < 1 || level % q != 0)
        throw std::domain_error("width: q must divide the level");
    return level / gcd_i64(q * q, level);
}

WidthData extended_width(i64 level, i64 conductor, i64 q) {
    if (q < 1 || level % q != 0)
        throw std::domain_error("extended_width: q must divide the level");
    if (conductor < 1 || level % conductor != 0)
        throw std::domain_error(
            "extended_width: conductor must divide the level");
    WidthData wd;
    wd.width = width(level, q);
    i64 lcm_form = lcm3_i64(conductor * q, q * q, level) / (q * q);
    i64 product_form =
        wd.width * (conductor / gcd_i64(q * wd.width, conductor));
    if (lcm_form != product_form)
        throw std::logic_error("extended_width: closed forms disagree");
    wd.extended_width = lcm_form;
    i64 prod = 1;
    for (auto [p, Np] : factor(level).factors) {
        int qp = vp(q, p);
        int Mp = vp(conductor, p);
        int dpi = std::max({2 * qp, Mp + qp, Np});
        wd.d_pi.emplace_back(p, dpi);
        prod *= checked_pow(p, dpi);
    }
    if (level > 1 && prod / (q * q) != wd.extended_width)
        throw std::logic_error("extended_width: exponent form disagrees");
    return wd;
}

ScalingMatrix scaling_matrix_for_fraction(i64 a, i64 q, i64 level) {
    if (q < 1) throw std::domain_error("scaling_matrix: q must be >= 1");
    if (gcd_i64(a, q) != 1)
        throw std::domain_error("scaling_matrix: fraction not reduced");
    // Completion d = a^{-1} mod (level * q) when possible; this pins the
    // e(nd/(delta q)) phase of the coefficient formulas. Fractions with
    // (a, level) > 1 fall back to the minimal completion mod q.
    i64 d;
    if (gcd_i64(a, level * q) == 1) {
        d = mod_inverse(mod_norm(a, level * q), level * q);
    } else if (q == 1) {
        d = 0;
    } else {
        d = mod_inverse(mod_norm(a, q), q);
    }
    i64 b = (a * d - 1) / q;
    if (a * d - b * q != 1) throw std::logic_error("scaling matrix not unimodular");
    ScalingMatrix sm;
    sm.sigma_inv = {a, b, q, d};
    sm.sigma = sm.sigma_inv.inverse_unimodular();
    return sm;
}

ScalingMatrix scaling_matrix(const Cusp& cusp) {
    if (cusp.is_infinity()) return ScalingMatrix{};
    return scaling_matrix_for_fraction(cusp.a, cusp.q, cusp.level);
}

Cusp reduce_to_standard_form(i64 a, i64 q, i64 level) {
    if (level < 1) throw std::domain_error("level must be >= 1");
    if (q < 0) {
        q = -q;
        a = -a;
    }
    if (q == 0) return Cusp::infinity(level);
    if (gcd_i64(a, q) != 1)
        throw std::domain_error("cusp fraction must be in lowest terms");
    i64 g = gcd_i64(q, level);
    if (g == level) return Cusp::infinity(level);
    // d0: inverse of a modulo q (anything for q = 1); the class of the cusp
    // is the orbit of [q : d0] in P^1(Z/N) under d -> d + tq and unit scaling.
    i64 d0 = (q == 1) ? 0 : mod_inverse(mod_norm(a, q), q);
    i64 q1 = mod_norm(q / g, level / g);
    i64 u = unit_lift_inverse(q1, level / g, level);
    i64 gg = gcd_i64(g, level / g);
    i64 d_class = (gg == 1) ? 1 : mod_norm(u * d0, gg);
    if (gg != 1 && gcd_i64(d_class, gg) != 1)
        throw std::logic_error("reduce_to_standard_form: class not a unit");
    Cusp c;
    c.level = level;
    c.q = g;
    c.d_class = d_class;
    c.a = canonical_numerator(level, g, d_class);
    return c;
}

bool cusps_equivalent(i64 a1, i64 q1, i64 a2, i64 q2, i64 level) {
    Cusp c1 = reduce_to_standard_form(a1, q1, level);
    Cusp c2 = reduce_to_standard_form(a2, q2, level);
    return c1 == c2;
}

BruhatFactors bruhat_decompose(const ScalingMatrix& sm) {
    i64 q = sm.sigma_inv.c;
    if (q == 0)
        throw std::domain_error("bruhat_decompose: infinity has no Bruhat cell");
    i64 a = sm.sigma_inv.a, d = sm.sigma_inv.d;
    BruhatFactors f;
    f.z_scalar = Rat(q);
    f.n_left = Rat(-d, q);
    f.a_diag = Rat(1, (i128)q * q);
    f.n_right = Rat(-a, q);
    RatMat2 z{f.z_scalar, Rat(0), Rat(0), f.z_scalar};
    RatMat2 nl{Rat(1), f.n_left, Rat(0), Rat(1)};
    RatMat2 ad{f.a_diag, Rat(0), Rat(0), Rat(1)};
    RatMat2 w{Rat(0), Rat(1), Rat(-1), Rat(0)};
    RatMat2 nr{Rat(1), f.n_right, Rat(0), Rat(1)};
    f.recomposed = z * nl * ad * w * nr;
    RatMat2 sigma{Rat(sm.sigma.a), Rat(sm.sigma.b), Rat(sm.sigma.c),
                  Rat(sm.sigma.d)};
    if (!(f.recomposed == sigma))
        throw std::logic_error("bruhat_decompose: factors do not recompose");
    return f;
}

}  // namespace cuspcoeff
