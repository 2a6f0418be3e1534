#include "cuspcoeff/bessel.hpp"

#include <cmath>
#include <vector>

#include "cuspcoeff/quadrature.hpp"

namespace cuspcoeff {

namespace {

// Ascending series, long double accumulation. Good to ~1e-14 relative for
// x <= 16 at small order.
long double jn_series(int n, long double x) {
    long double half = x / 2.0L;
    long double term = 1.0L;
    for (int k = 1; k <= n; ++k) term *= half / k;
    long double sum = term;
    long double x2 = -half * half;
    long double peak = std::fabs(term);
    for (int m = 1; m < 400; ++m) {
        term *= x2 / (m * (long double)(m + n));
        sum += term;
        peak = std::max(peak, std::fabs(term));
        if (std::fabs(term) < 1e-30L * (1.0L + peak)) break;
    }
    return sum;
}

// Hankel asymptotic expansion for large x, order 0 or 1.
double jn_asymptotic(int n, double x) {
    long double mu = 4.0L * n * n;
    long double p = 1.0L, q = (mu - 1.0L) / (8.0L * x);
    long double term_p = 1.0L, term_q = q;
    long double xx = 8.0L * x;
    for (int k = 1; k < 12; ++k) {
        // P: even factors, Q: odd factors
        long double f1 = mu - (long double)(4 * k - 3) * (4 * k - 3);
        long double f2 = mu - (long double)(4 * k - 1) * (4 * k - 1);
        term_p *= -f1 * f2 / ((2 * k - 1) * (2 * k) * xx * xx);
        p += term_p;
        long double g1 = mu - (long double)(4 * k - 1) * (4 * k - 1);
        long double g2 = mu - (long double)(4 * k + 1) * (4 * k + 1);
        term_q *= -g1 * g2 / ((2 * k) * (2 * k + 1) * xx * xx);
        q += term_q;
    }
    long double omega = x - n * M_PI_2 - M_PI_4;
    return (double)(std::sqrt(2.0L / (M_PI * x)) *
                    (p * std::cos(omega) - q * std::sin(omega)));
}

}  // namespace

double bessel_j0(double x) {
    x = std::fabs(x);
    if (x < 15.0) return (double)jn_series(0, x);
    return jn_asymptotic(0, x);
}

double bessel_j1(double x) {
    double s = x < 0 ? -1.0 : 1.0;
    x = std::fabs(x);
    if (x < 15.0) return s * (double)jn_series(1, x);
    return s * jn_asymptotic(1, x);
}

double bessel_jn(int n, double x) {
    if (n < 0) throw std::domain_error("bessel_jn: order must be >= 0");
    if (x < 0) {
        double v = bessel_jn(n, -x);
        return (n % 2) ? -v : v;
    }
    if (n == 0) return bessel_j0(x);
    if (n == 1) return bessel_j1(x);
    if (x == 0.0) return 0.0;
    if (x < 16.0 && n < 40) return (double)jn_series(n, x);
    if (x > (double)n * n) {
        // upward recurrence is stable while n stays well below x
        double jm1 = bessel_j0(x), j = bessel_j1(x);
        for (int k = 1; k < n; ++k) {
            double jp1 = (2.0 * k / x) * j - jm1;
            jm1 = j;
            j = jp1;
        }
        return j;
    }
    // Miller's algorithm: downward recurrence with sum normalization. The
    // start index sits far enough above the turning point max(n, x) that the
    // seeded error contracts below double roundoff.
    double turn = std::max((double)n, x);
    int m0 = (int)turn + 40 + (int)(6.0 * std::cbrt(turn));
    if (m0 % 2) ++m0;
    long double jp1 = 0.0L, j = 1e-30L;
    long double norm = 0.0L, result = 0.0L;
    for (int k = m0; k >= 1; --k) {
        long double jm1 = (2.0L * k / x) * j - jp1;
        jp1 = j;
        j = jm1;
        if (k - 1 == n) result = j;
        if ((k - 1) % 2 == 0) norm += (k - 1 == 0) ? j : 2.0L * j;
        if (std::fabs((double)j) > 1e280) {
            j *= 1e-280L;
            jp1 *= 1e-280L;
            norm *= 1e-280L;
            result *= 1e-280L;
        }
    }
    return (double)(result / norm);
}

double bessel_k_imag(double t, double x) {
    if (x <= 0) throw std::domain_error("bessel_k_imag: x must be > 0");
    t = std::fabs(t);
    // exp(-x cosh u) is below 1e-21 * exp(-x) once x(cosh u - 1) > 48.
    double umax = std::acosh(1.0 + 48.0 / x);
    auto f = [&](double u) { return std::exp(-x * std::cosh(u)) * std::cos(t * u); };
    int panels = std::max<int>(8, (int)(umax * (1.0 + t) / 1.5) + 1);
    return integrate_gl(f, 0.0, umax, panels, 24);
}

cplx lgamma_complex(cplx z) {
    // Lanczos, g = 7, 9 coefficients.
    static const double c[9] = {0.99999999999980993,  676.5203681218851,
                                -1259.1392167224028,  771.32342877765313,
                                -176.61502916214059,  12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6,
                                1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        cplx s = std::log(M_PI / std::sin(M_PI * z));
        return s - lgamma_complex(1.0 - z);
    }
    z -= 1.0;
    cplx a = c[0];
    cplx tt = z + 7.5;
    for (int i = 1; i < 9; ++i) a += c[i] / (z + (double)i);
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(tt) - tt +
           std::log(a);
}

cplx bessel_j_imag(double two_t, double x) {
    if (x < 0) throw std::domain_error("bessel_j_imag: x must be >= 0");
    cplx nu(0.0, two_t);
    if (x == 0.0) return (two_t == 0.0) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    cplx half_pow = std::exp(nu * std::log(x / 2.0));
    cplx term = half_pow * std::exp(-lgamma_complex(nu + 1.0));
    cplx sum = term;
    double q = -0.25 * x * x;
    for (int m = 1; m < 400; ++m) {
        term *= q / (cplx((double)m, 0.0) * (nu + (double)m));
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

}  // namespace cuspcoeff
