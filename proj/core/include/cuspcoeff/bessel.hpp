#pragma once

// Bessel kernels: J_n for integer order (series / asymptotic / Miller
// recurrence), K_{it} and J_{it} for purely imaginary order. The imaginary
// order routines serve the Maass-form kernels and are validated against an
// independent series evaluation in the tests.

#include "cuspcoeff/arith.hpp"

namespace cuspcoeff {

double bessel_j0(double x);
double bessel_j1(double x);
// J_n(x) for n >= 0, x >= 0. Miller's downward recurrence above the series
// region, so it is uniformly accurate for all n used here.
double bessel_jn(int n, double x);

// K_{i t}(x) for x > 0: real-valued; integral representation
// K_{it}(x) = int_0^inf exp(-x cosh u) cos(t u) du with adaptive truncation.
double bessel_k_imag(double t, double x);

// J_{2 i t}(x) via the ascending series; complex-valued. Intended for
// small-to-moderate x (unit tests and the oscillatory Maass Hankel kernel).
cplx bessel_j_imag(double two_t, double x);

// log Gamma(z) for complex z (Lanczos); exposed for the test oracles.
cplx lgamma_complex(cplx z);

}  // namespace cuspcoeff
