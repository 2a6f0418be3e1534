#pragma once

// Gauss-Legendre panels and tanh-sinh (double-exponential) quadrature.
// Two independent rules so transform evaluations can be cross-validated.

#include <functional>
#include <vector>

#include "cuspcoeff/arith.hpp"

namespace cuspcoeff {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
    bool converged = true;
};

struct ComplexQuadResult {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;
    int evaluations = 0;
    bool converged = true;
};

// Nodes and weights on [-1, 1]; cached per order.
const std::vector<std::pair<double, double>>& gauss_legendre(int order);

double integrate_gl_panel(const std::function<double(double)>& f, double a,
                          double b, int order);
cplx integrate_gl_panel_c(const std::function<cplx(double)>& f, double a,
                          double b, int order);

// Composite Gauss-Legendre over [a, b] split into n_panels equal panels.
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int n_panels, int order);

// Adaptive: order-`order` vs order-`2*order` panel disagreement drives
// bisection until the summed estimate is below tol.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double tol, int order = 16,
                              int max_depth = 18);

// tanh-sinh rule on (a, b) with level doubling; error from level-to-level
// agreement. Handles endpoint singularities gracefully.
QuadResult integrate_tanh_sinh(const std::function<double(double)>& f,
                               double a, double b, double tol,
                               int max_level = 12);

ComplexQuadResult integrate_tanh_sinh_c(const std::function<cplx(double)>& f,
                                        double a, double b, double tol,
                                        int max_level = 12);

}  // namespace cuspcoeff
