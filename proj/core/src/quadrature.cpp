#include "cuspcoeff/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace cuspcoeff {

const std::vector<std::pair<double, double>>& gauss_legendre(int order) {
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    std::vector<std::pair<double, double>> nw(order);
    for (int i = 0; i < order; ++i) {
        // Newton iteration from the Chebyshev-angle initial guess.
        long double x =
            std::cos(M_PI * (i + 0.75L) / (order + 0.5L));
        for (int iter = 0; iter < 64; ++iter) {
            long double p0 = 1.0L, p1 = x;
            for (int k = 2; k <= order; ++k) {
                long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            long double dp = order * (x * p1 - p0) / (x * x - 1.0L);
            long double dx = p1 / dp;
            x -= dx;
            if (std::fabs((double)dx) < 1e-17) break;
        }
        long double p0 = 1.0L, p1 = x;
        for (int k = 2; k <= order; ++k) {
            long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        long double dp = order * (x * p1 - p0) / (x * x - 1.0L);
        nw[i] = {(double)x, (double)(2.0L / ((1.0L - x * x) * dp * dp))};
    }
    return cache.emplace(order, std::move(nw)).first->second;
}

double integrate_gl_panel(const std::function<double(double)>& f, double a,
                          double b, int order) {
    const auto& nw = gauss_legendre(order);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    long double s = 0.0L;
    for (auto [x, w] : nw) s += (long double)w * f(mid + half * x);
    return (double)(s * half);
}

cplx integrate_gl_panel_c(const std::function<cplx(double)>& f, double a,
                          double b, int order) {
    const auto& nw = gauss_legendre(order);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx s = 0.0;
    for (auto [x, w] : nw) s += w * f(mid + half * x);
    return s * half;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int n_panels, int order) {
    long double s = 0.0L;
    double h = (b - a) / n_panels;
    for (int i = 0; i < n_panels; ++i)
        s += integrate_gl_panel(f, a + i * h, a + (i + 1) * h, order);
    return (double)s;
}

namespace {

void adapt_rec(const std::function<double(double)>& f, double a, double b,
               double tol, int order, int depth, int max_depth, QuadResult& out) {
    double coarse = integrate_gl_panel(f, a, b, order);
    double fine = integrate_gl_panel(f, a, b, 2 * order);
    out.evaluations += 3 * order;
    double err = std::fabs(fine - coarse);
    if (err < tol || depth >= max_depth) {
        out.value += fine;
        out.error_estimate += err;
        if (depth >= max_depth && err >= tol) out.converged = false;
        return;
    }
    double mid = 0.5 * (a + b);
    adapt_rec(f, a, mid, tol * 0.5, order, depth + 1, max_depth, out);
    adapt_rec(f, mid, b, tol * 0.5, order, depth + 1, max_depth, out);
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double tol, int order, int max_depth) {
    QuadResult out;
    adapt_rec(f, a, b, tol, order, 0, max_depth, out);
    return out;
}

namespace {

// One tanh-sinh level: nodes at t = k*h, abscissa tanh(pi/2 sinh t). The
// distance to each endpoint is computed directly so nodes never collapse
// onto a singular endpoint.
template <typename T, typename F>
T ts_level_sum(const F& f, double a, double b, double h, bool odd_only,
               int& evals) {
    double half = 0.5 * (b - a);
    T s{};
    int step = odd_only ? 2 : 1;
    int k0 = odd_only ? 1 : 0;
    for (int k = k0;; k += step) {
        double t = k * h;
        double ch = std::cosh(t), sh = std::sinh(t);
        double u = M_PI_2 * sh;
        if (u > 37.5) break;  // node weight below roundoff for our uses
        double e2u = std::exp(-2.0 * u);
        double omt = 2.0 * e2u / (1.0 + e2u);  // 1 - tanh(u) exactly enough
        double w = M_PI_2 * ch / (std::cosh(u) * std::cosh(u));
        T val = f(b - half * omt) * w;
        ++evals;
        if (k != 0) {
            val = val + f(a + half * omt) * w;
            ++evals;
        }
        s = s + val;
    }
    return s;
}

template <typename T, typename Res, typename F>
Res ts_run(const F& f, double a, double b, double tol, int max_level) {
    Res out;
    double half = 0.5 * (b - a);
    double h = 1.0;
    int evals = 0;
    T sum = ts_level_sum<T>(f, a, b, h, false, evals);
    out.value = sum * (half * h);
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        sum = sum + ts_level_sum<T>(f, a, b, h, true, evals);
        T new_value = sum * (half * h);
        double delta = std::abs(new_value - T(out.value));
        out.value = new_value;
        out.error_estimate = delta;
        out.evaluations = evals;
        if (level >= 4 && delta < tol) return out;
    }
    out.converged = false;
    return out;
}

}  // namespace

QuadResult integrate_tanh_sinh(const std::function<double(double)>& f,
                               double a, double b, double tol, int max_level) {
    return ts_run<double, QuadResult>(f, a, b, tol, max_level);
}

ComplexQuadResult integrate_tanh_sinh_c(const std::function<cplx(double)>& f,
                                        double a, double b, double tol,
                                        int max_level) {
    return ts_run<cplx, ComplexQuadResult>(f, a, b, tol, max_level);
}

}  // namespace cuspcoeff
